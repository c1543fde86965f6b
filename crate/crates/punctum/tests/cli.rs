use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn punctum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_punctum")).args(args).output().expect("binary runs")
}

fn case_input(id: &str) -> String {
    punctum::shipped_corpus().join(id).join("input.json").to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn realize_tagged_worked_example() {
    let out = punctum(&["realize", "--input", &case_input("worked-example-in-discourse-parens"), "--format", "tagged"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "(Three programmers\u{2014}including \u{201c}Mr. Q.A.,\u{201d} from CoGenTex\u{2014}will work on <i>Project X.Y.Z.</i>)\n"
    );
}

#[test]
fn realize_flags() {
    let input = case_input("period-absorbs-final-dash");
    let out = punctum(&["realize", "--input", &input, "--ascii-dash"]);
    assert_eq!(stdout(&out), "Max fell--John had kicked him.\n");
    let input = case_input("separator-commas-transpose");
    let out = punctum(&["realize", "--input", &input, "--quote-style", "precise"]);
    assert!(stdout(&out).contains("his duty\u{201d}, John"));
    let input = case_input("harmony-italic-semicolon");
    let out = punctum(&["realize", "--input", &input, "--format", "tagged", "--no-harmony"]);
    assert_eq!(stdout(&out), "<i>Luke 4:16a</i>;\n");
    let input = case_input("title-question-absorbs-sentence-question");
    let out = punctum(&["realize", "--input", &input, "--no-tone-absorption"]);
    assert_eq!(stdout(&out), "When did she write What Next??\n");
}

#[test]
fn realize_is_deterministic() {
    let input = case_input("quote-alternation-in-discourse");
    let a = punctum(&["realize", "--input", &input, "--format", "directive"]);
    let b = punctum(&["realize", "--input", &input, "--format", "directive"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_reports_nested_colon_expansion() {
    let input = case_input("nested-colon-expansion-becomes-dash");
    let out = punctum(&["check", "--input", &input]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains("colon-expansion nested inside a colon-expansion at /0/2/0"), "{text}");
    assert!(text.contains("catfish sushi"));
    let strict = punctum(&["realize", "--input", &input, "--strict-expansions"]);
    assert_eq!(strict.status.code(), Some(3));
}

#[test]
fn check_accepts_clean_input() {
    let out = punctum(&["check", "--input", &case_input("semicolon-absorbs-comma")]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn shipped_corpus_passes() {
    let dir = punctum::shipped_corpus();
    let out = punctum(&["corpus", "--dir", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
}

fn write_case(root: &Path, id: &str, input: &str, expected: &str) {
    let dir = root.join(id);
    fs::create_dir_all(&dir).unwrap();
    fs::write(dir.join("input.json"), input).unwrap();
    fs::write(dir.join("expected.plain.txt"), expected).unwrap();
}

#[test]
fn corpus_mismatch_prints_diff() {
    let tmp = tempfile::tempdir().unwrap();
    let input = r#"{"blocks":[{"type":"sentence","tree":{"lexeme":"Stop"}}]}"#;
    write_case(tmp.path(), "a-good", input, "Stop.\n");
    write_case(tmp.path(), "b-bad", input, "Go.\n");
    let out = punctum(&["corpus", "--dir", tmp.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains("b-bad [plain]"));
    assert!(text.contains("-Go."));
    assert!(text.contains("+Stop."));
    assert!(!text.contains("a-good ["));
}

#[test]
fn corpus_forbidden_string_fails() {
    let tmp = tempfile::tempdir().unwrap();
    let input = r#"{"blocks":[{"type":"sentence","tree":{"lexeme":"Stop"}}]}"#;
    write_case(tmp.path(), "x", input, "Stop.");
    fs::write(tmp.path().join("x").join("forbidden.txt"), "Stop.\n").unwrap();
    let out = punctum(&["corpus", "--dir", tmp.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("forbidden"));
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.json");
    fs::write(&bad, r#"{"blocks":[{"type":"sentence","tree":{"lexeme":"x","attrs":{"bogus":1}}}]}"#).unwrap();
    let out = punctum(&["realize", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bogus"), "{err}");

    let missing = tmp.path().join("missing.json");
    assert_eq!(punctum(&["realize", "--input", missing.to_str().unwrap()]).status.code(), Some(4));
    assert_eq!(punctum(&["realize"]).status.code(), Some(1));
    assert_eq!(punctum(&["realize", "--input", "x", "--format", "html"]).status.code(), Some(1));
    assert_eq!(punctum(&["--help"]).status.code(), Some(0));

    let dup = tmp.path().join("dup.json");
    fs::write(
        &dup,
        r#"{"blocks":[{"type":"sentence","tree":{"lexeme":"x","rels":[
            {"rel":"a","pos":"after","order":1,"child":{"lexeme":"y"}},
            {"rel":"b","pos":"after","order":1,"child":{"lexeme":"z"}}]}}]}"#,
    )
    .unwrap();
    assert_eq!(punctum(&["realize", "--input", dup.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(punctum(&["check", "--input", dup.to_str().unwrap()]).status.code(), Some(3));
}
