use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use punctum::corpus;
use punctum::{parse_document, AppError};
use punctum_core::{syntax, text, Block, Config, ExpansionMode, OutputFormat, QuoteStyle, SentenceRole, SyntTree};

#[derive(Parser)]
#[command(name = "punctum", version, about = "Punctuate and format annotated dependency trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Tagged,
    Directive,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuoteArg {
    American,
    Precise,
}

#[derive(Subcommand)]
enum Command {
    /// Realize a document and print it.
    Realize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
        #[arg(long, value_enum, default_value = "american")]
        quote_style: QuoteArg,
        #[arg(long)]
        no_harmony: bool,
        #[arg(long)]
        strict_expansions: bool,
        #[arg(long)]
        ascii_dash: bool,
        /// Keep a sentence-final tone after an identical tone.
        #[arg(long)]
        no_tone_absorption: bool,
        /// Skip promotion when only the last item qualifies, and below a promoted series.
        #[arg(long)]
        promotion_refinements: bool,
    },
    /// Report expansion nesting violations and structural errors.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Replay a golden corpus directory.
    Corpus {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn load(path: &Path) -> Result<punctum_core::Document, AppError> {
    let text = fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
    parse_document(&text).map_err(|source| AppError::Parse { file: path.to_path_buf(), source })
}

fn trees(block: &Block) -> Vec<(SyntTree, SentenceRole)> {
    match block {
        Block::Sentence { tree, role, .. } => vec![(tree.clone(), *role)],
        Block::Group { sentences, .. } => sentences.iter().map(|s| (s.clone(), SentenceRole::Independent)).collect(),
        Block::List(list) if list.single_sentence => vec![(text::list_tree(list), SentenceRole::Independent)],
        Block::List(list) => std::iter::once((list.intro.clone(), SentenceRole::Fragment))
            .chain(list.items.iter().map(|i| (i.clone(), SentenceRole::Independent)))
            .collect(),
    }
}

fn check(path: &Path) -> Result<Vec<String>, AppError> {
    let doc = load(path)?;
    let mut problems = Vec::new();
    for (b, block) in doc.blocks.iter().enumerate() {
        if let Block::List(list) = block {
            if list.items.is_empty() {
                problems.push(format!("block {b}: {}", punctum_core::Error::EmptyList));
            }
        }
        for (s, (tree, role)) in trees(block).iter().enumerate() {
            match syntax::check_expansions(tree) {
                Ok(violations) => problems.extend(violations.iter().map(|v| format!("block {b} sentence {s}: {v}"))),
                Err(e) => problems.push(format!("block {b} sentence {s}: {e}")),
            }
            if tree.lexeme.is_empty() && tree.rels.is_empty() {
                continue;
            }
            if let Err(e) = syntax::linearize(tree, *role) {
                problems.push(format!("block {b} sentence {s}: {e}"));
            }
        }
    }
    Ok(problems)
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Realize { input, format, quote_style, no_harmony, strict_expansions, ascii_dash, no_tone_absorption, promotion_refinements } => {
            let cfg = Config {
                quote_style: match quote_style {
                    QuoteArg::American => QuoteStyle::American,
                    QuoteArg::Precise => QuoteStyle::Precise,
                },
                harmony: !no_harmony,
                tone_italic_absorption: !no_tone_absorption,
                expansion_mode: if strict_expansions { ExpansionMode::Strict } else { ExpansionMode::Rewrite },
                promotion_refinements,
                ascii_dash,
                ..Config::default()
            }
            .with_format(match format {
                FormatArg::Plain => OutputFormat::Plain,
                FormatArg::Tagged => OutputFormat::Tagged,
                FormatArg::Directive => OutputFormat::Directive,
            });
            let doc = load(&input)?;
            let out = text::realize_document(&doc, &cfg)?;
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{out}").map_err(|e| AppError::io("<stdout>", e))?;
            Ok(())
        }
        Command::Check { input } => {
            let problems = check(&input)?;
            for p in &problems {
                println!("{p}");
            }
            if problems.is_empty() {
                Ok(())
            } else {
                Err(AppError::Corpus(format!("{} problem(s) found", problems.len())))
            }
        }
        Command::Corpus { dir } => {
            let cases = corpus::load_dir(&dir)?;
            let reports: Vec<_> = cases.iter().map(corpus::run_case).collect();
            let failed = reports.iter().filter(|r| !r.passed()).count();
            print!("{}", corpus::describe(&reports));
            println!("{} case(s), {} failed", reports.len(), failed);
            if failed == 0 {
                Ok(())
            } else {
                Err(AppError::Corpus(format!("{failed} corpus case(s) failed")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("punctum: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
