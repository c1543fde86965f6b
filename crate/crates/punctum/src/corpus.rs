//! Golden-file corpus. Each case is a directory holding `input.json`, one
//! `expected.<format>.txt` per checked format, and optionally
//! `forbidden.txt` (one string per line that no format may produce) and
//! `config.json` (configuration overrides).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use punctum_core::{text, Config, Document, OutputFormat};
use similar::TextDiff;

use crate::error::AppError;
use crate::input::{parse_config, parse_document, ConfigOverrides};

#[derive(Debug, Clone)]
pub struct Case {
    pub id: String,
    pub dir: PathBuf,
    pub document: Document,
    pub config: Config,
    pub expected: Vec<(OutputFormat, String)>,
    pub forbidden: Vec<String>,
}

fn read(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path).map_err(|e| AppError::io(path, e))
}

/// Drops the single line break editors like to leave at the end of a file.
fn strip_final_newline(mut s: String) -> String {
    if s.ends_with('\n') {
        s.pop();
        if s.ends_with('\r') {
            s.pop();
        }
    }
    s
}

impl Case {
    pub fn load(dir: &Path) -> Result<Case, AppError> {
        let id = dir.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        let input_path = dir.join("input.json");
        let document = parse_document(&read(&input_path)?).map_err(|source| AppError::Parse { file: input_path, source })?;
        let config_path = dir.join("config.json");
        let overrides = if config_path.exists() {
            parse_config(&read(&config_path)?).map_err(|source| AppError::Parse { file: config_path, source })?
        } else {
            ConfigOverrides::default()
        };
        let config = overrides.apply(Config::default());
        let mut expected = Vec::new();
        for format in OutputFormat::ALL {
            let path = dir.join(format!("expected.{}.txt", format.name()));
            if path.exists() {
                expected.push((format, strip_final_newline(read(&path)?)));
            }
        }
        let forbidden_path = dir.join("forbidden.txt");
        let forbidden = if forbidden_path.exists() {
            read(&forbidden_path)?.lines().filter(|l| !l.trim().is_empty()).map(str::to_owned).collect()
        } else {
            Vec::new()
        };
        Ok(Case { id, dir: dir.to_path_buf(), document, config, expected, forbidden })
    }

    pub fn realize(&self, format: OutputFormat) -> Result<String, punctum_core::Error> {
        text::realize_document(&self.document, &self.config.with_format(format))
    }
}

/// All cases under `dir`, sorted by id.
pub fn load_dir(dir: &Path) -> Result<Vec<Case>, AppError> {
    let entries = fs::read_dir(dir).map_err(|e| AppError::io(dir, e))?;
    let mut dirs = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| AppError::io(dir, e))?;
        if entry.path().join("input.json").is_file() {
            dirs.push(entry.path());
        }
    }
    dirs.sort();
    dirs.iter().map(|d| Case::load(d)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Mismatch { format: OutputFormat, expected: String, actual: String },
    Forbidden { format: OutputFormat, text: String },
    Error { format: OutputFormat, message: String },
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub id: String,
    pub failures: Vec<Failure>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_case(case: &Case) -> CaseReport {
    let mut failures = Vec::new();
    for format in OutputFormat::ALL {
        let actual = match case.realize(format) {
            Ok(s) => s,
            Err(e) => {
                failures.push(Failure::Error { format, message: e.to_string() });
                continue;
            }
        };
        if let Some((_, expected)) = case.expected.iter().find(|(f, _)| *f == format) {
            if *expected != actual {
                failures.push(Failure::Mismatch { format, expected: expected.clone(), actual: actual.clone() });
            }
        }
        for text in &case.forbidden {
            if actual.contains(text.as_str()) {
                failures.push(Failure::Forbidden { format, text: text.clone() });
            }
        }
    }
    CaseReport { id: case.id.clone(), failures }
}

pub fn unified_diff(expected: &str, actual: &str) -> String {
    TextDiff::from_lines(expected, actual)
        .unified_diff()
        .header("expected", "actual")
        .to_string()
}

/// Human-readable report of the failing cases; empty when all pass.
pub fn describe(reports: &[CaseReport]) -> String {
    let mut out = String::new();
    for report in reports.iter().filter(|r| !r.passed()) {
        for failure in &report.failures {
            match failure {
                Failure::Mismatch { format, expected, actual } => {
                    let _ = writeln!(out, "{} [{}]: output differs", report.id, format);
                    let _ = write!(out, "{}", unified_diff(&format!("{expected}\n"), &format!("{actual}\n")));
                }
                Failure::Forbidden { format, text } => {
                    let _ = writeln!(out, "{} [{}]: produced forbidden string {:?}", report.id, format, text);
                }
                Failure::Error { format, message } => {
                    let _ = writeln!(out, "{} [{}]: {}", report.id, format, message);
                }
            }
        }
    }
    out
}
