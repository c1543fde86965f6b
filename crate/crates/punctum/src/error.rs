use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),
}

#[derive(Debug, Error)]
pub enum AppError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{file}: {source}")]
    Parse { file: PathBuf, source: ParseError },
    #[error(transparent)]
    Realize(#[from] punctum_core::Error),
    #[error("{0}")]
    Corpus(String),
}

impl AppError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        AppError::Io { path: path.into(), source }
    }

    /// Process exit status: 2 parse, 3 validation, 4 internal or I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Parse { .. } => 2,
            AppError::Realize(_) | AppError::Corpus(_) => 3,
            AppError::Io { .. } => 4,
        }
    }
}
