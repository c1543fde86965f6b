//! File formats, the golden corpus runner and the command-line front end
//! for `punctum-core`.

pub mod corpus;
pub mod error;
pub mod input;

pub use error::{AppError, ParseError};
pub use input::{parse_config, parse_document};

use std::path::{Path, PathBuf};

/// Directory of the corpus shipped with this crate.
pub fn shipped_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join("cases")
}
