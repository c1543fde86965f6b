use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// A colon-expansion inside another colon-expansion.
    NestedColonExpansion,
    /// A parenthetical directly inside another, away from its edges.
    NestedParenthetical,
}

/// A nesting violation found by expansion selection in strict mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Slash-separated dependent indices from the root, e.g. `/1/0`.
    pub path: String,
    pub lexeme: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::NestedColonExpansion => "colon-expansion nested inside a colon-expansion",
            ViolationKind::NestedParenthetical => "parenthetical nested directly inside a parenthetical",
        };
        let path = if self.path.is_empty() { "/" } else { &self.path };
        write!(f, "{what} at {path} ({:?})", self.lexeme)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Violation(Violation),
    /// Sibling dependents share an order key, or a lexeme is inconsistent.
    MalformedTree { path: String, reason: String },
    /// A phrase carrying punctuation features produced no tokens.
    EmptyPhrase { path: String },
    EmptyList,
    IndexOutOfRange { index: usize, len: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Violation(v) => write!(f, "{v}"),
            Error::MalformedTree { path, reason } => write!(f, "malformed tree at {path}: {reason}"),
            Error::EmptyPhrase { path } => write!(f, "phrase at {path} has punctuation features but no words"),
            Error::EmptyList => f.write_str("list block has no items"),
            Error::IndexOutOfRange { index, len } => write!(f, "token index {index} out of range for {len} tokens"),
        }
    }
}

impl core::error::Error for Error {}

impl core::error::Error for Violation {}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Violation(v)
    }
}
