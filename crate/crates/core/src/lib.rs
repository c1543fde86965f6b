//! Punctuation presentation engine.
//!
//! Turns dependency trees annotated with phrasal and lexical presentation
//! features into punctuated, formatted surface strings. The rules are split
//! into three strata, each a function between distinct structure types:
//!
//! * [`syntax`]: hierarchy-sensitive rules on [`SyntTree`] (comma promotion,
//!   enclosure alternation, expansion selection, default punctuation), then
//!   linearization into a [`LinearSeq`] with boundary features.
//! * [`morph`]: adjacency-sensitive point insertion, turning boundary
//!   features into at most one point per insertion site ([`PointedSeq`]).
//! * [`graph`]: graphical rules (quote transposition, graphic absorption,
//!   font/face harmony) and rendering.
//!
//! Because each stratum only accepts the output type of the previous one,
//! rule ordering across strata never needs to be stated. [`text`] drives the
//! pipeline per sentence and handles discourse-level brackets and lists.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod config;
pub mod error;
pub mod graph;
pub mod model;
pub mod morph;
pub mod syntax;
pub mod text;
pub mod visual;

pub use config::{Config, ExpansionMode, OutputFormat, QuoteStyle};
pub use error::{Error, Violation, ViolationKind};
pub use model::{
    Bracket, BracketShape, Edge, Enclosure, EnclosureSpec, Face, Font, Lexeme, LinearSeq,
    LinearToken, Mark, MarkKind, Origin, PhraseAttrs, PointKind, PointedSeq, Position, Relation,
    SentenceRole, SeriesAttrs, Side, SyntTree, Token, ToneIndicator, VisualAttrs,
};
pub use text::{Block, Document, ListBlock, ListStyle, Enumerator};
pub use visual::{Span, VisualOverlay};
