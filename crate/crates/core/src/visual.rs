//! Font and face live in an overlay beside the token stream, never in it, so
//! that adjacency-based rules cannot be disturbed by formatting changes.

use alloc::vec::Vec;

use crate::error::Error;
use crate::model::VisualAttrs;

/// Half-open range of word indices `[start, end)` set in `attrs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub attrs: VisualAttrs,
}

impl Span {
    pub fn new(start: usize, end: usize, attrs: VisualAttrs) -> Self {
        Span { start, end, attrs }
    }

    pub fn contains(&self, index: usize) -> bool {
        self.start <= index && index < self.end
    }

    pub fn len(&self) -> usize {
        self.end.saturating_sub(self.start)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Visual structure for one sentence.
///
/// `spans` index words (the n-th [`Token::Word`](crate::Token::Word) of the
/// stream, not stream positions). `mark_attrs` is filled by harmony and keys
/// mark attributes by their position in the final pointed sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VisualOverlay {
    pub words: usize,
    pub spans: Vec<Span>,
    pub mark_attrs: Vec<(usize, VisualAttrs)>,
}

impl VisualOverlay {
    pub fn new(words: usize) -> Self {
        VisualOverlay { words, ..VisualOverlay::default() }
    }

    /// Attributes of word `index`: the innermost covering span wins (the
    /// later one on equal width); uncovered words are roman/regular.
    pub fn resolve(&self, index: usize) -> Result<VisualAttrs, Error> {
        if index >= self.words {
            return Err(Error::IndexOutOfRange { index, len: self.words });
        }
        let mut best: Option<&Span> = None;
        for span in self.spans.iter().filter(|s| s.contains(index)) {
            if best.is_none_or(|b| span.len() <= b.len()) {
                best = Some(span);
            }
        }
        Ok(best.map(|s| s.attrs).unwrap_or_default())
    }

    pub fn resolve_all(&self) -> Vec<VisualAttrs> {
        (0..self.words).map(|i| self.resolve(i).unwrap_or_default()).collect()
    }

    pub fn mark_attr(&self, position: usize) -> VisualAttrs {
        self.mark_attrs.iter().find(|(p, _)| *p == position).map(|(_, a)| *a).unwrap_or_default()
    }

    /// The same overlay without span `index`.
    pub fn without_span(&self, index: usize) -> VisualOverlay {
        let mut out = self.clone();
        if index < out.spans.len() {
            out.spans.remove(index);
        }
        out
    }
}
