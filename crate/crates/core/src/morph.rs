//! Point insertion. Each gap between tokens is an insertion site; all point
//! features meeting there compete and at most one is presented.

use alloc::vec::Vec;

use crate::config::Config;
use crate::model::{
    Bracket, LinearSeq, LinearToken, Mark, MarkKind, Origin, PointKind, PointedSeq, Side, Token,
};

/// The marks meeting at one gap, in textual order: the right features of
/// the token before the gap, then the left features of the token after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionSite {
    /// Gap index: 0 before the first token, `n` after the last.
    pub position: usize,
    pub stream: Vec<Mark>,
}

impl InsertionSite {
    pub fn candidates(&self) -> Vec<PointKind> {
        self.stream.iter().filter_map(Mark::as_point).collect()
    }

    pub fn brackets(&self) -> Vec<Bracket> {
        self.stream.iter().filter_map(Mark::as_bracket).collect()
    }

    /// Whether the mark at `index` of the stream lies inside a bracket
    /// whose boundary is at this site: a close bracket follows it, or an
    /// open bracket precedes it.
    pub fn in_bracket_scope(&self, index: usize) -> bool {
        let side_at = |i: usize| self.stream[i].as_bracket().map(|b| b.side);
        (index + 1..self.stream.len()).any(|i| side_at(i) == Some(Side::Close))
            || (0..index).any(|i| side_at(i) == Some(Side::Open))
    }
}

pub fn collect_sites(seq: &LinearSeq) -> Vec<InsertionSite> {
    let n = seq.tokens.len();
    (0..=n)
        .map(|gap| {
            let mut stream = Vec::new();
            if gap > 0 {
                stream.extend(seq.tokens[gap - 1].right.iter().copied());
            }
            if gap < n {
                stream.extend(seq.tokens[gap].left.iter().copied());
            }
            InsertionSite { position: gap, stream }
        })
        .collect()
}

/// Total order on points. A promoted semicolon may be configured to rank
/// between a colon and a period.
fn rank(mark: &Mark, cfg: &Config) -> Option<u8> {
    let p = mark.as_point()?;
    let promoted = cfg.prefer_promoted_semicolon && p == PointKind::Semicolon && mark.origin == Origin::Promoted;
    Some(if promoted { 2 * PointKind::Colon.strength() + 1 } else { 2 * p.strength() })
}

fn outranks(a: &Mark, b: &Mark, cfg: &Config) -> bool {
    match (rank(a, cfg), rank(b, cfg)) {
        (Some(ra), Some(rb)) if ra != rb => ra > rb,
        (Some(_), Some(_)) => a.origin == Origin::Terminal && b.origin != Origin::Terminal,
        _ => false,
    }
}

/// Index into `site.stream` of the point presented at this site, if any.
pub fn winner(site: &InsertionSite, cfg: &Config) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, mark) in site.stream.iter().enumerate() {
        if !mark.is_point() || site.in_bracket_scope(i) {
            continue;
        }
        if best.is_none_or(|b| outranks(mark, &site.stream[b], cfg)) {
            best = Some(i);
        }
    }
    best
}

/// Brackets suppress points in their scope; of the remaining
/// candidates the strongest is presented and equal points merge. Nothing
/// precedes the first word, so the initial site presents no point. Brackets
/// and tone indicators pass through in order.
pub fn insert_points(seq: &LinearSeq, cfg: &Config) -> PointedSeq {
    let sites = collect_sites(seq);
    let mut items = Vec::new();
    for site in &sites {
        let keep = if site.position == 0 { None } else { winner(site, cfg) };
        for (i, mark) in site.stream.iter().enumerate() {
            if !mark.is_point() || Some(i) == keep {
                items.push(Token::Mark(*mark));
            }
        }
        if let Some(token) = seq.tokens.get(site.position) {
            items.push(Token::Word(token.lexeme.clone()));
        }
    }
    PointedSeq { items }
}

/// Reads a pointed sequence back as boundary features: marks before the
/// first word become its left features, all others right features of the
/// preceding word.
pub fn as_features(seq: &PointedSeq) -> LinearSeq {
    let mut tokens: Vec<LinearToken> = Vec::new();
    let mut leading = Vec::new();
    for item in &seq.items {
        match item {
            Token::Word(w) => {
                let mut token = LinearToken::new(w.clone());
                if tokens.is_empty() {
                    token.left = core::mem::take(&mut leading);
                }
                tokens.push(token);
            }
            Token::Mark(m) => match tokens.last_mut() {
                Some(t) => t.right.push(*m),
                None => leading.push(*m),
            },
        }
    }
    LinearSeq { tokens, role: Default::default() }
}

/// Number of point marks between consecutive words (and at either end).
pub fn points_per_gap(seq: &PointedSeq) -> Vec<usize> {
    let mut out = alloc::vec![0usize];
    for item in &seq.items {
        match item {
            Token::Word(_) => out.push(0),
            Token::Mark(m) => {
                if matches!(m.kind, MarkKind::Point(_)) {
                    *out.last_mut().unwrap_or(&mut 0) += 1;
                }
            }
        }
    }
    out
}
