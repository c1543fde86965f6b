//! Hierarchy-sensitive rules. Everything here works on [`SyntTree`] and
//! needs constituent scope; [`linearize`] is the exit into the
//! morphological stage.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::config::ExpansionMode;
use crate::error::{Error, Violation, ViolationKind};
use crate::model::{
    Bracket, BracketShape, Edge, Enclosure, EnclosureSpec, Face, Font, Lexeme, LinearSeq,
    LinearToken, Mark, MarkKind, Origin, PointKind, Position, SentenceRole, SyntTree, VisualAttrs,
    COORD, DESCR_ATTR,
};
use crate::visual::{Span, VisualOverlay};

/// One element of a node's linear order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Head,
    /// Conjunction word of dependent `i`, emitted right before it.
    Conj(usize),
    Child(usize),
}

fn child_path(path: &str, index: usize) -> String {
    format!("{path}/{index}")
}

/// Linear order of a node: `before` dependents by order key, the head (if it
/// has a surface), then `after` dependents by order key.
pub fn layout(node: &SyntTree) -> Result<Vec<Slot>, Error> {
    layout_at(node, "")
}

fn layout_at(node: &SyntTree, path: &str) -> Result<Vec<Slot>, Error> {
    let mut before: Vec<(i32, usize)> = Vec::new();
    let mut after: Vec<(i32, usize)> = Vec::new();
    for (i, rel) in node.rels.iter().enumerate() {
        let side = match rel.position {
            Position::Before => &mut before,
            Position::After => &mut after,
        };
        if side.iter().any(|(o, _)| *o == rel.order) {
            return Err(Error::MalformedTree {
                path: if path.is_empty() { "/".into() } else { path.into() },
                reason: format!("two {:?} dependents share order {}", rel.position, rel.order),
            });
        }
        side.push((rel.order, i));
    }
    before.sort_unstable();
    after.sort_unstable();
    let mut slots = Vec::with_capacity(node.rels.len() * 2 + 1);
    let push_child = |slots: &mut Vec<Slot>, i: usize| {
        if node.rels[i].child.attrs.conj.is_some() {
            slots.push(Slot::Conj(i));
        }
        slots.push(Slot::Child(i));
    };
    for &(_, i) in &before {
        push_child(&mut slots, i);
    }
    if !node.lexeme.is_empty() {
        slots.push(Slot::Head);
    }
    for &(_, i) in &after {
        push_child(&mut slots, i);
    }
    Ok(slots)
}

/// Number of word tokens the subtree linearizes to.
pub fn token_count(node: &SyntTree) -> usize {
    let own = usize::from(!node.lexeme.is_empty());
    own + node
        .rels
        .iter()
        .map(|r| token_count(&r.child) + usize::from(r.child.attrs.conj.is_some()))
        .sum::<usize>()
}

/// Series items in linear order, with whether a separator follows each.
fn separators(node: &SyntTree, slots: &[Slot]) -> Vec<(usize, bool)> {
    let items: Vec<usize> = slots
        .iter()
        .filter_map(|s| match s {
            Slot::Child(i) if node.rels[*i].name == COORD => Some(*i),
            _ => None,
        })
        .collect();
    items
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let sep = match items.get(k + 1) {
                None => false,
                Some(&next) => node.attrs.series.serial || node.rels[next].child.attrs.conj.is_none(),
            };
            (i, sep)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Default punctuation

fn blocks_default_comma(kind: Enclosure) -> bool {
    !matches!(kind, Enclosure::DoubleQuote | Enclosure::SingleQuote)
}

/// `X --descr-attr--> Y` without a dash (or other interpolating enclosure)
/// becomes `X + Y[btw:comma]`. Quotation marks do not block the rule.
pub fn apply_default_punctuation(tree: &SyntTree) -> SyntTree {
    let mut out = tree.clone();
    default_in_place(&mut out);
    out
}

fn default_in_place(node: &mut SyntTree) {
    for rel in &mut node.rels {
        if rel.name == DESCR_ATTR && !rel.child.attrs.btw.iter().any(|e| blocks_default_comma(e.kind)) {
            rel.child.attrs.btw.push(EnclosureSpec { kind: Enclosure::Comma, origin: Origin::Default });
        }
        default_in_place(&mut rel.child);
    }
}

// ---------------------------------------------------------------------------
// Comma promotion

fn point_like(kind: Enclosure) -> bool {
    matches!(kind, Enclosure::Comma | Enclosure::Dash | Enclosure::DashExpansion)
}

fn edge_punctuation(node: &SyntTree) -> bool {
    node.attrs.btw.iter().any(|e| point_like(e.kind))
        || node.attrs.left.iter().chain(&node.attrs.right).any(|p| matches!(p, PointKind::Comma | PointKind::Dash))
}

/// Commas or dashes strictly inside an item: on any descendant, or series
/// separators anywhere in the item.
pub fn has_internal_punctuation(item: &SyntTree) -> bool {
    item.is_series()
        || item.rels.iter().any(|r| edge_punctuation(&r.child) || has_internal_punctuation(&r.child))
}

/// Replaces comma separators by semicolons in every series where some item
/// has internal punctuation. `refinements` enables the two finer behaviours:
/// no promotion when only the last item qualifies, and no promotion inside
/// items of an already promoted series.
pub fn promote_commas(tree: &SyntTree, refinements: bool) -> SyntTree {
    let mut out = tree.clone();
    promote_in_place(&mut out, refinements, true);
    out
}

fn promote_in_place(node: &mut SyntTree, refinements: bool, allowed: bool) {
    let mut promoted = false;
    if allowed && node.is_series() && node.attrs.series.separator == PointKind::Comma {
        let flags: Vec<bool> = match layout(node) {
            Ok(slots) => separators(node, &slots)
                .iter()
                .map(|&(i, _)| has_internal_punctuation(&node.rels[i].child))
                .collect(),
            Err(_) => Vec::new(),
        };
        let any = flags.iter().any(|&f| f);
        let only_last = flags.last() == Some(&true) && flags.iter().filter(|&&f| f).count() == 1;
        if any && !(refinements && only_last) {
            node.attrs.series.separator = PointKind::Semicolon;
            node.attrs.series.separator_origin = Origin::Promoted;
            promoted = true;
        }
    }
    if node.attrs.series.separator == PointKind::Semicolon && node.is_series() {
        promoted = true;
    }
    for rel in &mut node.rels {
        let child_allowed = allowed && !(refinements && promoted && rel.name == COORD);
        promote_in_place(&mut rel.child, refinements, child_allowed);
    }
}

// ---------------------------------------------------------------------------
// Expansion selection

#[derive(Clone, Copy)]
struct Enclosing {
    kind: Enclosure,
    start: usize,
    end: usize,
}

/// Rewrites nested colon-expansions to dash-expansions and mid-phrase
/// parentheticals directly inside parentheticals to dash pairs. In strict
/// mode the first such nesting is returned as an error instead.
pub fn select_expansion(tree: &SyntTree, mode: ExpansionMode) -> Result<SyntTree, Error> {
    let mut out = tree.clone();
    let mut violations = Vec::new();
    select_in_place(&mut out, String::new(), false, None, 0, &mut violations)?;
    match (mode, violations.into_iter().next()) {
        (ExpansionMode::Strict, Some(v)) => Err(Error::Violation(v)),
        _ => Ok(out),
    }
}

/// All nesting violations, in depth-first order.
pub fn check_expansions(tree: &SyntTree) -> Result<Vec<Violation>, Error> {
    let mut scratch = tree.clone();
    let mut violations = Vec::new();
    select_in_place(&mut scratch, String::new(), false, None, 0, &mut violations)?;
    Ok(violations)
}

fn select_in_place(
    node: &mut SyntTree,
    path: String,
    mut in_colon: bool,
    mut enclosing: Option<Enclosing>,
    start: usize,
    violations: &mut Vec<Violation>,
) -> Result<(), Error> {
    let end = start + token_count(node);
    let lexeme = node.lexeme.surface.clone();
    for entry in node.attrs.btw.iter_mut().rev() {
        if entry.kind == Enclosure::ColonExpansion && in_colon {
            violations.push(Violation { kind: ViolationKind::NestedColonExpansion, path: path.clone(), lexeme: lexeme.clone() });
            entry.kind = Enclosure::DashExpansion;
        }
        if entry.kind == Enclosure::Paren {
            if let Some(outer) = enclosing {
                if outer.kind == Enclosure::Paren && start > outer.start && end < outer.end {
                    violations.push(Violation { kind: ViolationKind::NestedParenthetical, path: path.clone(), lexeme: lexeme.clone() });
                    entry.kind = Enclosure::Dash;
                }
            }
        }
        in_colon |= entry.kind == Enclosure::ColonExpansion;
        enclosing = Some(Enclosing { kind: entry.kind, start, end });
    }
    let slots = layout_at(node, &path)?;
    let mut offset = start;
    for slot in slots {
        match slot {
            Slot::Head | Slot::Conj(_) => offset += 1,
            Slot::Child(i) => {
                let child = &mut node.rels[i].child;
                let len = token_count(child);
                select_in_place(child, child_path(&path, i), in_colon, enclosing, offset, violations)?;
                offset += len;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Alternation

/// Enclosure depth already in force around a sentence (e.g. discourse-level
/// quotation marks wrapped around it by the text realizer).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Nesting {
    pub brackets: usize,
    pub quotes: usize,
}

impl Nesting {
    pub fn around(shape: Option<BracketShape>) -> Nesting {
        match shape {
            Some(s) if s.is_quote() => Nesting { brackets: 0, quotes: 1 },
            Some(_) => Nesting { brackets: 1, quotes: 0 },
            None => Nesting::default(),
        }
    }

    fn shape(&mut self, shape: BracketShape) -> BracketShape {
        match shape {
            BracketShape::Paren | BracketShape::Square => {
                let s = if self.brackets % 2 == 1 { BracketShape::Square } else { shape };
                self.brackets += 1;
                s
            }
            BracketShape::DoubleQuote | BracketShape::SingleQuote => {
                let s = if self.quotes % 2 == 1 { BracketShape::SingleQuote } else { BracketShape::DoubleQuote };
                self.quotes += 1;
                s
            }
        }
    }
}

/// Parentheses at odd bracket depth become square brackets; quotation marks
/// alternate double/single by quote depth. Depth counts enclosing brackets
/// of the same class, starting from `base`.
pub fn alternate_enclosures(tree: &SyntTree, base: Nesting) -> SyntTree {
    let mut out = tree.clone();
    alternate_in_place(&mut out, base);
    out
}

fn alternate_in_place(node: &mut SyntTree, mut nesting: Nesting) {
    for entry in node.attrs.btw.iter_mut().rev() {
        if let Some(shape) = entry.kind.bracket_shape() {
            entry.kind = Enclosure::from_bracket(nesting.shape(shape));
        }
    }
    let lexical = nesting;
    for (_, mark) in node.lexeme.lexical_marks.iter_mut() {
        if let MarkKind::Bracket(b) = &mut mark.kind {
            let mut depth = lexical;
            b.shape = depth.shape(b.shape);
        }
    }
    for rel in &mut node.rels {
        alternate_in_place(&mut rel.child, nesting);
    }
}

// ---------------------------------------------------------------------------
// Linearization

/// Phrase visual request applied inside context `ctx`. Italic inside italic
/// flips back to roman; roman/regular requests inherit.
pub fn combine_visual(ctx: VisualAttrs, request: VisualAttrs) -> VisualAttrs {
    let font = match (request.font, ctx.font) {
        (Font::Italic, Font::Italic) => Font::Roman,
        (Font::Italic, Font::Roman) => Font::Italic,
        (Font::Roman, f) => f,
    };
    let face = if request.face == Face::Bold { Face::Bold } else { ctx.face };
    VisualAttrs { font, face }
}

struct Linearizer {
    tokens: Vec<LinearToken>,
    spans: Vec<Span>,
}

impl Linearizer {
    fn node(&mut self, node: &SyntTree, path: &str, ctx: VisualAttrs) -> Result<(usize, usize), Error> {
        let start = self.tokens.len();
        let vis = node.attrs.visual.map_or(ctx, |v| combine_visual(ctx, v));
        let slots = layout_at(node, path)?;
        let seps = separators(node, &slots);
        let series = node.attrs.series;
        for slot in slots {
            match slot {
                Slot::Head => {
                    let lexeme = &node.lexeme;
                    if lexeme.abbrev_period && !lexeme.surface.ends_with('.') {
                        return Err(Error::MalformedTree {
                            path: if path.is_empty() { "/".into() } else { path.into() },
                            reason: format!("abbreviation {:?} does not end in a period", lexeme.surface),
                        });
                    }
                    let index = self.tokens.len();
                    let mut token = LinearToken::new(lexeme.clone());
                    token.lexeme.lexical_marks.clear();
                    for (edge, mark) in &lexeme.lexical_marks {
                        let mark = mark.with_owner(vis);
                        match edge {
                            Edge::Left => token.left.push(mark),
                            Edge::Right => token.right.push(mark),
                        }
                    }
                    if !lexeme.visual.is_default() {
                        self.spans.push(Span::new(index, index + 1, combine_visual(vis, lexeme.visual)));
                    }
                    self.tokens.push(token);
                }
                Slot::Conj(i) => {
                    let conj = node.rels[i].child.attrs.conj.as_deref().unwrap_or_default();
                    self.tokens.push(LinearToken::new(Lexeme::new(conj)));
                }
                Slot::Child(i) => {
                    let (_, child_end) = self.node(&node.rels[i].child, &child_path(path, i), vis)?;
                    let sep = seps.iter().any(|&(j, s)| j == i && s);
                    if sep && child_end > 0 {
                        let mark = Mark::point(series.separator, series.separator_origin).with_owner(vis);
                        self.tokens[child_end - 1].right.push(mark);
                    }
                }
            }
        }
        let end = self.tokens.len();
        let attrs = &node.attrs;
        let has_features = !attrs.btw.is_empty()
            || attrs.tone.is_some()
            || attrs.sentence
            || !attrs.left.is_empty()
            || !attrs.right.is_empty();
        if end == start {
            if has_features {
                return Err(Error::EmptyPhrase { path: if path.is_empty() { "/".into() } else { path.into() } });
            }
            return Ok((start, end));
        }
        let (first, last) = (start, end - 1);
        if let Some(tone) = attrs.tone {
            let origin = if attrs.sentence || path.is_empty() { Origin::Terminal } else { Origin::Explicit };
            self.tokens[last].right.push(Mark::tone(tone, origin).with_owner(vis));
        }
        if attrs.sentence {
            self.tokens[last].right.push(Mark::point(PointKind::Period, Origin::Terminal).with_owner(vis));
        }
        for entry in &attrs.btw {
            let (left, right) = enclosure_marks(entry.kind);
            if let Some(kind) = left {
                self.tokens[first].left.insert(0, Mark::new(kind, entry.origin).with_owner(vis));
            }
            if let Some(kind) = right {
                self.tokens[last].right.push(Mark::new(kind, entry.origin).with_owner(vis));
            }
        }
        for &p in attrs.left.iter().rev() {
            self.tokens[first].left.insert(0, Mark::point(p, Origin::Explicit).with_owner(vis));
        }
        for &p in &attrs.right {
            self.tokens[last].right.push(Mark::point(p, Origin::Explicit).with_owner(vis));
        }
        if let Some(request) = attrs.visual {
            if !request.is_default() {
                self.spans.push(Span::new(start, end, vis));
            }
        }
        Ok((start, end))
    }
}

fn enclosure_marks(kind: Enclosure) -> (Option<MarkKind>, Option<MarkKind>) {
    let point = |p| Some(MarkKind::Point(p));
    match kind {
        Enclosure::Comma => (point(PointKind::Comma), point(PointKind::Comma)),
        Enclosure::Dash => (point(PointKind::Dash), point(PointKind::Dash)),
        Enclosure::ColonExpansion => (point(PointKind::Colon), None),
        Enclosure::DashExpansion => (point(PointKind::Dash), None),
        other => {
            let shape = other.bracket_shape().unwrap_or(BracketShape::Paren);
            (
                Some(MarkKind::Bracket(Bracket::open(shape))),
                Some(MarkKind::Bracket(Bracket::close(shape))),
            )
        }
    }
}

/// In-order traversal to a token sequence. Phrase features become boundary
/// features of the phrase's outermost tokens; brackets are inserted here so
/// their scope is fixed; visual attributes compile into the overlay. An
/// independent sentence gets a terminal period as its last right feature.
pub fn linearize(tree: &SyntTree, role: SentenceRole) -> Result<(LinearSeq, VisualOverlay), Error> {
    let mut lin = Linearizer { tokens: Vec::new(), spans: Vec::new() };
    lin.node(tree, "", VisualAttrs::default())?;
    if role == SentenceRole::Independent {
        if let Some(last) = lin.tokens.last_mut() {
            last.right.push(Mark::point(PointKind::Period, Origin::Terminal));
        }
    }
    let overlay = VisualOverlay { words: lin.tokens.len(), spans: lin.spans, mark_attrs: Vec::new() };
    Ok((LinearSeq { tokens: lin.tokens, role }, overlay))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{PhraseAttrs, ToneIndicator};

    fn points(marks: &[Mark]) -> Vec<PointKind> {
        marks.iter().filter_map(Mark::as_point).collect()
    }

    fn kinds(marks: &[Mark]) -> Vec<MarkKind> {
        marks.iter().map(|m| m.kind).collect()
    }

    fn country(name: &str, n: &str) -> SyntTree {
        SyntTree::word(name).after(DESCR_ATTR, SyntTree::word(n))
    }

    fn series(items: Vec<SyntTree>) -> SyntTree {
        items.into_iter().fold(SyntTree::group(), |s, item| s.after(COORD, item))
    }

    #[test]
    fn default_comma_on_descr_attr() {
        let t = SyntTree::word("X").after(DESCR_ATTR, SyntTree::word("from"));
        let d = apply_default_punctuation(&t);
        assert_eq!(d.rels[0].child.attrs.btw, vec![EnclosureSpec { kind: Enclosure::Comma, origin: Origin::Default }]);
        let dashed = SyntTree::word("X").after(DESCR_ATTR, SyntTree::word("incl").with_btw(Enclosure::Dash));
        assert_eq!(apply_default_punctuation(&dashed), dashed);
        let plain = SyntTree::word("X").after("obj", SyntTree::word("Y"));
        assert_eq!(apply_default_punctuation(&plain), plain);
    }

    #[test]
    fn default_comma_is_added_outside_quotes() {
        let t = SyntTree::word("reply").after(DESCR_ATTR, SyntTree::word("He appears").with_btw(Enclosure::DoubleQuote));
        let d = apply_default_punctuation(&t);
        let kinds: Vec<_> = d.rels[0].child.attrs.btw.iter().map(|e| e.kind).collect();
        assert_eq!(kinds, vec![Enclosure::DoubleQuote, Enclosure::Comma]);
    }

    #[test]
    fn promotion_with_internal_commas() {
        let s = series(vec![country("France", "4"), country("Germany", "5")]);
        let p = promote_commas(&apply_default_punctuation(&s), false);
        assert_eq!(p.attrs.series.separator, PointKind::Semicolon);
        assert_eq!(p.attrs.series.separator_origin, Origin::Promoted);
    }

    #[test]
    fn bare_series_is_not_promoted() {
        let s = series(vec![SyntTree::word("a"), SyntTree::word("b"), SyntTree::word("c")]);
        assert_eq!(promote_commas(&s, false), s);
    }

    #[test]
    fn refinement_skips_series_where_only_last_item_qualifies() {
        let s = series(vec![SyntTree::word("a"), SyntTree::word("b"), country("c", "d")]);
        let s = apply_default_punctuation(&s);
        assert_eq!(promote_commas(&s, false).attrs.series.separator, PointKind::Semicolon);
        assert_eq!(promote_commas(&s, true).attrs.series.separator, PointKind::Comma);
    }

    #[test]
    fn refinement_stops_below_highest_promoted_series() {
        let inner = series(vec![country("a", "1"), SyntTree::word("b")]);
        let outer = series(vec![inner, SyntTree::word("c"), SyntTree::word("e")]);
        let outer = apply_default_punctuation(&outer);
        let full = promote_commas(&outer, false);
        assert_eq!(full.rels[0].child.attrs.series.separator, PointKind::Semicolon);
        let refined = promote_commas(&outer, true);
        assert_eq!(refined.attrs.series.separator, PointKind::Semicolon);
        assert_eq!(refined.rels[0].child.attrs.series.separator, PointKind::Comma);
    }

    #[test]
    fn paren_in_paren_alternates_to_square() {
        let inner = SyntTree::word("the kiwi").with_btw(Enclosure::Paren);
        let t = SyntTree::word("James Green").with_btw(Enclosure::Paren).after("x", SyntTree::word("bird").after("y", inner));
        let a = alternate_enclosures(&t, Nesting::default());
        assert_eq!(a.attrs.btw[0].kind, Enclosure::Paren);
        assert_eq!(a.rels[0].child.rels[0].child.attrs.btw[0].kind, Enclosure::Square);
        let single = SyntTree::word("x").with_btw(Enclosure::Paren);
        assert_eq!(alternate_enclosures(&single, Nesting::default()), single);
    }

    #[test]
    fn quotes_alternate_by_depth() {
        let deepest = SyntTree::word("I see what I eat").with_btw(Enclosure::DoubleQuote);
        let mid = SyntTree::word("Not the same").with_btw(Enclosure::DoubleQuote).after("x", deepest);
        let t = SyntTree::word("said").after("x", mid);
        let a = alternate_enclosures(&t, Nesting::around(Some(BracketShape::DoubleQuote)));
        let mid = &a.rels[0].child;
        assert_eq!(mid.attrs.btw[0].kind, Enclosure::SingleQuote);
        assert_eq!(mid.rels[0].child.attrs.btw[0].kind, Enclosure::DoubleQuote);
    }

    #[test]
    fn nested_colon_expansion_rewritten_or_rejected() {
        let inner = SyntTree::word("catfish sushi").with_btw(Enclosure::ColonExpansion);
        let list = SyntTree::word("one thing").after("x", inner).with_btw(Enclosure::ColonExpansion);
        let t = SyntTree::word("They serve").after("x", list);
        let r = select_expansion(&t, ExpansionMode::Rewrite).unwrap();
        assert_eq!(r.rels[0].child.rels[0].child.attrs.btw[0].kind, Enclosure::DashExpansion);
        match select_expansion(&t, ExpansionMode::Strict) {
            Err(Error::Violation(v)) => {
                assert_eq!(v.kind, ViolationKind::NestedColonExpansion);
                assert_eq!(v.path, "/0/0");
            }
            other => panic!("expected violation, got {other:?}"),
        }
        let single = SyntTree::word("a").after("x", SyntTree::word("b").with_btw(Enclosure::ColonExpansion));
        assert_eq!(select_expansion(&single, ExpansionMode::Strict).unwrap(), single);
    }

    #[test]
    fn mid_phrase_paren_in_paren_becomes_dashes() {
        let inner = SyntTree::word("a director").with_btw(Enclosure::Paren);
        let outer = SyntTree::word("an employee").with_btw(Enclosure::Paren).after("x", inner).after("y", SyntTree::word("of the firm"));
        let t = SyntTree::word("Jones").after("x", outer);
        let r = select_expansion(&t, ExpansionMode::Rewrite).unwrap();
        assert_eq!(r.rels[0].child.rels[0].child.attrs.btw[0].kind, Enclosure::Dash);
        // At the edge of the outer parenthetical it is left for alternation.
        let edge = SyntTree::word("an employee").with_btw(Enclosure::Paren).after("x", SyntTree::word("a director").with_btw(Enclosure::Paren));
        let r = select_expansion(&edge, ExpansionMode::Rewrite).unwrap();
        assert_eq!(r.rels[0].child.attrs.btw[0].kind, Enclosure::Paren);
    }

    #[test]
    fn intervening_enclosure_blocks_paren_rewrite() {
        let kiwi = SyntTree::word("the kiwi").with_btw(Enclosure::Paren);
        let rel = SyntTree::word("who studied a bird").after("x", kiwi).after("y", SyntTree::word("in New Zealand")).with_btw(Enclosure::Comma);
        let t = SyntTree::word("James Green").after("x", rel).with_btw(Enclosure::Paren);
        assert!(check_expansions(&t).unwrap().is_empty());
    }

    #[test]
    fn linearize_single_word() {
        let (seq, overlay) = linearize(&SyntTree::word("Stop"), SentenceRole::Independent).unwrap();
        assert_eq!(seq.tokens.len(), 1);
        assert_eq!(points(&seq.tokens[0].right), vec![PointKind::Period]);
        assert!(overlay.spans.is_empty());
    }

    #[test]
    fn linearize_boundary_features_in_textual_order() {
        // "(x, y—z)": comma phrase inside dash phrase inside paren.
        let inner = SyntTree::word("y").with_btw(Enclosure::Comma);
        let t = SyntTree::word("x").after("a", inner).with_btw(Enclosure::Dash).with_btw(Enclosure::Paren);
        let (seq, _) = linearize(&t, SentenceRole::Fragment).unwrap();
        assert_eq!(kinds(&seq.tokens[0].left), vec![MarkKind::Bracket(Bracket::open(BracketShape::Paren)), MarkKind::Point(PointKind::Dash)]);
        assert_eq!(
            kinds(&seq.tokens[1].right),
            vec![MarkKind::Point(PointKind::Comma), MarkKind::Point(PointKind::Dash), MarkKind::Bracket(Bracket::close(BracketShape::Paren))]
        );
    }

    #[test]
    fn figure_three_sites_vie() {
        let interp = SyntTree::word("the last month").with_btw(Enclosure::Dash);
        let pp = SyntTree::word("During April").after("x", interp).with_right(PointKind::Comma);
        let t = SyntTree::word("the design continued").before("circ", pp);
        let (seq, _) = linearize(&t, SentenceRole::Independent).unwrap();
        assert_eq!(points(&seq.tokens[1].right), vec![PointKind::Dash, PointKind::Comma]);
    }

    #[test]
    fn tone_and_embedded_period_inside_enclosures() {
        let q = SyntTree::word("Who is she").with_tone(ToneIndicator::QuestionMark).embedded_sentence().with_btw(Enclosure::DoubleQuote);
        let t = SyntTree::word("I asked her").after("obj", q.with_left(PointKind::Comma));
        let (seq, _) = linearize(&t, SentenceRole::Independent).unwrap();
        assert_eq!(
            kinds(&seq.tokens[1].right),
            vec![
                MarkKind::Tone(ToneIndicator::QuestionMark),
                MarkKind::Point(PointKind::Period),
                MarkKind::Bracket(Bracket::close(BracketShape::DoubleQuote)),
                MarkKind::Point(PointKind::Period),
            ]
        );
        assert_eq!(kinds(&seq.tokens[1].left), vec![MarkKind::Point(PointKind::Comma), MarkKind::Bracket(Bracket::open(BracketShape::DoubleQuote))]);
    }

    #[test]
    fn series_separators_and_conjunction() {
        let s = series(vec![SyntTree::word("a"), SyntTree::word("b"), SyntTree::word("c").with_conj("and")]);
        let (seq, _) = linearize(&s, SentenceRole::Fragment).unwrap();
        let words: Vec<&str> = seq.tokens.iter().map(|t| t.lexeme.surface.as_str()).collect();
        assert_eq!(words, ["a", "b", "and", "c"]);
        assert_eq!(points(&seq.tokens[1].right), vec![PointKind::Comma]);
        let s = s.non_serial();
        let (seq, _) = linearize(&s, SentenceRole::Fragment).unwrap();
        assert!(seq.tokens[1].right.is_empty());
    }

    #[test]
    fn italic_inside_italic_is_roman() {
        let title = SyntTree::word("Tom Jones").with_visual(VisualAttrs::ITALIC);
        let t = SyntTree::word("a study of").after("x", title).with_visual(VisualAttrs::ITALIC);
        let (_, overlay) = linearize(&t, SentenceRole::Fragment).unwrap();
        assert_eq!(overlay.resolve(0).unwrap().font, Font::Italic);
        assert_eq!(overlay.resolve(1).unwrap().font, Font::Roman);
    }

    #[test]
    fn malformed_trees_are_rejected() {
        let mut t = SyntTree::word("a").after("x", SyntTree::word("b")).after("x", SyntTree::word("c"));
        t.rels[1].order = t.rels[0].order;
        assert!(matches!(linearize(&t, SentenceRole::Independent), Err(Error::MalformedTree { .. })));
        let bad = SyntTree::new(Lexeme { surface: "DC".into(), abbrev_period: true, ..Lexeme::default() });
        assert!(matches!(linearize(&bad, SentenceRole::Independent), Err(Error::MalformedTree { .. })));
        let empty = SyntTree { attrs: PhraseAttrs { btw: vec![EnclosureSpec::explicit(Enclosure::Dash)], ..PhraseAttrs::default() }, ..SyntTree::default() };
        let t = SyntTree::word("a").after("x", empty);
        assert_eq!(linearize(&t, SentenceRole::Independent), Err(Error::EmptyPhrase { path: "/0".into() }));
    }

    #[test]
    fn token_count_matches_linearization() {
        let s = series(vec![country("France", "4"), country("Italy", "3").with_conj("and")]);
        let (seq, _) = linearize(&s, SentenceRole::Fragment).unwrap();
        assert_eq!(token_count(&s), seq.tokens.len());
    }
}
