//! Document-level realization: runs the sentence pipeline, wraps
//! discourse-level brackets around finished sentences, and lays out lists.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::config::{Config, OutputFormat};
use crate::error::Error;
use crate::graph;
use crate::model::{BracketShape, MarkKind, PointedSeq, SentenceRole, Side, SyntTree, Token, COORD};
use crate::morph;
use crate::syntax::{self, Nesting};
use crate::visual::VisualOverlay;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ListStyle {
    #[default]
    Vertical,
    RunIn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Enumerator {
    #[default]
    Number,
    Bullet,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ListBlock {
    pub style: ListStyle,
    pub intro: SyntTree,
    pub items: Vec<SyntTree>,
    /// Conjunction before the last item, when wanted.
    pub conjunction: Option<String>,
    /// The items continue the intro as one sentence.
    pub single_sentence: bool,
    pub enumerator: Enumerator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    Sentence { tree: SyntTree, discourse: Option<BracketShape>, role: SentenceRole },
    /// Several sentences inside one discourse-level bracket.
    Group { sentences: Vec<SyntTree>, discourse: Option<BracketShape> },
    List(ListBlock),
}

impl Block {
    pub fn sentence(tree: SyntTree) -> Self {
        Block::Sentence { tree, discourse: None, role: SentenceRole::Independent }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub blocks: Vec<Block>,
}

/// The tree rules, in the order they must see each other's output.
pub fn syntax_rules(tree: &SyntTree, base: Nesting, cfg: &Config) -> Result<SyntTree, Error> {
    let t = syntax::apply_default_punctuation(tree);
    let t = syntax::promote_commas(&t, cfg.promotion_refinements);
    let t = syntax::select_expansion(&t, cfg.expansion_mode)?;
    Ok(syntax::alternate_enclosures(&t, base))
}

/// Full sentence pipeline up to (not including) rendering.
pub fn pipeline(tree: &SyntTree, role: SentenceRole, base: Nesting, cfg: &Config) -> Result<(PointedSeq, VisualOverlay), Error> {
    let t = syntax_rules(tree, base, cfg)?;
    let (linear, overlay) = syntax::linearize(&t, role)?;
    let pointed = morph::insert_points(&linear, cfg);
    let pointed = graph::transpose_quotes(&pointed, cfg);
    let pointed = graph::absorb_graphic(&pointed, cfg);
    let overlay = graph::harmonize(&pointed, &overlay, cfg);
    Ok((pointed, overlay))
}

fn realize_in(tree: &SyntTree, role: SentenceRole, base: Nesting, cfg: &Config) -> Result<String, Error> {
    let (seq, overlay) = pipeline(tree, role, base, cfg)?;
    Ok(graph::render(&seq, &overlay, cfg))
}

pub fn realize_sentence(tree: &SyntTree, cfg: &Config) -> Result<String, Error> {
    realize_in(tree, SentenceRole::Independent, Nesting::default(), cfg)
}

const QUOTE_GLYPHS: [char; 4] = ['\u{201c}', '\u{201d}', '\u{2018}', '\u{2019}'];

fn wrap(inner: String, shape: Option<BracketShape>, cfg: &Config) -> String {
    let Some(shape) = shape else { return inner };
    let quote_gap = |c: Option<char>| shape.is_quote() && c.is_some_and(|c| QUOTE_GLYPHS.contains(&c));
    let directive = cfg.output_format == OutputFormat::Directive;
    let gap = |c: Option<char>, end: bool| {
        let token = if end { inner.rsplit(' ').next() } else { inner.split(' ').next() };
        let is_directive = directive && token.is_some_and(|t| t.starts_with(":BEG-") || t.starts_with(":END-"));
        if quote_gap(c) || is_directive { " " } else { "" }
    };
    format!(
        "{}{}{}{}{}",
        shape.glyph(Side::Open),
        gap(inner.chars().next(), false),
        inner,
        gap(inner.chars().last(), true),
        shape.glyph(Side::Close)
    )
}

pub fn realize_block(block: &Block, cfg: &Config) -> Result<String, Error> {
    match block {
        Block::Sentence { tree, discourse, role } => {
            Ok(wrap(realize_in(tree, *role, Nesting::around(*discourse), cfg)?, *discourse, cfg))
        }
        Block::Group { sentences, discourse } => {
            let base = Nesting::around(*discourse);
            let parts = sentences
                .iter()
                .map(|s| realize_in(s, SentenceRole::Independent, base, cfg))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(wrap(parts.join(cfg.sentence_space()), *discourse, cfg))
        }
        Block::List(list) => realize_list(list, cfg),
    }
}

pub fn realize_document(doc: &Document, cfg: &Config) -> Result<String, Error> {
    let parts = doc.blocks.iter().map(|b| realize_block(b, cfg)).collect::<Result<Vec<_>, _>>()?;
    Ok(parts.join(cfg.sentence_space()))
}

fn enumerator(list: &ListBlock, k: usize) -> String {
    match list.enumerator {
        Enumerator::Number => format!("{}. ", k + 1),
        Enumerator::Bullet => String::from("\u{2022} "),
    }
}

/// The intro with the items attached as a coordinated series at its end.
pub fn list_tree(list: &ListBlock) -> SyntTree {
    let last = list.items.len().saturating_sub(1);
    let series = list.items.iter().enumerate().fold(SyntTree::group(), |s, (k, item)| {
        let mut item = item.clone();
        if k == last && k > 0 {
            if let Some(conj) = &list.conjunction {
                item.attrs.conj = Some(conj.clone());
            }
        }
        s.after(COORD, item)
    });
    list.intro.clone().after("list", series)
}

/// Position in `seq` where the line of the word with ordinal `word` starts:
/// the word itself, or the opening brackets right before it.
fn line_start(seq: &PointedSeq, word: usize) -> Option<usize> {
    let mut seen = 0;
    let pos = seq.items.iter().position(|t| {
        let hit = matches!(t, Token::Word(_)) && seen == word;
        if matches!(t, Token::Word(_)) {
            seen += 1;
        }
        hit
    })?;
    let mut start = pos;
    while start > 0 {
        match &seq.items[start - 1] {
            Token::Mark(m) if matches!(m.kind, MarkKind::Bracket(b) if b.side == Side::Open) => start -= 1,
            _ => break,
        }
    }
    Some(start)
}

pub fn realize_list(list: &ListBlock, cfg: &Config) -> Result<String, Error> {
    if list.items.is_empty() {
        return Err(Error::EmptyList);
    }
    if list.single_sentence {
        let tree = list_tree(list);
        let (seq, overlay) = pipeline(&tree, SentenceRole::Independent, Nesting::default(), cfg)?;
        if list.style == ListStyle::RunIn {
            return Ok(graph::render(&seq, &overlay, cfg));
        }
        let series = &tree.rels.last().map(|r| &r.child).ok_or(Error::EmptyList)?;
        let mut word = syntax::token_count(&list.intro);
        let mut breaks = Vec::new();
        for (k, rel) in series.rels.iter().enumerate() {
            let conj = usize::from(rel.child.attrs.conj.is_some());
            word += conj;
            if let Some(pos) = line_start(&seq, word) {
                breaks.push((pos, format!("\n{}", enumerator(list, k))));
            }
            word += syntax::token_count(&rel.child);
        }
        return Ok(graph::render_with_breaks(&seq, &overlay, cfg, &breaks));
    }
    let intro = if list.intro.lexeme.is_empty() && list.intro.rels.is_empty() {
        String::new()
    } else {
        realize_in(&list.intro, SentenceRole::Fragment, Nesting::default(), cfg)?
    };
    let items = list
        .items
        .iter()
        .map(|item| realize_in(item, SentenceRole::Independent, Nesting::default(), cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let out = match list.style {
        ListStyle::Vertical => {
            let mut out = intro;
            for (k, item) in items.iter().enumerate() {
                if !out.is_empty() {
                    out.push('\n');
                }
                out.push_str(&enumerator(list, k));
                out.push_str(item);
            }
            out
        }
        ListStyle::RunIn => {
            let mut parts = Vec::with_capacity(items.len() + 1);
            if !intro.is_empty() {
                parts.push(intro);
            }
            parts.extend(items);
            parts.join(cfg.sentence_space())
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Enclosure, PointKind, ToneIndicator, DESCR_ATTR};

    fn word(surface: &str) -> SyntTree {
        SyntTree::word(surface)
    }

    #[test]
    fn single_sentence() {
        assert_eq!(realize_sentence(&word("Stop"), &Config::default()).unwrap(), "Stop.");
    }

    #[test]
    fn discourse_paren_keeps_sentence_period() {
        let block = Block::Sentence { tree: word("I saw him on another occasion"), discourse: Some(BracketShape::Paren), role: SentenceRole::Independent };
        assert_eq!(realize_block(&block, &Config::default()).unwrap(), "(I saw him on another occasion.)");
    }

    #[test]
    fn document_joins_with_sentence_space() {
        let doc = Document { blocks: vec![Block::sentence(word("One")), Block::sentence(word("Two"))] };
        assert_eq!(realize_document(&doc, &Config::default()).unwrap(), "One.  Two.");
        let tagged = Config::default().with_format(crate::OutputFormat::Tagged);
        assert_eq!(realize_document(&doc, &tagged).unwrap(), "One. Two.");
    }

    #[test]
    fn document_is_compositional() {
        let cfg = Config::default();
        let trees = [word("a"), word("b").with_tone(ToneIndicator::QuestionMark), word("c").after(DESCR_ATTR, word("d"))];
        let doc = Document { blocks: trees.iter().cloned().map(Block::sentence).collect() };
        let parts: Vec<String> = trees.iter().map(|t| realize_sentence(t, &cfg).unwrap()).collect();
        assert_eq!(realize_document(&doc, &cfg).unwrap(), parts.join(cfg.sentence_space()));
    }

    #[test]
    fn group_inside_quotes_alternates_inner_quotes() {
        let inner = word("I mean").with_btw(Enclosure::DoubleQuote);
        let block = Block::Group { sentences: vec![word("To say that").after("x", inner)], discourse: Some(BracketShape::DoubleQuote) };
        assert_eq!(realize_block(&block, &Config::default()).unwrap(), "\u{201c}To say that \u{2018}I mean.\u{2019} \u{201d}");
    }

    #[test]
    fn vertical_single_sentence_list_is_promoted() {
        let list = ListBlock {
            intro: word("convinced that"),
            items: vec![word("the lawyer").after(DESCR_ATTR, word("Watson")), word("the chair")],
            single_sentence: true,
            ..ListBlock::default()
        };
        assert_eq!(
            realize_list(&list, &Config::default()).unwrap(),
            "convinced that\n1. the lawyer, Watson;\n2. the chair."
        );
        let runin = ListBlock { style: ListStyle::RunIn, conjunction: Some("and".into()), ..list.clone() };
        assert_eq!(realize_list(&runin, &Config::default()).unwrap(), "convinced that the lawyer, Watson; and the chair.");
    }

    #[test]
    fn list_promotion_is_the_tree_rule() {
        let list = ListBlock {
            intro: word("x"),
            items: vec![word("a").after(DESCR_ATTR, word("b")), word("c")],
            single_sentence: true,
            ..ListBlock::default()
        };
        let tree = list_tree(&list);
        let rules = syntax_rules(&tree, Nesting::default(), &Config::default()).unwrap();
        let direct = syntax::promote_commas(&syntax::apply_default_punctuation(&tree), false);
        assert_eq!(rules.rels[0].child.attrs.series, direct.rels[0].child.attrs.series);
        assert_eq!(rules.rels[0].child.attrs.series.separator, PointKind::Semicolon);
    }

    #[test]
    fn separate_sentence_items() {
        let list = ListBlock { intro: word("Steps"), items: vec![word("Mix"), word("Bake")], enumerator: Enumerator::Bullet, ..ListBlock::default() };
        assert_eq!(realize_list(&list, &Config::default()).unwrap(), "Steps\n\u{2022} Mix.\n\u{2022} Bake.");
        let empty = ListBlock::default();
        assert_eq!(realize_list(&empty, &Config::default()), Err(Error::EmptyList));
    }
}
