//! Graphical rules and rendering. The rules run in a fixed order:
//! [`transpose_quotes`], [`absorb_graphic`], [`harmonize`].

use alloc::string::String;
use alloc::vec::Vec;

use crate::config::{Config, OutputFormat, QuoteStyle};
use crate::model::{
    Font, Face, Mark, MarkKind, Origin, PointKind, PointedSeq, Side, Token, VisualAttrs,
};
use crate::visual::VisualOverlay;

fn is_close_quote(item: &Token) -> bool {
    item.as_mark().is_some_and(Mark::is_close_quote)
}

fn transposable(item: &Token) -> bool {
    matches!(item.as_mark().and_then(Mark::as_point), Some(PointKind::Comma | PointKind::Period))
}

/// American style: a comma or period right after one or more closing
/// quotation marks moves in front of the first of them.
pub fn transpose_quotes(seq: &PointedSeq, cfg: &Config) -> PointedSeq {
    let mut items = seq.items.clone();
    if cfg.quote_style == QuoteStyle::Precise {
        return PointedSeq { items };
    }
    let mut i = 1;
    while i < items.len() {
        if transposable(&items[i]) && is_close_quote(&items[i - 1]) {
            let mut j = i - 1;
            while j > 0 && is_close_quote(&items[j - 1]) {
                j -= 1;
            }
            let point = items.remove(i);
            items.insert(j, point);
        }
        i += 1;
    }
    PointedSeq { items }
}

fn absorbs_period(item: &Token) -> bool {
    match item {
        Token::Word(w) => w.abbrev_period,
        Token::Mark(m) => matches!(m.kind, MarkKind::Tone(_)),
    }
}

/// Deletes a period directly after an abbreviation or a tone indicator.
/// Brackets in between block the deletion; visual spans are not tokens and
/// cannot. With `tone_italic_absorption`, a sentence-final tone right after
/// an identical tone (closing a title, say) is absorbed too.
pub fn absorb_graphic(seq: &PointedSeq, cfg: &Config) -> PointedSeq {
    let mut items: Vec<Token> = Vec::with_capacity(seq.items.len());
    for item in &seq.items {
        let prev = items.last();
        let absorbed = match (item, prev) {
            (Token::Mark(m), Some(prev)) => match m.kind {
                MarkKind::Point(PointKind::Period) => absorbs_period(prev),
                MarkKind::Tone(t) => {
                    cfg.tone_italic_absorption
                        && m.origin == Origin::Terminal
                        && prev.as_mark().and_then(Mark::as_tone) == Some(t)
                }
                _ => false,
            },
            _ => false,
        };
        if !absorbed {
            items.push(item.clone());
        }
    }
    PointedSeq { items }
}

/// Word ordinal of each item (`None` for marks).
fn word_ordinals(seq: &PointedSeq) -> Vec<Option<usize>> {
    let mut n = 0;
    seq.items
        .iter()
        .map(|item| match item {
            Token::Word(_) => {
                n += 1;
                Some(n - 1)
            }
            Token::Mark(_) => None,
        })
        .collect()
}

fn nearest_word(ordinals: &[Option<usize>], from: usize, leftward: bool) -> Option<usize> {
    if leftward {
        ordinals[..from].iter().rev().find_map(|o| *o)
    } else {
        ordinals[from + 1..].iter().find_map(|o| *o)
    }
}

/// Sets every mark in the font and face of the word it attaches to. Tone
/// indicators follow the phrase that owns them; a bracket pair harmonizes
/// only when both ends agree.
pub fn harmonize(seq: &PointedSeq, overlay: &VisualOverlay, cfg: &Config) -> VisualOverlay {
    let mut out = overlay.clone();
    out.mark_attrs.clear();
    if !cfg.harmony {
        return out;
    }
    let ordinals = word_ordinals(seq);
    let word_attrs = overlay.resolve_all();
    let looked = |pos: usize, leftward: bool| -> VisualAttrs {
        nearest_word(&ordinals, pos, leftward)
            .or_else(|| nearest_word(&ordinals, pos, !leftward))
            .and_then(|w| word_attrs.get(w).copied())
            .unwrap_or_default()
    };
    let mut attrs: Vec<Option<VisualAttrs>> = alloc::vec![None; seq.items.len()];
    let mut stack: Vec<usize> = Vec::new();
    for (pos, item) in seq.items.iter().enumerate() {
        let Token::Mark(mark) = item else { continue };
        attrs[pos] = Some(match mark.kind {
            MarkKind::Point(_) => looked(pos, true),
            MarkKind::Tone(_) => mark.owner_visual,
            MarkKind::Bracket(b) => match b.side {
                Side::Open => {
                    stack.push(pos);
                    looked(pos, false)
                }
                Side::Close => {
                    let here = looked(pos, true);
                    match stack.pop() {
                        Some(open) if attrs[open] == Some(here) => here,
                        Some(open) => {
                            attrs[open] = Some(VisualAttrs::default());
                            VisualAttrs::default()
                        }
                        None => here,
                    }
                }
            },
        });
    }
    out.mark_attrs = attrs
        .into_iter()
        .enumerate()
        .filter_map(|(pos, a)| a.filter(|a| !a.is_default()).map(|a| (pos, a)))
        .collect();
    out
}

fn glyph(mark: &Mark, cfg: &Config) -> &'static str {
    match mark.kind {
        MarkKind::Point(PointKind::Comma) => ",",
        MarkKind::Point(PointKind::Dash) => cfg.dash_glyph(),
        MarkKind::Point(PointKind::Semicolon) => ";",
        MarkKind::Point(PointKind::Colon) => ":",
        MarkKind::Point(PointKind::Period) => ".",
        MarkKind::Bracket(b) => b.shape.glyph(b.side),
        MarkKind::Tone(t) => t.glyph(),
    }
}

/// Spacing between two adjacent items.
fn separator(items: &[Token], i: usize, cfg: &Config) -> &'static str {
    let (a, b) = (&items[i - 1], &items[i]);
    let (ma, mb) = (a.as_mark(), b.as_mark());
    if let (Some(x), Some(y)) = (ma.and_then(Mark::as_bracket), mb.and_then(Mark::as_bracket)) {
        if x.shape.is_quote() && y.shape.is_quote() && x.side == y.side && x.shape != y.shape {
            return " ";
        }
    }
    if let Some(m) = mb {
        match m.kind {
            MarkKind::Point(_) | MarkKind::Tone(_) => return "",
            MarkKind::Bracket(br) if br.side == Side::Close => return "",
            _ => {}
        }
    }
    if let Some(m) = ma {
        match m.kind {
            MarkKind::Bracket(br) if br.side == Side::Open => return "",
            MarkKind::Point(PointKind::Dash) => return "",
            MarkKind::Point(PointKind::Colon) => return cfg.sentence_space(),
            _ => {}
        }
        if m.origin == Origin::Terminal && matches!(b, Token::Word(_)) {
            return cfg.sentence_space();
        }
    }
    if matches!(mb.and_then(Mark::as_point), Some(PointKind::Dash)) {
        return "";
    }
    " "
}

fn open_tags(out: &mut Vec<String>, from: VisualAttrs, to: VisualAttrs, format: OutputFormat) {
    // Tags nest italic outside bold; a change to the outer one reopens the inner.
    let italic_changes = from.font != to.font;
    let bold_changes = from.face != to.face || (italic_changes && from.face == Face::Bold && to.face == Face::Bold);
    let (ital_open, ital_close, bold_open, bold_close) = match format {
        OutputFormat::Tagged => ("<i>", "</i>", "<b>", "</b>"),
        _ => (":BEG-ITAL", ":END-ITAL", ":BEG-BOLD", ":END-BOLD"),
    };
    if bold_changes && from.face == Face::Bold {
        out.push(bold_close.into());
    }
    if italic_changes {
        out.push(if to.font == Font::Italic { ital_open } else { ital_close }.into());
    }
    if bold_changes && to.face == Face::Bold {
        out.push(bold_open.into());
    }
}

/// Renders the sequence in `cfg.output_format`. Plain output ignores the
/// overlay entirely.
pub fn render(seq: &PointedSeq, overlay: &VisualOverlay, cfg: &Config) -> String {
    render_with_breaks(seq, overlay, cfg, &[])
}

/// Like [`render`], but item positions listed in `breaks` are preceded by
/// the given string instead of the usual spacing.
pub fn render_with_breaks(seq: &PointedSeq, overlay: &VisualOverlay, cfg: &Config, breaks: &[(usize, String)]) -> String {
    let format = cfg.output_format;
    let words = overlay.resolve_all();
    let ordinals = word_ordinals(seq);
    let attr_of = |pos: usize| -> VisualAttrs {
        if format == OutputFormat::Plain {
            return VisualAttrs::default();
        }
        match ordinals[pos] {
            Some(w) => words.get(w).copied().unwrap_or_default(),
            None => overlay.mark_attr(pos),
        }
    };
    let mut out = String::new();
    let mut current = VisualAttrs::default();
    for (pos, item) in seq.items.iter().enumerate() {
        let attrs = attr_of(pos);
        let sep: &str = match breaks.iter().find(|(p, _)| *p == pos) {
            Some((_, s)) => s,
            None if pos == 0 => "",
            None => separator(&seq.items, pos, cfg),
        };
        let text = match item {
            Token::Word(w) => w.surface.as_str(),
            Token::Mark(m) => glyph(m, cfg),
        };
        let mut tags = Vec::new();
        if attrs != current {
            open_tags(&mut tags, current, attrs, format);
        }
        match format {
            OutputFormat::Directive if !tags.is_empty() => {
                let closing = tags.iter().take_while(|t| t.starts_with(":END")).count();
                for t in &tags[..closing] {
                    out.push(' ');
                    out.push_str(t);
                }
                out.push(' ');
                for t in &tags[closing..] {
                    out.push_str(t);
                    out.push(' ');
                }
            }
            OutputFormat::Tagged => {
                let closing = tags.iter().take_while(|t| t.starts_with("</")).count();
                for t in &tags[..closing] {
                    out.push_str(t);
                }
                out.push_str(sep);
                for t in &tags[closing..] {
                    out.push_str(t);
                }
            }
            _ => out.push_str(sep),
        }
        out.push_str(text);
        current = attrs;
    }
    let mut tail = Vec::new();
    open_tags(&mut tail, current, VisualAttrs::default(), format);
    for t in tail {
        if format == OutputFormat::Directive {
            out.push(' ');
        }
        out.push_str(&t);
    }
    let trimmed = out.trim_matches(' ');
    if trimmed.len() == out.len() {
        out
    } else {
        trimmed.into()
    }
}
