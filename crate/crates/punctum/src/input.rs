//! JSON input documents.
//!
//! ```json
//! {"schema": "1", "blocks": [
//!   {"type": "sentence", "discourse": "paren", "tree": {
//!     "lexeme": "programmers",
//!     "rels": [{"rel": "descr-attr", "pos": "after", "order": 0,
//!               "child": {"lexeme": "Mr. Q.A.", "attrs": {"abbrev": true, "btw": ["dblqt"]}}}]}}
//! ]}
//! ```

use punctum_core::{
    model::EnclosureSpec, Block, BracketShape, Config, Document, Enclosure, Enumerator,
    ExpansionMode, Face, Font, Lexeme, ListBlock, ListStyle, Origin, PhraseAttrs, PointKind,
    Position, QuoteStyle, Relation, SentenceRole, SeriesAttrs, SyntTree, ToneIndicator,
    VisualAttrs,
};
use serde::Deserialize;

use crate::error::ParseError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentJson {
    #[serde(default)]
    schema: Option<String>,
    blocks: Vec<serde_json::Value>,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum ShapeJson {
    Paren,
    Square,
    Dblqt,
    Sglqt,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SentenceJson {
    #[serde(default)]
    discourse: Option<ShapeJson>,
    #[serde(default)]
    fragment: bool,
    tree: NodeJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    #[serde(default)]
    discourse: Option<ShapeJson>,
    sentences: Vec<NodeJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ListJson {
    style: StyleJson,
    #[serde(default)]
    single_sentence: bool,
    #[serde(default)]
    conjunction: Option<String>,
    #[serde(default)]
    intro: Option<NodeJson>,
    items: Vec<NodeJson>,
    #[serde(default)]
    enumerator: Option<EnumeratorJson>,
}

// Blocks are dispatched on "type" by hand: serde's internally tagged enums
// buffer their content and lose the error path.
enum BlockJson {
    Sentence(SentenceJson),
    Group(GroupJson),
    List(ListJson),
}

#[derive(Deserialize)]
#[serde(rename_all = "kebab-case")]
enum StyleJson {
    Vertical,
    RunIn,
}

#[derive(Deserialize)]
#[serde(rename_all = "kebab-case")]
enum EnumeratorJson {
    Number,
    Bullet,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeJson {
    #[serde(default)]
    lexeme: String,
    #[serde(default)]
    attrs: AttrsJson,
    #[serde(default)]
    rels: Vec<RelJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RelJson {
    rel: String,
    pos: PosJson,
    #[serde(default)]
    order: Option<i32>,
    child: NodeJson,
}

#[derive(Deserialize, PartialEq)]
#[serde(rename_all = "kebab-case")]
enum PosJson {
    Before,
    After,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct AttrsJson {
    #[serde(default)]
    btw: Vec<EnclosureJson>,
    #[serde(default)]
    font: Option<LexFontJson>,
    #[serde(default)]
    abbrev: bool,
    #[serde(default)]
    quote: Option<QuoteJson>,
    #[serde(default)]
    visual: Option<VisualJson>,
    #[serde(default)]
    left: Vec<PointJson>,
    #[serde(default)]
    right: Vec<PointJson>,
    #[serde(default)]
    tone: Option<ToneJson>,
    #[serde(default)]
    sentence: bool,
    #[serde(default)]
    conj: Option<String>,
    #[serde(default)]
    serial: Option<bool>,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum EnclosureJson {
    Comma,
    Dash,
    Paren,
    Square,
    Dblqt,
    Sglqt,
    ColonExp,
    DashExp,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum LexFontJson {
    Ital,
    Bold,
    BoldItal,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum QuoteJson {
    Double,
    Single,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(deny_unknown_fields)]
struct VisualJson {
    #[serde(default)]
    font: Option<FontJson>,
    #[serde(default)]
    face: Option<FaceJson>,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum FontJson {
    Ital,
    Roman,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum FaceJson {
    Bold,
    Regular,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum PointJson {
    Comma,
    Dash,
    Semicolon,
    Colon,
    Period,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum ToneJson {
    Question,
    Exclaim,
}

fn shape(s: ShapeJson) -> BracketShape {
    match s {
        ShapeJson::Paren => BracketShape::Paren,
        ShapeJson::Square => BracketShape::Square,
        ShapeJson::Dblqt => BracketShape::DoubleQuote,
        ShapeJson::Sglqt => BracketShape::SingleQuote,
    }
}

fn point(p: PointJson) -> PointKind {
    match p {
        PointJson::Comma => PointKind::Comma,
        PointJson::Dash => PointKind::Dash,
        PointJson::Semicolon => PointKind::Semicolon,
        PointJson::Colon => PointKind::Colon,
        PointJson::Period => PointKind::Period,
    }
}

fn enclosure(e: EnclosureJson) -> Enclosure {
    match e {
        EnclosureJson::Comma => Enclosure::Comma,
        EnclosureJson::Dash => Enclosure::Dash,
        EnclosureJson::Paren => Enclosure::Paren,
        EnclosureJson::Square => Enclosure::Square,
        EnclosureJson::Dblqt => Enclosure::DoubleQuote,
        EnclosureJson::Sglqt => Enclosure::SingleQuote,
        EnclosureJson::ColonExp => Enclosure::ColonExpansion,
        EnclosureJson::DashExp => Enclosure::DashExpansion,
    }
}

fn node(n: NodeJson) -> SyntTree {
    let a = n.attrs;
    let mut lexeme = Lexeme::new(n.lexeme);
    lexeme.abbrev_period = a.abbrev;
    match a.font {
        Some(LexFontJson::Ital) => lexeme = lexeme.italic(),
        Some(LexFontJson::Bold) => lexeme = lexeme.bold(),
        Some(LexFontJson::BoldItal) => lexeme = lexeme.italic().bold(),
        None => {}
    }
    match a.quote {
        Some(QuoteJson::Double) => lexeme = lexeme.quoted(BracketShape::DoubleQuote),
        Some(QuoteJson::Single) => lexeme = lexeme.quoted(BracketShape::SingleQuote),
        None => {}
    }
    let visual = a.visual.map(|v| VisualAttrs {
        font: match v.font {
            Some(FontJson::Ital) => Font::Italic,
            _ => Font::Roman,
        },
        face: match v.face {
            Some(FaceJson::Bold) => Face::Bold,
            _ => Face::Regular,
        },
    });
    let attrs = PhraseAttrs {
        btw: a.btw.into_iter().map(|e| EnclosureSpec { kind: enclosure(e), origin: Origin::Explicit }).collect(),
        visual,
        left: a.left.into_iter().map(point).collect(),
        right: a.right.into_iter().map(point).collect(),
        tone: a.tone.map(|t| match t {
            ToneJson::Question => ToneIndicator::QuestionMark,
            ToneJson::Exclaim => ToneIndicator::ExclamationPoint,
        }),
        sentence: a.sentence,
        conj: a.conj,
        series: SeriesAttrs { serial: a.serial.unwrap_or(true), ..SeriesAttrs::default() },
    };
    let mut next = [0i32; 2];
    let rels = n
        .rels
        .into_iter()
        .map(|r| {
            let (position, slot) = match r.pos {
                PosJson::Before => (Position::Before, 0),
                PosJson::After => (Position::After, 1),
            };
            let order = r.order.unwrap_or(next[slot]);
            next[slot] = next[slot].max(order + 1);
            Relation { name: r.rel, position, order, child: node(r.child) }
        })
        .collect();
    SyntTree { lexeme, attrs, rels }
}

fn block(b: BlockJson) -> Block {
    match b {
        BlockJson::Sentence(SentenceJson { discourse, fragment, tree }) => Block::Sentence {
            tree: node(tree),
            discourse: discourse.map(shape),
            role: if fragment { SentenceRole::Fragment } else { SentenceRole::Independent },
        },
        BlockJson::Group(GroupJson { discourse, sentences }) => Block::Group {
            sentences: sentences.into_iter().map(node).collect(),
            discourse: discourse.map(shape),
        },
        BlockJson::List(ListJson { style, single_sentence, conjunction, intro, items, enumerator }) => Block::List(ListBlock {
            style: match style {
                StyleJson::Vertical => ListStyle::Vertical,
                StyleJson::RunIn => ListStyle::RunIn,
            },
            intro: intro.map(node).unwrap_or_default(),
            items: items.into_iter().map(node).collect(),
            conjunction,
            single_sentence,
            enumerator: match enumerator {
                Some(EnumeratorJson::Bullet) => Enumerator::Bullet,
                _ => Enumerator::Number,
            },
        }),
    }
}

fn schema_error<E: core::fmt::Display>(path: String, e: E) -> ParseError {
    ParseError::Schema { path, message: e.to_string() }
}

fn from_json<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() {
            ParseError::Syntax(inner)
        } else {
            schema_error(path, inner)
        }
    })
}

fn from_value<T: serde::de::DeserializeOwned>(value: serde_json::Value, prefix: &str) -> Result<T, ParseError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let path = if path == "." { prefix.to_owned() } else { format!("{prefix}.{path}") };
        schema_error(path, e.into_inner())
    })
}

fn parse_block(index: usize, value: serde_json::Value) -> Result<BlockJson, ParseError> {
    let prefix = format!("blocks[{index}]");
    let serde_json::Value::Object(mut map) = value else {
        return Err(schema_error(prefix, "expected a block object"));
    };
    let kind = match map.remove("type") {
        Some(serde_json::Value::String(k)) => k,
        Some(_) => return Err(schema_error(format!("{prefix}.type"), "expected a string")),
        None => return Err(schema_error(prefix, "missing field `type`")),
    };
    let body = serde_json::Value::Object(map);
    match kind.as_str() {
        "sentence" => from_value(body, &prefix).map(BlockJson::Sentence),
        "group" => from_value(body, &prefix).map(BlockJson::Group),
        "list" => from_value(body, &prefix).map(BlockJson::List),
        other => Err(schema_error(
            format!("{prefix}.type"),
            format!("unknown variant `{other}`, expected one of `sentence`, `group`, `list`"),
        )),
    }
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let doc: DocumentJson = from_json(text)?;
    if let Some(v) = &doc.schema {
        if v != "1" {
            return Err(ParseError::Schema { path: "schema".into(), message: format!("unsupported schema version {v:?}") });
        }
    }
    let blocks = doc.blocks.into_iter().enumerate().map(|(i, v)| parse_block(i, v).map(block)).collect::<Result<_, _>>()?;
    Ok(Document { blocks })
}

/// Per-case configuration overrides of the golden corpus.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverrides {
    #[serde(default)]
    quote_style: Option<QuoteStyleJson>,
    #[serde(default)]
    harmony: Option<bool>,
    #[serde(default)]
    tone_italic_absorption: Option<bool>,
    #[serde(default)]
    strict_expansions: Option<bool>,
    #[serde(default)]
    promotion_refinements: Option<bool>,
    #[serde(default)]
    prefer_promoted_semicolon: Option<bool>,
    #[serde(default)]
    ascii_dash: Option<bool>,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum QuoteStyleJson {
    American,
    Precise,
}

impl ConfigOverrides {
    pub fn apply(&self, mut cfg: Config) -> Config {
        if let Some(q) = self.quote_style {
            cfg.quote_style = match q {
                QuoteStyleJson::American => QuoteStyle::American,
                QuoteStyleJson::Precise => QuoteStyle::Precise,
            };
        }
        if let Some(strict) = self.strict_expansions {
            cfg.expansion_mode = if strict { ExpansionMode::Strict } else { ExpansionMode::Rewrite };
        }
        cfg.harmony = self.harmony.unwrap_or(cfg.harmony);
        cfg.tone_italic_absorption = self.tone_italic_absorption.unwrap_or(cfg.tone_italic_absorption);
        cfg.promotion_refinements = self.promotion_refinements.unwrap_or(cfg.promotion_refinements);
        cfg.prefer_promoted_semicolon = self.prefer_promoted_semicolon.unwrap_or(cfg.prefer_promoted_semicolon);
        cfg.ascii_dash = self.ascii_dash.unwrap_or(cfg.ascii_dash);
        cfg
    }
}

pub fn parse_config(text: &str) -> Result<ConfigOverrides, ParseError> {
    from_json(text)
}
