//! Data types shared by every stage: the mark taxonomy, lexemes, the
//! syntactic tree and the two sequence structures produced by linearization
//! and point insertion.

use alloc::string::String;
use alloc::vec::Vec;

/// A non-bracket punctuation mark that competes for insertion sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKind {
    Comma,
    Dash,
    Semicolon,
    Colon,
    Period,
}

impl PointKind {
    pub const ALL: [PointKind; 5] = [
        PointKind::Comma,
        PointKind::Dash,
        PointKind::Semicolon,
        PointKind::Colon,
        PointKind::Period,
    ];

    /// Absorption rank: the stronger point wins a contested site.
    pub const fn strength(self) -> u8 {
        match self {
            PointKind::Comma => 1,
            PointKind::Dash => 2,
            PointKind::Semicolon => 3,
            PointKind::Colon => 4,
            PointKind::Period => 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BracketShape {
    Paren,
    Square,
    DoubleQuote,
    SingleQuote,
}

impl BracketShape {
    pub fn is_quote(self) -> bool {
        matches!(self, BracketShape::DoubleQuote | BracketShape::SingleQuote)
    }

    pub fn glyph(self, side: Side) -> &'static str {
        match (self, side) {
            (BracketShape::Paren, Side::Open) => "(",
            (BracketShape::Paren, Side::Close) => ")",
            (BracketShape::Square, Side::Open) => "[",
            (BracketShape::Square, Side::Close) => "]",
            (BracketShape::DoubleQuote, Side::Open) => "\u{201c}",
            (BracketShape::DoubleQuote, Side::Close) => "\u{201d}",
            (BracketShape::SingleQuote, Side::Open) => "\u{2018}",
            (BracketShape::SingleQuote, Side::Close) => "\u{2019}",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Open,
    Close,
}

/// One end of a bracket pair. Brackets are never deleted by any rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bracket {
    pub shape: BracketShape,
    pub side: Side,
}

impl Bracket {
    pub const fn open(shape: BracketShape) -> Self {
        Bracket { shape, side: Side::Open }
    }

    pub const fn close(shape: BracketShape) -> Self {
        Bracket { shape, side: Side::Close }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ToneIndicator {
    QuestionMark,
    ExclamationPoint,
}

impl ToneIndicator {
    pub fn glyph(self) -> &'static str {
        match self {
            ToneIndicator::QuestionMark => "?",
            ToneIndicator::ExclamationPoint => "!",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MarkKind {
    Point(PointKind),
    Bracket(Bracket),
    Tone(ToneIndicator),
}

/// Where a mark came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Requested directly by the input structure.
    Explicit,
    /// Introduced by a default-punctuation rule.
    Default,
    /// A series separator promoted from comma to semicolon.
    Promoted,
    /// Attached to a lexeme rather than a phrase.
    Lexical,
    /// Ends a (root or embedded) sentence.
    Terminal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mark {
    pub kind: MarkKind,
    pub origin: Origin,
    /// Visual attributes of the phrase that emitted the mark. Only harmony
    /// consults this, to keep tone indicators within their logical scope.
    pub owner_visual: VisualAttrs,
}

impl Mark {
    pub fn new(kind: MarkKind, origin: Origin) -> Self {
        Mark { kind, origin, owner_visual: VisualAttrs::default() }
    }

    pub fn point(kind: PointKind, origin: Origin) -> Self {
        Mark::new(MarkKind::Point(kind), origin)
    }

    pub fn bracket(bracket: Bracket, origin: Origin) -> Self {
        Mark::new(MarkKind::Bracket(bracket), origin)
    }

    pub fn tone(tone: ToneIndicator, origin: Origin) -> Self {
        Mark::new(MarkKind::Tone(tone), origin)
    }

    pub fn with_owner(mut self, visual: VisualAttrs) -> Self {
        self.owner_visual = visual;
        self
    }

    pub fn as_point(&self) -> Option<PointKind> {
        match self.kind {
            MarkKind::Point(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_bracket(&self) -> Option<Bracket> {
        match self.kind {
            MarkKind::Bracket(b) => Some(b),
            _ => None,
        }
    }

    pub fn as_tone(&self) -> Option<ToneIndicator> {
        match self.kind {
            MarkKind::Tone(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_point(&self) -> bool {
        self.as_point().is_some()
    }

    pub fn is_close_quote(&self) -> bool {
        matches!(self.kind, MarkKind::Bracket(Bracket { shape, side: Side::Close }) if shape.is_quote())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Font {
    #[default]
    Roman,
    Italic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Face {
    #[default]
    Regular,
    Bold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VisualAttrs {
    pub font: Font,
    pub face: Face,
}

impl VisualAttrs {
    pub const ITALIC: VisualAttrs = VisualAttrs { font: Font::Italic, face: Face::Regular };
    pub const BOLD: VisualAttrs = VisualAttrs { font: Font::Roman, face: Face::Bold };

    pub fn is_default(&self) -> bool {
        *self == VisualAttrs::default()
    }
}

/// Which boundary of a token a lexical mark sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    Left,
    Right,
}

/// A word form with its lexical presentation attributes.
///
/// An abbreviation period is part of `surface` and flagged by
/// `abbrev_period`; it is never a [`PointKind::Period`] mark, so point
/// insertion cannot see it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Lexeme {
    pub surface: String,
    pub abbrev_period: bool,
    /// Lexical font/face; the default means "inherit from the phrase".
    pub visual: VisualAttrs,
    pub lexical_marks: Vec<(Edge, Mark)>,
}

impl Lexeme {
    pub fn new(surface: impl Into<String>) -> Self {
        Lexeme { surface: surface.into(), ..Lexeme::default() }
    }

    pub fn abbreviation(surface: impl Into<String>) -> Self {
        Lexeme { surface: surface.into(), abbrev_period: true, ..Lexeme::default() }
    }

    pub fn italic(mut self) -> Self {
        self.visual.font = Font::Italic;
        self
    }

    pub fn bold(mut self) -> Self {
        self.visual.face = Face::Bold;
        self
    }

    /// Lexically attached quotation marks around this word.
    pub fn quoted(mut self, shape: BracketShape) -> Self {
        self.lexical_marks.push((Edge::Left, Mark::bracket(Bracket::open(shape), Origin::Lexical)));
        self.lexical_marks.push((Edge::Right, Mark::bracket(Bracket::close(shape), Origin::Lexical)));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.surface.is_empty()
    }
}

/// Phrasal enclosure ("between X").
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Enclosure {
    /// Paired commas at both ends.
    Comma,
    /// Paired dashes at both ends.
    Dash,
    Paren,
    Square,
    DoubleQuote,
    SingleQuote,
    /// A single leading colon.
    ColonExpansion,
    /// A single leading dash.
    DashExpansion,
}

impl Enclosure {
    pub fn bracket_shape(self) -> Option<BracketShape> {
        match self {
            Enclosure::Paren => Some(BracketShape::Paren),
            Enclosure::Square => Some(BracketShape::Square),
            Enclosure::DoubleQuote => Some(BracketShape::DoubleQuote),
            Enclosure::SingleQuote => Some(BracketShape::SingleQuote),
            _ => None,
        }
    }

    pub fn from_bracket(shape: BracketShape) -> Self {
        match shape {
            BracketShape::Paren => Enclosure::Paren,
            BracketShape::Square => Enclosure::Square,
            BracketShape::DoubleQuote => Enclosure::DoubleQuote,
            BracketShape::SingleQuote => Enclosure::SingleQuote,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnclosureSpec {
    pub kind: Enclosure,
    pub origin: Origin,
}

impl EnclosureSpec {
    pub fn explicit(kind: Enclosure) -> Self {
        EnclosureSpec { kind, origin: Origin::Explicit }
    }
}

/// Separator settings for a node whose `coord` children form a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesAttrs {
    pub separator: PointKind,
    pub separator_origin: Origin,
    /// Whether a separator precedes an item introduced by a conjunction.
    pub serial: bool,
}

impl Default for SeriesAttrs {
    fn default() -> Self {
        SeriesAttrs { separator: PointKind::Comma, separator_origin: Origin::Default, serial: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PhraseAttrs {
    /// Enclosures, innermost first.
    pub btw: Vec<EnclosureSpec>,
    /// Visual attributes for the whole phrase.
    pub visual: Option<VisualAttrs>,
    /// Explicit points at the phrase's left edge, outside its enclosures.
    pub left: Vec<PointKind>,
    /// Explicit points at the phrase's right edge, outside its enclosures.
    pub right: Vec<PointKind>,
    /// Tone indicator closing the phrase's content.
    pub tone: Option<ToneIndicator>,
    /// The phrase is an embedded complete sentence and carries its own
    /// terminal period (which bracket absorption usually removes).
    pub sentence: bool,
    /// Conjunction word emitted before this phrase when it is a series item.
    pub conj: Option<String>,
    pub series: SeriesAttrs,
}

impl PhraseAttrs {
    pub fn has_enclosure(&self, kind: Enclosure) -> bool {
        self.btw.iter().any(|e| e.kind == kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Position {
    Before,
    After,
}

/// Relation name marking series items.
pub const COORD: &str = "coord";
/// Relation name triggering default commas.
pub const DESCR_ATTR: &str = "descr-attr";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub position: Position,
    pub order: i32,
    pub child: SyntTree,
}

/// Ordered dependency tree. Each node is a lexeme (possibly empty, for pure
/// grouping nodes) with phrasal attributes and ordered dependents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SyntTree {
    pub lexeme: Lexeme,
    pub attrs: PhraseAttrs,
    pub rels: Vec<Relation>,
}

impl SyntTree {
    pub fn new(lexeme: Lexeme) -> Self {
        SyntTree { lexeme, ..SyntTree::default() }
    }

    pub fn word(surface: &str) -> Self {
        SyntTree::new(Lexeme::new(surface))
    }

    /// An empty-headed grouping node.
    pub fn group() -> Self {
        SyntTree::default()
    }

    pub fn with_btw(mut self, kind: Enclosure) -> Self {
        self.attrs.btw.push(EnclosureSpec::explicit(kind));
        self
    }

    pub fn with_left(mut self, point: PointKind) -> Self {
        self.attrs.left.push(point);
        self
    }

    pub fn with_right(mut self, point: PointKind) -> Self {
        self.attrs.right.push(point);
        self
    }

    pub fn with_tone(mut self, tone: ToneIndicator) -> Self {
        self.attrs.tone = Some(tone);
        self
    }

    pub fn with_visual(mut self, visual: VisualAttrs) -> Self {
        self.attrs.visual = Some(visual);
        self
    }

    pub fn embedded_sentence(mut self) -> Self {
        self.attrs.sentence = true;
        self
    }

    pub fn with_conj(mut self, conj: &str) -> Self {
        self.attrs.conj = Some(conj.into());
        self
    }

    pub fn non_serial(mut self) -> Self {
        self.attrs.series.serial = false;
        self
    }

    fn push_rel(mut self, name: &str, position: Position, child: SyntTree) -> Self {
        let order = self.rels.iter().filter(|r| r.position == position).map(|r| r.order + 1).max().unwrap_or(0);
        self.rels.push(Relation { name: name.into(), position, order, child });
        self
    }

    /// Adds a dependent placed after the head (and after earlier `after` dependents).
    pub fn after(self, name: &str, child: SyntTree) -> Self {
        self.push_rel(name, Position::After, child)
    }

    /// Adds a dependent placed before the head (after earlier `before` dependents).
    pub fn before(self, name: &str, child: SyntTree) -> Self {
        self.push_rel(name, Position::Before, child)
    }

    pub fn is_series(&self) -> bool {
        self.rels.iter().filter(|r| r.name == COORD).count() >= 2
    }

    pub fn nodes(&self) -> usize {
        1 + self.rels.iter().map(|r| r.child.nodes()).sum::<usize>()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SentenceRole {
    /// A complete sentence: a terminal period is attached at the end.
    #[default]
    Independent,
    /// A fragment (title, heading, list intro): no terminal period.
    Fragment,
}

/// A token with boundary features in textual order: `left` runs outermost
/// to innermost, `right` innermost to outermost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearToken {
    pub lexeme: Lexeme,
    pub left: Vec<Mark>,
    pub right: Vec<Mark>,
}

impl LinearToken {
    pub fn new(lexeme: Lexeme) -> Self {
        LinearToken { lexeme, left: Vec::new(), right: Vec::new() }
    }
}

/// Linearized morphological-stage input. Points are still unmerged
/// boundary features; several may vie for one site.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearSeq {
    pub tokens: Vec<LinearToken>,
    pub role: SentenceRole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Word(Lexeme),
    Mark(Mark),
}

impl Token {
    pub fn as_mark(&self) -> Option<&Mark> {
        match self {
            Token::Mark(m) => Some(m),
            Token::Word(_) => None,
        }
    }

    pub fn as_word(&self) -> Option<&Lexeme> {
        match self {
            Token::Word(w) => Some(w),
            Token::Mark(_) => None,
        }
    }
}

/// Words interleaved with explicit marks, after point insertion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointedSeq {
    pub items: Vec<Token>,
}

impl PointedSeq {
    pub fn words(&self) -> impl Iterator<Item = &Lexeme> {
        self.items.iter().filter_map(Token::as_word)
    }

    pub fn marks(&self) -> impl Iterator<Item = &Mark> {
        self.items.iter().filter_map(Token::as_mark)
    }

    /// No two point marks are adjacent.
    pub fn points_separated(&self) -> bool {
        !self.items.windows(2).any(|w| {
            matches!((&w[0], &w[1]), (Token::Mark(a), Token::Mark(b)) if a.is_point() && b.is_point())
        })
    }

    /// Every open bracket is closed by one of the same shape, properly nested.
    pub fn brackets_balanced(&self) -> bool {
        let mut stack = Vec::new();
        for bracket in self.marks().filter_map(Mark::as_bracket) {
            match bracket.side {
                Side::Open => stack.push(bracket.shape),
                Side::Close => {
                    if stack.pop() != Some(bracket.shape) {
                        return false;
                    }
                }
            }
        }
        stack.is_empty()
    }
}
