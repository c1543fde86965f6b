use core::fmt;
use core::str::FromStr;

/// How closing quotes interact with commas and periods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QuoteStyle {
    /// Commas and periods move inside closing quotes.
    #[default]
    American,
    /// Marks stay where the structure puts them (e.g. technical manuals).
    Precise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExpansionMode {
    /// Nested colon-expansions and nested parentheticals are rewritten.
    #[default]
    Rewrite,
    /// Nesting violations are reported as errors.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    /// `<i>`/`<b>` tags around maximal visual spans.
    Tagged,
    /// `:BEG-ITAL`/`:END-ITAL` style directive tokens.
    Directive,
}

impl OutputFormat {
    pub const ALL: [OutputFormat; 3] = [OutputFormat::Plain, OutputFormat::Tagged, OutputFormat::Directive];

    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Tagged => "tagged",
            OutputFormat::Directive => "directive",
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFormat(pub alloc::string::String);

impl fmt::Display for UnknownFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown output format `{}` (expected plain, tagged or directive)", self.0)
    }
}

impl core::error::Error for UnknownFormat {}

impl FromStr for OutputFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "tagged" => Ok(OutputFormat::Tagged),
            "directive" => Ok(OutputFormat::Directive),
            other => Err(UnknownFormat(other.into())),
        }
    }
}

/// Engine configuration. `Config::default()` gives the standard behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub quote_style: QuoteStyle,
    pub harmony: bool,
    /// A sentence's own tone indicator is absorbed by an identical,
    /// immediately preceding tone indicator (a question-titled question).
    pub tone_italic_absorption: bool,
    pub expansion_mode: ExpansionMode,
    /// Suppress promotion when only the last item has internal punctuation,
    /// and never promote below the highest promoted series.
    pub promotion_refinements: bool,
    /// When a promoted semicolon and a colon meet, keep the semicolon.
    pub prefer_promoted_semicolon: bool,
    pub output_format: OutputFormat,
    pub ascii_dash: bool,
    /// Two spaces after sentence ends and colons. `None` picks per format:
    /// two in plain output, one otherwise.
    pub wide_spacing: Option<bool>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            quote_style: QuoteStyle::American,
            harmony: true,
            tone_italic_absorption: true,
            expansion_mode: ExpansionMode::Rewrite,
            promotion_refinements: false,
            prefer_promoted_semicolon: false,
            output_format: OutputFormat::Plain,
            ascii_dash: false,
            wide_spacing: None,
        }
    }
}

impl Config {
    pub fn with_format(mut self, format: OutputFormat) -> Self {
        self.output_format = format;
        self
    }

    pub fn wide(&self) -> bool {
        self.wide_spacing.unwrap_or(self.output_format == OutputFormat::Plain)
    }

    /// Space placed between sentences and after colons.
    pub fn sentence_space(&self) -> &'static str {
        if self.wide() { "  " } else { " " }
    }

    pub fn dash_glyph(&self) -> &'static str {
        if self.ascii_dash { "--" } else { "\u{2014}" }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = Config::default();
        assert_eq!(c.quote_style, QuoteStyle::American);
        assert!(c.harmony && c.tone_italic_absorption);
        assert_eq!(c.expansion_mode, ExpansionMode::Rewrite);
        assert!(!c.promotion_refinements && !c.ascii_dash);
        assert_eq!(c.output_format, OutputFormat::Plain);
        assert_eq!(c.sentence_space(), "  ");
        assert_eq!(c.with_format(OutputFormat::Tagged).sentence_space(), " ");
    }

    #[test]
    fn format_names() {
        for f in OutputFormat::ALL {
            assert_eq!(f.name().parse::<OutputFormat>(), Ok(f));
        }
        assert!("html".parse::<OutputFormat>().is_err());
    }
}
