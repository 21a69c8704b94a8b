//! The `speck` puzzle description language.
//!
//! ```text
//! # Six cats eat six mice in six minutes...
//! puzzle rate "cats" {
//!     work = 6 mice; subjects = 6 cats; time = 6 min
//!     find subjects where work = 100, time = 50 min
//! }
//! puzzle weighing { objects = 13 }
//! puzzle pigeonhole { counts = (blue: 10, red: 8, black: 12); required = 2 }
//! puzzle transfer { container_a = (red: 2, blue: 2); container_b = (blue: 2); moved = 1; query = color red }
//! puzzle station { early = 1 h; saved = 10 min }
//! ```
//!
//! Statements end at `;` or a newline, `#` starts a comment, and time
//! values take `min` or `h` (converted to minutes). A word after a count is
//! a free-form label. Pigeonhole and transfer counts are individual objects,
//! so "five pairs of socks" is written as `10`.

mod lexer;
mod parser;
mod serialize;

use std::fmt;

pub use parser::parse_puzzles;
pub use serialize::serialize_puzzle;

/// 1-based position of a token; never spans more than one line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    UnknownKind,
    UnknownKey,
    MissingKey,
    DuplicateKey,
    TypeMismatch,
    BadUnit,
    NegativeCount,
    /// A well-formed value the puzzle cannot accept (zero objects, moving
    /// more objects than a container holds, ...).
    InvalidValue,
    Syntax,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::UnknownKind => "unknown kind",
            ParseErrorKind::UnknownKey => "unknown key",
            ParseErrorKind::MissingKey => "missing key",
            ParseErrorKind::DuplicateKey => "duplicate key",
            ParseErrorKind::TypeMismatch => "type mismatch",
            ParseErrorKind::BadUnit => "bad unit",
            ParseErrorKind::NegativeCount => "negative count",
            ParseErrorKind::InvalidValue => "invalid value",
            ParseErrorKind::Syntax => "syntax error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{span}: {}: {message}", kind.as_str())]
pub struct ParseError {
    pub span: SourceSpan,
    pub kind: ParseErrorKind,
    pub message: String,
}
