//! Line-oriented text formats and random instance generation.
//!
//! All formats ignore blank lines and lines starting with `#` (DIMACS uses
//! `c` for comments instead).

mod ddg;
mod dimacs;
mod gen;
mod names;
mod tg;
mod wit;

use thiserror::Error;

pub use ddg::{parse_ddg, serialize_ddg};
pub use dimacs::{parse_dimacs, serialize_dimacs};
pub use gen::{gen_random, GenError};
pub use names::{parse_names_jsonl, serialize_names_jsonl, NameRecord};
pub use tg::{parse_tg, parse_tg_document, serialize_tg, serialize_tg_document, TgDocument};
pub use wit::{parse_witness, serialize_witness, WitnessDocument};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is the input as a whole.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Non-empty, non-comment lines with their 1-based numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T, ParseError> {
    let token = token.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    token.parse().map_err(|_| ParseError::new(line, format!("invalid {what} '{token}'")))
}

pub(crate) fn expect_end<'a>(line: usize, mut rest: impl Iterator<Item = &'a str>) -> Result<(), ParseError> {
    match rest.next() {
        Some(tok) => Err(ParseError::new(line, format!("unexpected token '{tok}'"))),
        None => Ok(()),
    }
}
