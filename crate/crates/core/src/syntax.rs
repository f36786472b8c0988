//! Shared lexical helpers for the text formats: positions, diagnostics and
//! the word-factor syntax `g`, `g^-1`, `g^k`, `[a>b]^k`.

use std::fmt;

/// A syntax or resolution error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// A whitespace-delimited token together with its 1-based column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

/// Splits `s` on whitespace, keeping the column of each token. `offset` is the
/// 0-based column at which `s` starts in its line.
pub fn tokens(s: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(b) = start.take() {
                out.push(Token { text: &s[b..i], column: offset + column_of(s, b) });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        out.push(Token { text: &s[b..], column: offset + column_of(s, b) });
    }
    out
}

fn column_of(s: &str, byte: usize) -> usize {
    s[..byte].chars().count() + 1
}

/// Strips a `#` comment.
pub fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// If `line` (comment-stripped) starts with `key:` returns the rest and its
/// 0-based character offset.
pub fn keyed<'a>(line: &'a str, key: &str) -> Option<(&'a str, usize)> {
    let trimmed = line.trim_start();
    let lead = line.len() - trimmed.len();
    let rest = trimmed.strip_prefix(key)?.strip_prefix(':')?;
    let offset = line[..lead + key.len() + 1].chars().count();
    Some((rest, offset))
}

/// One factor `name^exponent` of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor<'a> {
    pub name: &'a str,
    pub exponent: i64,
    pub column: usize,
}

/// Parses whitespace separated factors. `line` and `offset` locate the text
/// for diagnostics.
pub fn parse_factors(s: &str, line: usize, offset: usize) -> Result<Vec<Factor<'_>>, ParseError> {
    tokens(s, offset).into_iter().map(|t| parse_factor(t, line)).collect()
}

fn parse_factor(tok: Token<'_>, line: usize) -> Result<Factor<'_>, ParseError> {
    let (name, exponent) = match tok.text.split_once('^') {
        None => (tok.text, 1),
        Some((name, exp)) => {
            let k: i64 = exp
                .parse()
                .map_err(|_| ParseError::new(line, tok.column + name.len() + 1, format!("bad exponent `{exp}`")))?;
            if k == 0 {
                return Err(ParseError::new(line, tok.column + name.len() + 1, "exponent must be nonzero"));
            }
            (name, k)
        }
    };
    if name.is_empty() {
        return Err(ParseError::new(line, tok.column, "empty generator name"));
    }
    if name.starts_with('[') {
        if edge_letter_parts(name).is_none() {
            return Err(ParseError::new(line, tok.column, format!("malformed edge letter `{name}`")));
        }
    } else if let Some(bad) = name.chars().find(|c| !is_ident_char(*c)) {
        return Err(ParseError::new(line, tok.column, format!("unexpected `{bad}` in generator `{name}`")));
    }
    Ok(Factor { name, exponent, column: tok.column })
}

/// Characters allowed in vertex identifiers and plain generator names.
pub fn is_ident_char(c: char) -> bool {
    !(c.is_whitespace() || matches!(c, '-' | '^' | '[' | ']' | '>' | '#' | ',' | ':'))
}

pub fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_ident_char)
}

/// Splits `[a>b]` into `("a", "b")`.
pub fn edge_letter_parts(s: &str) -> Option<(&str, &str)> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?;
    let (a, b) = inner.split_once('>')?;
    (is_identifier(a) && is_identifier(b)).then_some((a, b))
}

/// Writes `name`, `name^-1` or `name^k`.
pub struct FactorDisplay<'a>(pub &'a str, pub i64);

impl fmt::Display for FactorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.1 {
            1 => write!(f, "{}", self.0),
            k => write!(f, "{}^{}", self.0, k),
        }
    }
}
