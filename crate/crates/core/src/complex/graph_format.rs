//! Graph input: the line format
//!
//! ```text
//! # a square
//! vertices: a b c d
//! edges: a-b b-c c-d d-a
//! ```
//!
//! and the JSON form `{"vertices": [...], "edges": [["a","b"], ...]}`.

use serde::Deserialize;

use super::{ComplexError, FlagComplex};
use crate::syntax::{self, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphParseError {
    #[error("{0}")]
    Syntax(#[from] ParseError),
    #[error("{line}:{column}: {source}")]
    Invalid {
        line: usize,
        column: usize,
        #[source]
        source: ComplexError,
    },
}

impl GraphParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            GraphParseError::Syntax(e) => (e.line, e.column),
            GraphParseError::Invalid { line, column, .. } => (*line, *column),
        }
    }
}

/// Dispatches on the first non-blank character: `{` selects JSON.
pub fn parse_graph(text: &str, dim_cap: Option<usize>) -> Result<FlagComplex, GraphParseError> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text, dim_cap)
    } else {
        parse_graph_text(text, dim_cap)
    }
}

struct Located<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

pub fn parse_graph_text(text: &str, dim_cap: Option<usize>) -> Result<FlagComplex, GraphParseError> {
    let mut vertices: Vec<Located> = Vec::new();
    let mut edges: Vec<(Located, Located)> = Vec::new();
    let mut last_line = 1;

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        last_line = line_no;
        let line = syntax::strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if let Some((rest, off)) = syntax::keyed(line, "vertices") {
            for tok in syntax::tokens(rest, off) {
                if !syntax::is_identifier(tok.text) {
                    return Err(
                        ParseError::new(line_no, tok.column, format!("bad vertex identifier `{}`", tok.text)).into()
                    );
                }
                vertices.push(Located { text: tok.text, line: line_no, column: tok.column });
            }
        } else if let Some((rest, off)) = syntax::keyed(line, "edges") {
            for tok in syntax::tokens(rest, off) {
                let Some((a, b)) = tok.text.split_once('-') else {
                    return Err(
                        ParseError::new(line_no, tok.column, format!("expected `u-v`, found `{}`", tok.text)).into()
                    );
                };
                if !syntax::is_identifier(a) || !syntax::is_identifier(b) {
                    return Err(ParseError::new(line_no, tok.column, format!("bad edge `{}`", tok.text)).into());
                }
                edges.push((
                    Located { text: a, line: line_no, column: tok.column },
                    Located { text: b, line: line_no, column: tok.column + a.chars().count() + 1 },
                ));
            }
        } else {
            let col = line.len() - line.trim_start().len() + 1;
            return Err(ParseError::new(line_no, col, "expected `vertices:` or `edges:`").into());
        }
    }
    if vertices.is_empty() {
        return Err(ParseError::new(last_line, 1, "no vertices declared").into());
    }
    build(&vertices, &edges, dim_cap)
}

/// Reports construction errors at the first token they concern.
fn build(
    vertices: &[Located],
    edges: &[(Located, Located)],
    dim_cap: Option<usize>,
) -> Result<FlagComplex, GraphParseError> {
    let names: Vec<&str> = vertices.iter().map(|v| v.text).collect();
    let pairs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.text, b.text)).collect();
    FlagComplex::from_graph(&names, &pairs, dim_cap).map_err(|err| {
        let at = |l: &Located| (l.line, l.column);
        let (line, column) = match &err {
            ComplexError::DuplicateVertex(v) => vertices.iter().filter(|x| x.text == v).nth(1).map_or((1, 1), at),
            ComplexError::UnknownVertex(v) => {
                edges.iter().flat_map(|(a, b)| [a, b]).find(|x| x.text == v).map_or((1, 1), at)
            }
            ComplexError::LoopEdge(v) => {
                edges.iter().find(|(a, b)| a.text == v && b.text == v).map_or((1, 1), |(a, _)| at(a))
            }
            ComplexError::DuplicateEdge(u, v) => {
                let key = |a: &str, b: &str| {
                    if a < b {
                        (a.to_string(), b.to_string())
                    } else {
                        (b.to_string(), a.to_string())
                    }
                };
                let want = key(u, v);
                edges.iter().filter(|(a, b)| key(a.text, b.text) == want).nth(1).map_or((1, 1), |(a, _)| at(a))
            }
            _ => (1, 1),
        };
        GraphParseError::Invalid { line, column, source: err }
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String)>,
}

/// JSON input. Semantic errors are located at the offending string literal.
pub fn parse_graph_json(text: &str, dim_cap: Option<usize>) -> Result<FlagComplex, GraphParseError> {
    let g: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.column(), e.to_string()))?;
    let literals = string_literals(text);
    let mut cursor = literals.iter();
    // Literals appear in document order; match them against the declared values.
    let mut find = |s: &str| -> (usize, usize) {
        cursor.by_ref().find(|(lit, _, _)| lit == s).map_or((1, 1), |(_, l, c)| (*l, *c))
    };
    let (vertices, edges) = if text.find("\"edges\"").zip(text.find("\"vertices\"")).is_some_and(|(e, v)| e < v) {
        let edges: Vec<_> = g.edges.iter().map(|(a, b)| (locate(a, &mut find), locate(b, &mut find))).collect();
        let vertices: Vec<_> = g.vertices.iter().map(|v| locate(v, &mut find)).collect();
        (vertices, edges)
    } else {
        let vertices: Vec<_> = g.vertices.iter().map(|v| locate(v, &mut find)).collect();
        let edges: Vec<_> = g.edges.iter().map(|(a, b)| (locate(a, &mut find), locate(b, &mut find))).collect();
        (vertices, edges)
    };
    for v in &vertices {
        if !syntax::is_identifier(v.text) {
            return Err(ParseError::new(v.line, v.column, format!("bad vertex identifier `{}`", v.text)).into());
        }
    }
    if vertices.is_empty() {
        return Err(ParseError::new(1, 1, "no vertices declared").into());
    }
    build(&vertices, &edges, dim_cap)
}

fn locate<'a>(s: &'a str, find: &mut impl FnMut(&str) -> (usize, usize)) -> Located<'a> {
    let (line, column) = find(s);
    Located { text: s, line, column }
}

/// Every JSON string literal with its decoded value and 1-based position.
fn string_literals(text: &str) -> Vec<(String, usize, usize)> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(ch) = chars.next() {
        if ch == '"' {
            let (l0, c0) = (line, col);
            col += 1;
            let mut raw = String::from("\"");
            while let Some(c) = chars.next() {
                col += 1;
                raw.push(c);
                if c == '\\' {
                    if let Some(n) = chars.next() {
                        col += 1;
                        raw.push(n);
                    }
                } else if c == '"' {
                    break;
                }
            }
            if let Ok(s) = serde_json::from_str::<String>(&raw) {
                out.push((s, l0, c0));
            }
            continue;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format() {
        let c =
            parse_graph_text("# square\nvertices: a b c d\nedges: a-b b-c   # two\nedges: c-d d-a\n", None).unwrap();
        assert_eq!(c.f_vector(), vec![4, 4]);
        assert_eq!(c.vertex_names(), &["a", "b", "c", "d"]);
    }

    #[test]
    fn text_diagnostics() {
        let e = parse_graph_text("vertices: a b\nedges: a-b b-z\n", None).unwrap_err();
        assert_eq!(e.position(), (2, 14));
        assert!(matches!(e, GraphParseError::Invalid { source: ComplexError::UnknownVertex(_), .. }));

        let e = parse_graph_text("vertices: a b a\n", None).unwrap_err();
        assert_eq!(e.position(), (1, 15));

        let e = parse_graph_text("vertices: a\nedges: a-a\n", None).unwrap_err();
        assert_eq!(e.position(), (2, 8));

        let e = parse_graph_text("vertices: a b\nedges: a-b b-a\n", None).unwrap_err();
        assert_eq!(e.position(), (2, 12));

        let e = parse_graph_text("vertices: a b\nedges: ab\n", None).unwrap_err();
        assert!(matches!(e, GraphParseError::Syntax(_)));
        assert_eq!(e.position(), (2, 8));

        let e = parse_graph_text("verts: a\n", None).unwrap_err();
        assert_eq!(e.position(), (1, 1));

        assert!(parse_graph_text("# nothing\n", None).is_err());
    }

    #[test]
    fn json_format() {
        let c = parse_graph(r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["a","c"]]}"#, None).unwrap();
        assert_eq!(c.f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn json_diagnostics() {
        let text = "{\n  \"vertices\": [\"a\", \"b\"],\n  \"edges\": [[\"a\", \"q\"]]\n}";
        let e = parse_graph_json(text, None).unwrap_err();
        assert_eq!(e.position(), (3, 19));
        assert!(matches!(e, GraphParseError::Invalid { source: ComplexError::UnknownVertex(_), .. }));

        let e = parse_graph_json("{\"vertices\": [\"a\", \"a\"]}", None).unwrap_err();
        assert_eq!(e.position(), (1, 20));

        let e = parse_graph_json("{\"vertices\": [\"a\" \"b\"]}", None).unwrap_err();
        assert!(matches!(e, GraphParseError::Syntax(_)));
        assert_eq!(e.position().0, 1);

        let e = parse_graph_json("{\"vertices\": [\"a\"], \"edges\": [[\"a\", \"a\"]]}", None).unwrap_err();
        assert!(matches!(e, GraphParseError::Invalid { source: ComplexError::LoopEdge(_), .. }));
    }
}
