//! Line-oriented graph text format and DOT export.
//!
//! ```text
//! # comment
//! n 4
//! e 0 2
//! e 1 3
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// Strips a `#` comment and surrounding whitespace.
pub(crate) fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub(crate) fn parse_index(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<usize, FormatError> {
    let tok = tok.ok_or_else(|| FormatError::new(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| FormatError::new(line, format!("invalid {what} {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        match toks.next() {
            Some("n") => {
                if n.is_some() {
                    return Err(FormatError::new(line, "duplicate `n` line"));
                }
                n = Some(parse_index(toks.next(), line, "vertex count")?);
            }
            Some("e") => {
                if n.is_none() {
                    return Err(FormatError::new(line, "edge before `n` line"));
                }
                let u = parse_index(toks.next(), line, "endpoint")?;
                let v = parse_index(toks.next(), line, "endpoint")?;
                edges.push((u, v, line));
            }
            Some(other) => {
                return Err(FormatError::new(
                    line,
                    format!("unknown directive {other:?}"),
                ))
            }
            None => unreachable!(),
        }
        if let Some(extra) = toks.next() {
            return Err(FormatError::new(
                line,
                format!("unexpected token {extra:?}"),
            ));
        }
    }
    let n = n.ok_or_else(|| FormatError::new(0, "missing `n` line"))?;
    let mut g = Graph::empty(n);
    for (u, v, line) in edges {
        g.add_edge(u, v)
            .map_err(|e| FormatError::new(line, e.to_string()))?;
    }
    Ok(g)
}

/// Writes the graph with its edges sorted lexicographically.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v} [label=\"{v}\"];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
