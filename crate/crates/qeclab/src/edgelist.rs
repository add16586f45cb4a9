//! Plain-text edge lists.
//!
//! ```text
//! # comment lines and trailing comments are ignored
//! 4 3        # header: vertex count, edge count
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! Vertices are `0..n`. Blank lines are skipped. Every error carries the
//! 1-based line number it was detected on.

use std::collections::HashMap;
use std::fmt::Write as _;

use qeclab_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("empty input: expected a header line `n m`")]
    MissingHeader,
    #[error("line {line}: header must be two nonnegative integers `n m`, got `{content}`")]
    BadHeader { line: usize, content: String },
    #[error("line {line}: graph must have at least one vertex")]
    NoVertices { line: usize },
    #[error("line {line}: expected an edge `u v`, got `{content}`")]
    BadEdge { line: usize, content: String },
    #[error("line {line}: vertex {vertex} out of range, ids run from 0 to {}", n - 1)]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}, first listed on line {first}")]
    DuplicateEdge { line: usize, u: usize, v: usize, first: usize },
    #[error("header (line {line}) declares {declared} edges but {found} are listed")]
    EdgeCount { line: usize, declared: usize, found: usize },
    #[error("{0}")]
    Graph(#[from] GraphError),
}

fn two_ints(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) =
        two_ints(header).ok_or_else(|| EdgeListError::BadHeader { line: header_line, content: header.into() })?;
    if n == 0 {
        return Err(EdgeListError::NoVertices { line: header_line });
    }

    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let (u, v) = two_ints(content).ok_or_else(|| EdgeListError::BadEdge { line, content: content.into() })?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EdgeListError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if let Some(&first) = seen.get(&key) {
            return Err(EdgeListError::DuplicateEdge { line, u: key.0, v: key.1, first });
        }
        seen.insert(key, line);
        edges.push(key);
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount { line: header_line, declared: m, found: edges.len() });
    }
    Ok(Graph::new(n, edges)?)
}

/// Inverse of [`parse`]; `comment` lines are written first, prefixed by `# `.
pub fn write(g: &Graph, comment: Option<&str>) -> String {
    let mut out = String::new();
    for line in comment.into_iter().flat_map(str::lines) {
        let _ = writeln!(out, "# {line}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
