//! Edge-list text format and DOT export.
//!
//! Edge-list format: first line `p q`, then `q` lines `u v` with
//! `1 <= u < v <= p`. Tokens are whitespace-separated; `#` starts a comment
//! that runs to end of line; blank lines are skipped.

use thiserror::Error;

use super::{GraphError, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

impl EdgeListError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        EdgeListError {
            line,
            message: message.into(),
        }
    }
}

/// Data lines (comments stripped) paired with their 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            None
        } else {
            Some((idx + 1, stripped))
        }
    })
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, EdgeListError> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| EdgeListError::new(1, "missing `p q` header"))?;
    let mut parts = header.split_whitespace();
    let p: usize = parse_field(&mut parts, header_line, "vertex count p")?;
    let q: usize = parse_field(&mut parts, header_line, "edge count q")?;
    if parts.next().is_some() {
        return Err(EdgeListError::new(header_line, "trailing tokens after `p q` header"));
    }
    let mut graph = SimpleGraph::new(p)
        .map_err(|e| EdgeListError::new(header_line, e.to_string()))?;
    let mut found = 0usize;
    for (line, body) in lines {
        if found == q {
            return Err(EdgeListError::new(
                line,
                format!("declared {q} edges, found more"),
            ));
        }
        let mut parts = body.split_whitespace();
        let u: usize = parse_field(&mut parts, line, "vertex u")?;
        let v: usize = parse_field(&mut parts, line, "vertex v")?;
        if parts.next().is_some() {
            return Err(EdgeListError::new(line, "trailing tokens after `u v`"));
        }
        if u >= v {
            return Err(EdgeListError::new(
                line,
                format!("edge must satisfy u < v, got {u} {v}"),
            ));
        }
        graph
            .add_edge(u, v)
            .map_err(|e: GraphError| EdgeListError::new(line, e.to_string()))?;
        found += 1;
    }
    if found != q {
        return Err(EdgeListError::new(
            header_line,
            format!("declared {q} edges, found {found}"),
        ));
    }
    Ok(graph)
}

fn parse_field<'a>(
    parts: &mut impl Iterator<Item = &'a str>,
    line: usize,
    what: &str,
) -> Result<usize, EdgeListError> {
    let token = parts
        .next()
        .ok_or_else(|| EdgeListError::new(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| EdgeListError::new(line, format!("invalid {what} `{token}`")))
}

pub fn write_edge_list(graph: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// DOT rendering of an undirected graph with vertices `p1..pp`.
///
/// `labels`, when given, holds one extra label line per vertex (index 0 is
/// vertex 1). `highlighted` vertices (1-indexed) are filled distinctly.
pub fn to_dot(graph: &SimpleGraph, labels: Option<&[String]>, highlighted: &[usize]) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 1..=graph.vertex_count() {
        let mut attrs = Vec::new();
        match labels.and_then(|l| l.get(v - 1)) {
            Some(extra) => attrs.push(format!("label=\"p{v}\\n{extra}\"")),
            None => attrs.push(format!("label=\"p{v}\"")),
        }
        if highlighted.contains(&v) {
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=gold".to_string());
        }
        out.push_str(&format!("  p{v} [{}];\n", attrs.join(", ")));
    }
    for (u, v) in graph.edges() {
        out.push_str(&format!("  p{u} -- p{v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::code_to_rows;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# a triangle plus an isolated vertex\n4 3\n\n1 2\n1 3   # trailing comment\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn rejects_declared_count_mismatch() {
        let err = parse_edge_list("3 2\n1 2\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("declared 2 edges, found 1"));

        let err = parse_edge_list("3 1\n1 2\n1 3\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("found more"));
    }

    #[test]
    fn rejects_malformed_lines_with_line_numbers() {
        assert_eq!(parse_edge_list("").unwrap_err().line, 1);
        assert_eq!(parse_edge_list("3\n").unwrap_err().line, 1);
        assert_eq!(parse_edge_list("3 1\n2 1\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 1\n1 x\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 1\n1 4\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 2\n1 2\n1 2\n").unwrap_err().line, 3);
        assert_eq!(parse_edge_list("3 1\n1 1\n").unwrap_err().line, 2);
    }

    #[test]
    fn round_trip_is_exhaustive_up_to_five_vertices() {
        for p in 1..=5usize {
            let total = p * (p - 1) / 2;
            for mask in 0..1u64 << total {
                let g = SimpleGraph::from_rows(code_to_rows(p, mask));
                let text = write_edge_list(&g);
                let back = parse_edge_list(&text).unwrap();
                assert_eq!(back, g);
            }
        }
    }

    #[test]
    fn dot_output_contains_vertices_edges_and_highlights() {
        let g = SimpleGraph::from_edges(3, &[(1, 2), (1, 3)]).unwrap();
        let labels = vec!["(1, 0)".to_string(), "(0, 1)".to_string(), "(1, 1)".to_string()];
        let dot = to_dot(&g, Some(&labels), &[1]);
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("p1 [label=\"p1\\n(1, 0)\", style=filled, fillcolor=gold];"));
        assert!(dot.contains("p2 [label=\"p2\\n(0, 1)\"];"));
        assert!(dot.contains("  p1 -- p2;"));
        assert!(dot.contains("  p1 -- p3;"));
        assert!(!dot.contains("p2 -- p3"));
    }
}
