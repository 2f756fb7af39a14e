use std::collections::HashSet;
use std::fmt::Write;

use super::{Adjacency, Graph, GraphError, SimpleGraph};

struct EdgeList {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn parse_label(tok: &str, line: usize) -> Result<usize, GraphError> {
    tok.parse().map_err(|_| GraphError::MalformedLine {
        line,
        reason: format!("`{tok}` is not a vertex label"),
    })
}

fn parse_edge_list(text: &str) -> Result<EdgeList, GraphError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut max_label: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks[0] == "p" {
            if header.is_some() || !edges.is_empty() {
                return Err(GraphError::MalformedLine {
                    line,
                    reason: "header must appear once, before any edge".into(),
                });
            }
            let (n_tok, m_tok) = match toks.as_slice() {
                [_, n, m] => (*n, *m),
                [_, _, n, m] => (*n, *m),
                _ => {
                    return Err(GraphError::MalformedLine {
                        line,
                        reason: "header must be `p <n> <m>`".into(),
                    })
                }
            };
            let parse_count = |t: &str| {
                t.parse::<usize>().map_err(|_| GraphError::MalformedLine {
                    line,
                    reason: format!("`{t}` is not a count"),
                })
            };
            header = Some((parse_count(n_tok)?, parse_count(m_tok)?, line));
            continue;
        }
        let [a, b] = toks.as_slice() else {
            return Err(GraphError::MalformedLine {
                line,
                reason: format!("expected `<u> <v>`, found {} tokens", toks.len()),
            });
        };
        let u = parse_label(a, line)?;
        let v = parse_label(b, line)?;
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(GraphError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        if let Some((n, _, _)) = header {
            if key.1 >= n {
                return Err(GraphError::MalformedLine {
                    line,
                    reason: format!("vertex {} exceeds declared count {n}", key.1),
                });
            }
        }
        max_label = Some(max_label.map_or(key.1, |m| m.max(key.1)));
        edges.push((u, v));
    }

    let n = match header {
        Some((n, m, line)) => {
            if m != edges.len() {
                return Err(GraphError::MalformedLine {
                    line,
                    reason: format!("header declares {m} edges, found {}", edges.len()),
                });
            }
            n
        }
        None => max_label.map_or(0, |m| m + 1),
    };
    Ok(EdgeList { n, edges })
}

/// Parses an edge-list document into a connected [`Graph`].
///
/// Format: an optional header `p <n> <m>`, then one `<u> <v>` pair per line
/// with 0-based labels. Lines starting with `#` are ignored. Without a header
/// the vertex count is the largest label plus one. Edge ids follow line order.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let list = parse_edge_list(text)?;
    Graph::new(list.n, &list.edges)
}

/// Same format as [`parse_graph`] but connectivity is not required.
pub fn parse_simple_graph(text: &str) -> Result<SimpleGraph, GraphError> {
    let list = parse_edge_list(text)?;
    SimpleGraph::from_edges(list.n, &list.edges)
}

/// Writes a graph in the edge-list format, header included.
///
/// For a [`Graph`] the edges are written in id order.
pub fn to_edge_list(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = format!("p {n} {}\n", edges.len());
    for &(u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

impl Graph {
    pub fn to_edge_list(&self) -> String {
        to_edge_list(self.n(), self.edges())
    }
}

impl SimpleGraph {
    pub fn to_edge_list(&self) -> String {
        to_edge_list(self.vertex_count(), &self.edges())
    }
}
