//! Conflicts between edges, the conflict graph, and coloring verification.
//!
//! Two edges *conflict* when some shortest path contains both. A coloring is
//! a very strong rainbow coloring exactly when no two conflicting edges share
//! a color, i.e. when it properly colors the conflict graph.
//!
//! Conflicts are decided from the distance matrix alone: edges `uv` and `xy`
//! conflict iff for some orientation `d(u, y) = d(v, x) + 2`. The walk
//! `u, v, (shortest v..x), x, y` then has length `d(u, y)` and is therefore a
//! shortest path through both edges; conversely, the subpath of any shortest
//! path between the outer endpoints of the two edges has this shape.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::graph::{all_pairs_distances, bfs, Adjacency, DistanceMatrix, Graph};

/// Default output cap for [`enumerate_shortest_paths`].
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// Orientation `(u, v, x, y)` of `e1 = uv`, `e2 = xy` such that
/// `u, v, .., x, y` is a shortest path, if one exists.
pub fn conflict_orientation(
    g: &Graph,
    d: &DistanceMatrix,
    e1: usize,
    e2: usize,
) -> Option<(usize, usize, usize, usize)> {
    if e1 == e2 {
        return None;
    }
    let (a, b) = g.edge(e1);
    let (p, q) = g.edge(e2);
    [(a, b), (b, a)]
        .into_iter()
        .flat_map(|(u, v)| [(u, v, p, q), (u, v, q, p)])
        .find(|&(u, v, x, y)| d.get(u, y) == d.get(v, x) + 2)
}

/// Whether some shortest path of `g` contains both edges.
pub fn edges_conflict(g: &Graph, d: &DistanceMatrix, e1: usize, e2: usize) -> bool {
    debug_assert_ne!(e1, e2, "an edge is not compared with itself");
    conflict_orientation(g, d, e1, e2).is_some()
}

/// The auxiliary graph on the edges of `base`: edge ids are vertices, and two
/// are adjacent iff they conflict.
#[derive(Debug, Clone)]
pub struct ConflictGraph<'g> {
    base: &'g Graph,
    adj: Vec<Vec<usize>>,
}

impl<'g> ConflictGraph<'g> {
    pub fn base(&self) -> &'g Graph {
        self.base
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

impl Adjacency for ConflictGraph<'_> {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

pub fn build_conflict_graph(g: &Graph) -> ConflictGraph<'_> {
    build_conflict_graph_with(g, &all_pairs_distances(g))
}

/// As [`build_conflict_graph`], reusing a precomputed distance matrix.
pub fn build_conflict_graph_with<'g>(g: &'g Graph, d: &DistanceMatrix) -> ConflictGraph<'g> {
    let m = g.m();
    let mut adj = vec![Vec::new(); m];
    for e1 in 0..m {
        for e2 in e1 + 1..m {
            if edges_conflict(g, d, e1, e2) {
                adj[e1].push(e2);
                adj[e2].push(e1);
            }
        }
    }
    ConflictGraph { base: g, adj }
}

/// An edge coloring with colors `0..k`, every color used.
///
/// Colors are numbered by first appearance in edge-id order, so two colorings
/// with the same color classes compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Canonicalizes arbitrary color labels.
    pub fn new<T: Eq + std::hash::Hash>(labels: impl IntoIterator<Item = T>) -> Self {
        let mut ids = HashMap::new();
        let colors = labels
            .into_iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            k: ids.len(),
        }
    }

    /// Every edge gets its own color.
    pub fn rainbow(m: usize) -> Self {
        Coloring {
            colors: (0..m).collect(),
            k: m,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color classes as ascending edge-id lists, indexed by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (e, &c) in self.colors.iter().enumerate() {
            classes[c].push(e);
        }
        classes
    }

    /// `{"k": k, "colors": {"u-v": c, ...}}` with keys in edge-id order.
    pub fn to_json(&self, g: &Graph) -> Value {
        let colors: Map<String, Value> = g
            .edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (format!("{u}-{v}"), json!(c)))
            .collect();
        json!({ "k": self.k, "colors": colors })
    }

    /// Reads the JSON form. Keys may name either orientation of an edge;
    /// color values are arbitrary non-negative labels, but `k` must equal the
    /// number of distinct labels.
    pub fn from_json(g: &Graph, value: &Value) -> Result<Self, ColoringFormatError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ColoringFormatError::Shape("top level must be an object".into()))?;
        let k = obj
            .get("k")
            .and_then(Value::as_u64)
            .ok_or_else(|| ColoringFormatError::Shape("missing integer field `k`".into()))?;
        let colors = obj
            .get("colors")
            .and_then(Value::as_object)
            .ok_or_else(|| ColoringFormatError::Shape("missing object field `colors`".into()))?;
        let mut labels: Vec<Option<u64>> = vec![None; g.m()];
        for (key, val) in colors {
            let edge = parse_edge_key(g, key)?;
            let c = val.as_u64().ok_or_else(|| {
                ColoringFormatError::Shape(format!(
                    "color of `{key}` is not a non-negative integer"
                ))
            })?;
            if labels[edge].replace(c).is_some() {
                return Err(ColoringFormatError::DuplicateEdge(key.clone()));
            }
        }
        if let Some(missing) = labels.iter().position(Option::is_none) {
            let (u, v) = g.edge(missing);
            return Err(ColoringFormatError::MissingEdge { u, v });
        }
        let coloring = Coloring::new(labels.into_iter().map(Option::unwrap));
        if coloring.k as u64 != k {
            return Err(ColoringFormatError::CountMismatch {
                declared: k,
                distinct: coloring.k,
            });
        }
        Ok(coloring)
    }
}

fn parse_edge_key(g: &Graph, key: &str) -> Result<usize, ColoringFormatError> {
    let bad = || ColoringFormatError::BadKey(key.to_owned());
    let (a, b) = key.split_once('-').ok_or_else(bad)?;
    let u: usize = a.trim().parse().map_err(|_| bad())?;
    let v: usize = b.trim().parse().map_err(|_| bad())?;
    g.edge_id(u, v)
        .ok_or_else(|| ColoringFormatError::UnknownEdge(key.to_owned()))
}

#[derive(Debug, Error)]
pub enum ColoringFormatError {
    #[error("malformed coloring: {0}")]
    Shape(String),
    #[error("malformed edge key `{0}` (expected `<u>-<v>`)")]
    BadKey(String),
    #[error("edge `{0}` is not in the graph")]
    UnknownEdge(String),
    #[error("edge `{0}` is colored twice")]
    DuplicateEdge(String),
    #[error("edge {u}-{v} has no color")]
    MissingEdge { u: usize, v: usize },
    #[error("declared k = {declared} but {distinct} distinct colors are used")]
    CountMismatch { declared: u64, distinct: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConflictError {
    #[error("coloring covers {found} edges but the graph has {expected}")]
    IncompleteColoring { expected: usize, found: usize },
    #[error("more than {cap} shortest paths")]
    CapExceeded { cap: usize },
}

/// A shortest path carrying two edges of the same color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub path: Vec<usize>,
    pub edges: [usize; 2],
    pub edge_endpoints: [(usize, usize); 2],
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violation: Option<Violation>,
}

/// Checks the very strong rainbow property; on failure the witness is the
/// shortest path between the outer endpoints of the first clashing pair
/// (in edge-id order).
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<VerificationReport, ConflictError> {
    verify_coloring_with(g, &all_pairs_distances(g), c)
}

pub fn verify_coloring_with(
    g: &Graph,
    d: &DistanceMatrix,
    c: &Coloring,
) -> Result<VerificationReport, ConflictError> {
    if c.len() != g.m() {
        return Err(ConflictError::IncompleteColoring {
            expected: g.m(),
            found: c.len(),
        });
    }
    let mut clash: Option<(usize, usize)> = None;
    for class in c.classes() {
        for (i, &e1) in class.iter().enumerate() {
            for &e2 in &class[i + 1..] {
                if edges_conflict(g, d, e1, e2) && clash.is_none_or(|best| (e1, e2) < best) {
                    clash = Some((e1, e2));
                }
            }
        }
    }
    let Some((e1, e2)) = clash else {
        return Ok(VerificationReport {
            valid: true,
            violation: None,
        });
    };
    let (u, v, x, y) = conflict_orientation(g, d, e1, e2).expect("pair conflicts");
    let mut path = vec![u];
    path.extend(d.shortest_path(g, v, x));
    path.push(y);
    Ok(VerificationReport {
        valid: false,
        violation: Some(Violation {
            path,
            edges: [e1, e2],
            edge_endpoints: [g.edge(e1), g.edge(e2)],
            color: c.color(e1),
        }),
    })
}

/// All shortest `s`–`t` paths in lexicographic order, or
/// [`ConflictError::CapExceeded`] if there are more than `cap`.
///
/// Brute-force oracle: runs its own BFS and never touches the conflict test.
pub fn enumerate_shortest_paths(
    g: &Graph,
    s: usize,
    t: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>, ConflictError> {
    let to_t = bfs(g, t);
    let mut out = Vec::new();
    let mut path = vec![s];
    extend_paths(g, &to_t, t, &mut path, &mut out, cap)?;
    Ok(out)
}

fn extend_paths(
    g: &Graph,
    to_t: &[u32],
    t: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<(), ConflictError> {
    let cur = *path.last().expect("non-empty");
    if cur == t {
        if out.len() == cap {
            return Err(ConflictError::CapExceeded { cap });
        }
        out.push(path.clone());
        return Ok(());
    }
    for &w in g.neighbors(cur) {
        if to_t[w] + 1 == to_t[cur] {
            path.push(w);
            extend_paths(g, to_t, t, path, out, cap)?;
            path.pop();
        }
    }
    Ok(())
}
