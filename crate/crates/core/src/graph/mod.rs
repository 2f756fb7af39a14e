//! Simple undirected graphs and the structural primitives built on them.

mod bipartite;
mod blocks;
mod distance;
mod parse;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

pub use bipartite::{is_bipartite, Bipartiteness};
pub use blocks::{
    blocks, cactus_decomposition, BiconnectedComponent, Block, BlockKind, CactusDecomposition,
    NotCactus,
};
pub(crate) use distance::bfs;
pub use distance::{all_pairs_distances, DistanceMatrix};
pub use parse::{parse_graph, parse_simple_graph, to_edge_list};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("graph is disconnected: vertex {unreachable} is not reachable from vertex 0")]
    Disconnected { unreachable: usize },
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
}

/// Read-only adjacency view shared by every graph-like type in the crate.
///
/// Neighbor lists are sorted ascending and contain no duplicates.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;

    fn neighbors(&self, v: usize) -> &[usize];

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }
}

/// A simple undirected graph with no connectivity requirement.
///
/// Used for complements, neighborhoods, conflict-graph style auxiliaries and
/// inputs to the 3-coloring reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops and parallel edges.
    ///
    /// Error line numbers are 1-based positions in `edges`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::MalformedLine {
                    line: i + 1,
                    reason: format!("edge {u}-{v} has an endpoint outside 0..{n}"),
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop {
                    line: i + 1,
                    vertex: u,
                });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                let line = edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| (a.min(b), a.max(b)) == (u.min(v), u.max(v)))
                    .nth(1)
                    .map_or(0, |(i, _)| i + 1);
                return Err(GraphError::DuplicateEdge {
                    line,
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
        Ok(SimpleGraph { adj })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> SimpleGraph {
        complement_of(self)
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        induced_of(self, vertices)
    }

    pub fn is_connected(&self) -> bool {
        first_unreachable(self).is_none()
    }

    /// Checks connectivity and assigns edge ids in lexicographic order.
    pub fn into_connected(self) -> Result<Graph, GraphError> {
        let n = self.adj.len();
        Graph::new(n, &self.edges())
    }
}

impl Adjacency for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

/// Complement of any adjacency view.
pub fn complement_of<A: Adjacency + ?Sized>(g: &A) -> SimpleGraph {
    let n = g.vertex_count();
    let adj = (0..n)
        .map(|u| {
            let nb = g.neighbors(u);
            (0..n)
                .filter(|&v| v != u && nb.binary_search(&v).is_err())
                .collect()
        })
        .collect();
    SimpleGraph { adj }
}

/// Induced subgraph of any adjacency view; vertex `i` of the result is
/// `vertices[i]`.
pub fn induced_of<A: Adjacency + ?Sized>(g: &A, vertices: &[usize]) -> SimpleGraph {
    let pos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj = vertices
        .iter()
        .map(|&v| {
            let mut list: Vec<usize> = g
                .neighbors(v)
                .iter()
                .filter_map(|w| pos.get(w).copied())
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    SimpleGraph { adj }
}

fn first_unreachable<A: Adjacency + ?Sized>(g: &A) -> Option<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.iter().position(|&s| !s)
}

/// A connected simple graph with stable edge ids.
///
/// Vertices are `0..n`. Edge ids follow construction order, and each edge is
/// stored with its smaller endpoint first.
#[derive(Debug, Clone)]
pub struct Graph {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    incident: Vec<Vec<(usize, usize)>>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let simple = SimpleGraph::from_edges(n, edges)?;
        if let Some(unreachable) = first_unreachable(&simple) {
            return Err(GraphError::Disconnected { unreachable });
        }
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut incident = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incident[u].push((v, id));
            incident[v].push((u, id));
        }
        for list in &mut incident {
            list.sort_unstable();
        }
        Ok(Graph {
            edges,
            adj: simple.adj,
            incident,
            edge_index,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incident[v]
    }

    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph {
            adj: self.adj.clone(),
        }
    }
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}
