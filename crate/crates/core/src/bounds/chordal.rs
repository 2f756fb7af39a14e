//! Chordal graphs: recognition, clique trees and the `n - ω + 1` coloring.

use std::collections::VecDeque;

use super::{coloring_from_intersection_rep, BoundsError, IntersectionRep};
use crate::conflict::Coloring;
use crate::graph::{Adjacency, Graph};

/// Lexicographic breadth-first search visit order, ties broken by the
/// smallest vertex.
pub fn lex_bfs<A: Adjacency + ?Sized>(g: &A) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| label[a].cmp(&label[b]).then(b.cmp(&a)))
            .expect("unvisited vertex left");
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                label[w].push(n - step);
            }
        }
    }
    order
}

/// A perfect elimination order (reverse LexBFS), or a chordless cycle of
/// length at least four.
pub fn perfect_elimination_order<A: Adjacency + ?Sized>(g: &A) -> Result<Vec<usize>, BoundsError> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    let n = peo.len();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&w) = later
            .iter()
            .find(|&&w| w != parent && !g.has_edge(parent, w))
        {
            let cycle = cycle_through(g, v, parent, w)
                .or_else(|| chordless_cycle(g))
                .expect("a failed elimination check implies a chordless cycle");
            return Err(BoundsError::NotChordal { cycle });
        }
    }
    Ok(peo)
}

/// Chordless cycle `v, a, .., b` through the path `a v b`, using a shortest
/// `a`-`b` path that avoids `N[v]` otherwise. `a` and `b` must be
/// non-adjacent neighbors of `v`.
fn cycle_through<A: Adjacency + ?Sized>(g: &A, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = w != a && w != b;
    }
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut y = b;
            while y != a {
                y = parent[y];
                path.push(y);
            }
            path.push(v);
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Any chordless cycle of length at least four, searching `v` and its
/// non-adjacent neighbor pairs in ascending order.
pub fn chordless_cycle<A: Adjacency + ?Sized>(g: &A) -> Option<Vec<usize>> {
    for v in 0..g.vertex_count() {
        let nbrs = g.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(c) = cycle_through(g, v, a, b) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Subtree model of a chordal graph: `nodes[t]` is the clique of tree node
/// `t`, and each vertex's nodes form a subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTree {
    pub nodes: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct ChordalColoring {
    pub coloring: Coloring,
    pub omega: usize,
    /// Perfect elimination order ending in a maximum clique.
    pub elimination_order: Vec<usize>,
    pub tree: CliqueTree,
    pub rep: IntersectionRep,
}

fn is_simplicial<A: Adjacency + ?Sized>(g: &A, alive: &[bool], v: usize) -> bool {
    let nbrs: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| alive[w])
        .collect();
    nbrs.iter()
        .enumerate()
        .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Elimination order of a chordal graph whose last `|clique|` vertices are
/// `clique`: a non-complete chordal graph has two non-adjacent simplicial
/// vertices, so one of them always lies outside the clique.
fn order_ending_in<A: Adjacency + ?Sized>(g: &A, clique: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut in_clique = vec![false; n];
    for &v in clique {
        in_clique[v] = true;
    }
    let mut order = Vec::with_capacity(n);
    while order.len() + clique.len() < n {
        let v = (0..n)
            .find(|&v| alive[v] && !in_clique[v] && is_simplicial(g, &alive, v))
            .expect("chordal graphs always have a simplicial vertex outside a clique");
        alive[v] = false;
        order.push(v);
    }
    order.extend_from_slice(clique);
    order
}

/// Builds the clique tree by adding vertices in reverse elimination order:
/// a vertex whose earlier neighbors are exactly some node joins that node,
/// otherwise it opens a new node attached to a node containing them.
fn build_clique_tree<A: Adjacency + ?Sized>(g: &A, order: &[usize]) -> CliqueTree {
    let n = g.vertex_count();
    let mut added = vec![false; n];
    let mut tree = CliqueTree {
        nodes: Vec::new(),
        edges: Vec::new(),
    };
    for &v in order.iter().rev() {
        let earlier: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| added[w])
            .collect();
        added[v] = true;
        if tree.nodes.is_empty() {
            tree.nodes.push(vec![v]);
            continue;
        }
        if let Some(t) = tree.nodes.iter().position(|node| *node == earlier) {
            let node = &mut tree.nodes[t];
            node.push(v);
            node.sort_unstable();
            continue;
        }
        let t = tree
            .nodes
            .iter()
            .position(|node| earlier.iter().all(|w| node.binary_search(w).is_ok()))
            .expect("earlier neighbors form a clique inside some node");
        let mut node = earlier;
        node.push(v);
        node.sort_unstable();
        tree.edges.push((t, tree.nodes.len()));
        tree.nodes.push(node);
    }
    tree
}

/// Coloring from a clique tree with at most `n - ω + 1` nodes, used as the
/// universe of an intersection representation.
pub fn chordal_coloring(g: &Graph) -> Result<ChordalColoring, BoundsError> {
    let peo = perfect_elimination_order(g)?;
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let clique = peo
        .iter()
        .map(|&v| {
            let mut q: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect();
            q.push(v);
            q.sort_unstable();
            q
        })
        .max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a)))
        .unwrap_or_default();
    let order = order_ending_in(g, &clique);
    let tree = build_clique_tree(g, &order);
    let mut sets = vec![Vec::new(); n];
    for (t, node) in tree.nodes.iter().enumerate() {
        for &v in node {
            sets[v].push(t);
        }
    }
    let rep = IntersectionRep {
        universe: (0..tree.nodes.len()).map(|t| format!("t{t}")).collect(),
        sets,
    };
    let coloring = coloring_from_intersection_rep(g, &rep)?;
    Ok(ChordalColoring {
        coloring,
        omega: clique.len(),
        elimination_order: order,
        tree,
        rep,
    })
}
