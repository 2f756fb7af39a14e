//! Optimal very strong rainbow coloring of cactus graphs in polynomial time.
//!
//! Edges split into bridges, even-cycle edges and odd-cycle edges. An odd
//! cycle edge `e` has a unique cycle vertex `vopp(e)` equidistant from its
//! endpoints; `e` is an *opp* edge when `vopp(e)` has degree above two and a
//! *rem* edge otherwise. The coloring:
//!
//! 1. a fresh color per bridge;
//! 2. per even cycle `C`, `|C|/2` fresh colors, one per opposite edge pair;
//! 3. per odd cycle `C`, fresh colors on its rem edges where the pairs of a
//!    maximum matching in `H_C` (rem edges joined when they do not conflict)
//!    share a color (in a triangle no edges conflict, so its rem edges share
//!    one color);
//! 4. every opp edge reuses the color of an already colored bridge, even or
//!    rem edge inside its opposite subgraph; such an edge always exists and
//!    never conflicts with it.
//!
//! Each stage is a lower bound for any valid coloring, so the total is
//! `vsrc(G)`.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::conflict::{edges_conflict, Coloring};
use crate::graph::{
    all_pairs_distances, cactus_decomposition, Adjacency, BlockKind, CactusDecomposition,
    DistanceMatrix, Graph, NotCactus,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CactusError {
    #[error(transparent)]
    NotCactus(#[from] NotCactus),
    #[error("vertex {vertex} of H_C for block {block} has degree {degree} > 2")]
    DegreeViolation {
        block: usize,
        vertex: usize,
        degree: usize,
    },
    #[error("matching input has vertex {vertex} of degree {degree} > 2")]
    MatchingDegree { vertex: usize, degree: usize },
    #[error("opp edge {edge} has no reusable bridge, even or rem edge in its opposite subgraph")]
    NoReuseEdge { edge: usize },
    #[error("edge {edge} is not an opp edge")]
    NotOpp { edge: usize },
    #[error("edge {edge} is not on an odd cycle")]
    NotOddCycleEdge { edge: usize },
    #[error("block {block} is not an odd cycle")]
    NotOddCycle { block: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    Bridge,
    Even,
    Opp,
    Rem,
}

impl EdgeClass {
    pub fn is_odd(self) -> bool {
        matches!(self, EdgeClass::Opp | EdgeClass::Rem)
    }
}

/// Per-edge class with the opposite-edge / opposite-vertex annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    pub class: Vec<EdgeClass>,
    /// Block id of the cycle holding each edge; `None` for bridges.
    pub cycle_of: Vec<Option<usize>>,
    /// Opposite vertex, for odd-cycle edges.
    pub vopp: Vec<Option<usize>>,
    /// Opposite edge, for even-cycle edges.
    pub eopp: Vec<Option<usize>>,
}

impl EdgeClassification {
    pub fn edges_of(&self, class: EdgeClass) -> impl Iterator<Item = usize> + '_ {
        (0..self.class.len()).filter(move |&e| self.class[e] == class)
    }
}

pub fn classify_edges(g: &Graph, cd: &CactusDecomposition) -> EdgeClassification {
    let m = g.m();
    let mut cls = EdgeClassification {
        class: vec![EdgeClass::Bridge; m],
        cycle_of: vec![None; m],
        vopp: vec![None; m],
        eopp: vec![None; m],
    };
    for (id, block) in cd.blocks.iter().enumerate() {
        if block.kind == BlockKind::Bridge {
            continue;
        }
        let order = &block.cycle_order;
        let len = order.len();
        let edges = block.cycle_edges(g);
        for (i, &e) in edges.iter().enumerate() {
            cls.cycle_of[e] = Some(id);
            if len % 2 == 0 {
                cls.class[e] = EdgeClass::Even;
                cls.eopp[e] = Some(edges[(i + len / 2) % len]);
            } else {
                // edge i joins order[i] and order[i+1]; both sit len/2 hops
                // from order[i + 1 + len/2]
                let v = order[(i + 1 + len / 2) % len];
                cls.vopp[e] = Some(v);
                cls.class[e] = if g.degree(v) > 2 {
                    EdgeClass::Opp
                } else {
                    EdgeClass::Rem
                };
            }
        }
    }
    cls
}

/// `S(v, C)`: vertices reachable from `v` without using edges of the cycle
/// block `block`, ascending.
pub fn reach_avoiding_cycle(
    g: &Graph,
    cd: &CactusDecomposition,
    v: usize,
    block: usize,
) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([v]);
    seen[v] = true;
    while let Some(u) = queue.pop_front() {
        for &(w, e) in g.incident(u) {
            if cd.edge_to_block[e] != block && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    (0..g.n()).filter(|&u| seen[u]).collect()
}

/// `g(u, C)`: the unique vertex `v` of the cycle block with `u ∈ S(v, C)`.
pub fn cycle_gate(g: &Graph, cd: &CactusDecomposition, u: usize, block: usize) -> usize {
    let on_cycle = &cd.blocks[block].cycle_order;
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([u]);
    seen[u] = true;
    while let Some(x) = queue.pop_front() {
        if on_cycle.contains(&x) {
            return x;
        }
        for &(w, e) in g.incident(x) {
            if cd.edge_to_block[e] != block && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    unreachable!("a connected graph reaches every cycle")
}

/// The opposite subgraph of an odd-cycle edge, as its vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OppositeSubgraph {
    pub edge: usize,
    pub root: usize,
    /// Ascending; always contains `root`.
    pub vertices: Vec<usize>,
}

impl OppositeSubgraph {
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

pub fn opposite_subgraph(
    g: &Graph,
    cd: &CactusDecomposition,
    e: usize,
) -> Result<OppositeSubgraph, CactusError> {
    let block_id = cd.edge_to_block[e];
    let block = &cd.blocks[block_id];
    let len = block.cycle_order.len();
    if block.kind != BlockKind::Cycle || len.is_multiple_of(2) {
        return Err(CactusError::NotOddCycleEdge { edge: e });
    }
    let i = block
        .cycle_edges(g)
        .iter()
        .position(|&x| x == e)
        .expect("edge lies on its block");
    let root = block.cycle_order[(i + 1 + len / 2) % len];
    Ok(OppositeSubgraph {
        edge: e,
        root,
        vertices: reach_avoiding_cycle(g, cd, root, block_id),
    })
}

/// Non-conflict graph on the rem edges of one odd cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcGraph {
    pub block: usize,
    /// Edge ids of `E_rem ∩ C`, ascending; vertex `i` is `edges[i]`.
    pub edges: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

impl Adjacency for HcGraph {
    fn vertex_count(&self) -> usize {
        self.edges.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

impl HcGraph {
    /// Maximum matching as edge-id pairs, smaller id first, sorted.
    pub fn max_matching(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = max_matching_deg2(self)
            .expect("degree checked at construction")
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (self.edges[a], self.edges[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        pairs.sort_unstable();
        pairs
    }
}

pub fn build_hc(
    g: &Graph,
    d: &DistanceMatrix,
    cd: &CactusDecomposition,
    cls: &EdgeClassification,
    block: usize,
) -> Result<HcGraph, CactusError> {
    let b = &cd.blocks[block];
    if b.kind != BlockKind::Cycle || b.len().is_multiple_of(2) {
        return Err(CactusError::NotOddCycle { block });
    }
    let edges: Vec<usize> = b
        .edge_ids
        .iter()
        .copied()
        .filter(|&e| cls.class[e] == EdgeClass::Rem)
        .collect();
    let mut adj = vec![Vec::new(); edges.len()];
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if !edges_conflict(g, d, edges[i], edges[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    if let Some((vertex, list)) = adj.iter().enumerate().find(|(_, l)| l.len() > 2) {
        return Err(CactusError::DegreeViolation {
            block,
            vertex: edges[vertex],
            degree: list.len(),
        });
    }
    Ok(HcGraph { block, edges, adj })
}

/// Maximum matching of a graph with maximum degree at most two.
///
/// Components are paths and cycles. Paths are walked from their smaller
/// endpoint, cycles from their smallest vertex, pairing consecutive vertices.
/// Returns pairs of vertex indices.
pub fn max_matching_deg2<A: Adjacency + ?Sized>(h: &A) -> Result<Vec<(usize, usize)>, CactusError> {
    let n = h.vertex_count();
    if let Some(v) = (0..n).find(|&v| h.degree(v) > 2) {
        return Err(CactusError::MatchingDegree {
            vertex: v,
            degree: h.degree(v),
        });
    }
    let mut visited = vec![false; n];
    let mut pairs = Vec::new();
    // path endpoints first so every path is walked end to end
    let starts = (0..n)
        .filter(|&v| h.degree(v) < 2)
        .chain((0..n).filter(|&v| h.degree(v) == 2));
    for start in starts {
        if visited[start] {
            continue;
        }
        let mut walk = vec![start];
        visited[start] = true;
        let mut cur = start;
        while let Some(&next) = h.neighbors(cur).iter().find(|&&w| !visited[w]) {
            visited[next] = true;
            walk.push(next);
            cur = next;
        }
        pairs.extend(walk.chunks_exact(2).map(|p| (p[0], p[1])));
    }
    Ok(pairs)
}

/// First bridge, even or rem edge met by a BFS from `vopp(e)` inside the
/// opposite subgraph of the opp edge `e`, in edge-discovery order.
pub fn find_reuse_edge(
    g: &Graph,
    cd: &CactusDecomposition,
    cls: &EdgeClassification,
    e: usize,
) -> Result<usize, CactusError> {
    if cls.class[e] != EdgeClass::Opp {
        return Err(CactusError::NotOpp { edge: e });
    }
    let root = cls.vopp[e].expect("odd-cycle edges carry vopp");
    let block = cd.edge_to_block[e];
    let mut seen_vertex = vec![false; g.n()];
    let mut seen_edge = vec![false; g.m()];
    let mut queue = VecDeque::from([root]);
    seen_vertex[root] = true;
    while let Some(u) = queue.pop_front() {
        for &(w, f) in g.incident(u) {
            if cd.edge_to_block[f] == block || seen_edge[f] {
                continue;
            }
            seen_edge[f] = true;
            if cls.class[f] != EdgeClass::Opp {
                return Ok(f);
            }
            if !seen_vertex[w] {
                seen_vertex[w] = true;
                queue.push_back(w);
            }
        }
    }
    Err(CactusError::NoReuseEdge { edge: e })
}

/// Rem-edge coloring details of one odd cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddCycleColoring {
    pub block: usize,
    pub rem_edges: Vec<usize>,
    pub matching: Vec<(usize, usize)>,
    /// Rem edges grouped by color.
    pub classes: Vec<Vec<usize>>,
}

impl OddCycleColoring {
    pub fn colors_used(&self) -> usize {
        self.classes.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusSolution {
    pub k: usize,
    pub coloring: Coloring,
    pub classification: EdgeClassification,
    pub odd_cycles: Vec<OddCycleColoring>,
    /// `(opp edge, edge whose color it reuses)`.
    pub reused: Vec<(usize, usize)>,
}

/// Optimal very strong rainbow coloring of a cactus.
pub fn color_cactus(g: &Graph) -> Result<CactusSolution, CactusError> {
    let cd = cactus_decomposition(g)?;
    let cls = classify_edges(g, &cd);
    let d = all_pairs_distances(g);
    let mut colors: Vec<Option<usize>> = vec![None; g.m()];
    let mut next = 0;
    let mut fresh = || {
        next += 1;
        next - 1
    };

    for e in cls.edges_of(EdgeClass::Bridge) {
        colors[e] = Some(fresh());
    }

    for block in cd
        .blocks
        .iter()
        .filter(|b| b.is_cycle() && b.len() % 2 == 0)
    {
        let edges = block.cycle_edges(g);
        let half = edges.len() / 2;
        for i in 0..half {
            let c = fresh();
            colors[edges[i]] = Some(c);
            colors[edges[i + half]] = Some(c);
        }
    }

    let mut odd_cycles = Vec::new();
    for (id, _) in cd
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.is_cycle() && b.len() % 2 == 1)
    {
        let hc = build_hc(g, &d, &cd, &cls, id)?;
        let matching = hc.max_matching();
        // In a triangle no two edges conflict, so its rem edges form one
        // class even when there are three of them (the lone K3); the
        // matching argument only covers cycles of length at least five.
        let classes: Vec<Vec<usize>> = if cd.blocks[id].len() == 3 {
            vec![hc.edges.clone()]
        } else {
            let mut classes: Vec<Vec<usize>> = matching.iter().map(|&(a, b)| vec![a, b]).collect();
            classes.extend(
                hc.edges
                    .iter()
                    .filter(|e| !matching.iter().any(|&(a, b)| a == **e || b == **e))
                    .map(|&e| vec![e]),
            );
            classes
        };
        for class in &classes {
            let c = fresh();
            for &e in class {
                colors[e] = Some(c);
            }
        }
        odd_cycles.push(OddCycleColoring {
            block: id,
            rem_edges: hc.edges,
            matching,
            classes,
        });
    }

    let mut reused = Vec::new();
    for e in cls.edges_of(EdgeClass::Opp) {
        let source = find_reuse_edge(g, &cd, &cls, e)?;
        colors[e] = colors[source];
        reused.push((e, source));
    }

    let coloring = Coloring::new(colors.into_iter().map(|c| c.expect("every class colored")));
    Ok(CactusSolution {
        k: coloring.k(),
        coloring,
        classification: cls,
        odd_cycles,
        reused,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conflict::verify_coloring;
    use crate::graph::SimpleGraph;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn cycle_edges(n: usize, offset: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (offset + i, offset + (i + 1) % n)).collect()
    }

    fn setup(g: &Graph) -> (CactusDecomposition, EdgeClassification) {
        let cd = cactus_decomposition(g).unwrap();
        let cls = classify_edges(g, &cd);
        (cd, cls)
    }

    #[test]
    fn lone_c5_is_all_rem() {
        let g = graph(5, &cycle_edges(5, 0));
        let (_, cls) = setup(&g);
        assert!(cls.class.iter().all(|&c| c == EdgeClass::Rem));
        // edge 0 = (0,1) faces vertex 3
        assert_eq!(cls.vopp[0], Some(3));
    }

    #[test]
    fn pendant_turns_one_edge_opp() {
        let mut edges = cycle_edges(5, 0);
        edges.push((3, 5));
        let g = graph(6, &edges);
        let (_, cls) = setup(&g);
        assert_eq!(cls.class[5], EdgeClass::Bridge);
        let opp: Vec<usize> = cls.edges_of(EdgeClass::Opp).collect();
        assert_eq!(opp, vec![0]);
        assert_eq!(cls.edges_of(EdgeClass::Rem).count(), 4);
    }

    #[test]
    fn c6_has_three_opposite_pairs() {
        let g = graph(6, &cycle_edges(6, 0));
        let (_, cls) = setup(&g);
        assert!(cls.class.iter().all(|&c| c == EdgeClass::Even));
        for e in 0..6 {
            let f = cls.eopp[e].unwrap();
            assert_eq!(f, (e + 3) % 6);
            assert_eq!(cls.eopp[f], Some(e));
        }
    }

    #[test]
    fn opposite_subgraphs() {
        let g = graph(5, &cycle_edges(5, 0));
        let cd = cactus_decomposition(&g).unwrap();
        assert_eq!(opposite_subgraph(&g, &cd, 0).unwrap().vertices, vec![3]);

        let mut edges = cycle_edges(5, 0);
        edges.push((3, 5));
        let g = graph(6, &edges);
        let cd = cactus_decomposition(&g).unwrap();
        assert_eq!(opposite_subgraph(&g, &cd, 0).unwrap().vertices, vec![3, 5]);
        assert!(opposite_subgraph(&g, &cd, 5).is_err());

        // second C5 glued at vertex 3 (= vopp of edge 0)
        let mut edges = cycle_edges(5, 0);
        edges.extend([(3, 5), (5, 6), (6, 7), (7, 8), (8, 3)]);
        let g = graph(9, &edges);
        let cd = cactus_decomposition(&g).unwrap();
        assert_eq!(
            opposite_subgraph(&g, &cd, 0).unwrap().vertices,
            vec![3, 5, 6, 7, 8]
        );
    }

    #[test]
    fn hc_of_c5_is_the_pentagram() {
        let g = graph(5, &cycle_edges(5, 0));
        let (cd, cls) = setup(&g);
        let d = all_pairs_distances(&g);
        let hc = build_hc(&g, &d, &cd, &cls, 0).unwrap();
        assert_eq!(hc.edges, vec![0, 1, 2, 3, 4]);
        // edges in traversal order e1..e5 = ids 0..4; e1-e3-e5-e2-e4-e1
        for (a, b) in [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)] {
            assert!(hc.has_edge(a, b));
        }
        assert_eq!(hc.max_degree(), 2);
        assert_eq!(hc.max_matching().len(), 2);
    }

    #[test]
    fn hc_of_c7_is_two_regular() {
        let g = graph(7, &cycle_edges(7, 0));
        let (cd, cls) = setup(&g);
        let hc = build_hc(&g, &all_pairs_distances(&g), &cd, &cls, 0).unwrap();
        assert!((0..7).all(|v| hc.degree(v) == 2));
        assert_eq!(hc.max_matching().len(), 3);
    }

    #[test]
    fn hc_with_a_pendant() {
        let mut edges = cycle_edges(5, 0);
        edges.push((3, 5));
        let g = graph(6, &edges);
        let (cd, cls) = setup(&g);
        let hc = build_hc(&g, &all_pairs_distances(&g), &cd, &cls, 0).unwrap();
        assert_eq!(hc.edges, vec![1, 2, 3, 4]);
        let hc_edges: usize = (0..4).map(|v| hc.degree(v)).sum::<usize>() / 2;
        assert_eq!(hc_edges, 3);
        assert_eq!(hc.max_matching().len(), 2);
        assert!(matches!(
            build_hc(&g, &all_pairs_distances(&g), &cd, &cls, 1),
            Err(CactusError::NotOddCycle { block: 1 })
        ));
    }

    #[test]
    fn degree_two_matchings() {
        let cyc = |n: usize| SimpleGraph::from_edges(n, &cycle_edges(n, 0)).unwrap();
        assert_eq!(max_matching_deg2(&cyc(5)).unwrap().len(), 2);
        assert_eq!(max_matching_deg2(&cyc(7)).unwrap().len(), 3);
        let p4 = SimpleGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let m = max_matching_deg2(&p4).unwrap();
        assert_eq!(m.len(), 2);
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(
            max_matching_deg2(&star),
            Err(CactusError::MatchingDegree {
                vertex: 0,
                degree: 3
            })
        ));
    }

    #[test]
    fn reuse_edge_choices() {
        let mut edges = cycle_edges(5, 0);
        edges.push((3, 5));
        let g = graph(6, &edges);
        let (cd, cls) = setup(&g);
        assert_eq!(find_reuse_edge(&g, &cd, &cls, 0).unwrap(), 5);
        assert!(matches!(
            find_reuse_edge(&g, &cd, &cls, 1),
            Err(CactusError::NotOpp { edge: 1 })
        ));

        // C6 glued at vertex 3
        let mut edges = cycle_edges(5, 0);
        edges.extend([(3, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 3)]);
        let g = graph(10, &edges);
        let (cd, cls) = setup(&g);
        let f = find_reuse_edge(&g, &cd, &cls, 0).unwrap();
        assert_eq!(cls.class[f], EdgeClass::Even);
        assert_eq!(g.edge(f), (3, 5));

        // C5 glued at vertex 3
        let mut edges = cycle_edges(5, 0);
        edges.extend([(3, 5), (5, 6), (6, 7), (7, 8), (8, 3)]);
        let g = graph(9, &edges);
        let (cd, cls) = setup(&g);
        let f = find_reuse_edge(&g, &cd, &cls, 0).unwrap();
        assert_eq!(cls.class[f], EdgeClass::Rem);
        assert_eq!(g.edge(f), (3, 5));
    }

    #[test]
    fn families() {
        for n in 2..=20 {
            let g = graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            assert_eq!(color_cactus(&g).unwrap().k, n - 1);
        }
        for m in 2..=10 {
            let g = graph(2 * m, &cycle_edges(2 * m, 0));
            let sol = color_cactus(&g).unwrap();
            assert_eq!(sol.k, m);
            assert!(verify_coloring(&g, &sol.coloring).unwrap().valid);
        }
        for m in 2..=10 {
            let g = graph(2 * m + 1, &cycle_edges(2 * m + 1, 0));
            let sol = color_cactus(&g).unwrap();
            assert_eq!(sol.k, m + 1);
            assert!(verify_coloring(&g, &sol.coloring).unwrap().valid);
        }
    }

    #[test]
    fn lone_triangle_uses_one_color() {
        // all three edges are rem and H_C is a triangle, yet no pair conflicts
        let g = graph(3, &cycle_edges(3, 0));
        let sol = color_cactus(&g).unwrap();
        assert_eq!(sol.k, 1);
        assert_eq!(sol.odd_cycles[0].classes, vec![vec![0, 1, 2]]);
        assert!(verify_coloring(&g, &sol.coloring).unwrap().valid);
    }

    #[test]
    fn triangle_with_pendant() {
        // vertex 0 carries a pendant, so edge (1,2) is opp; (0,1), (0,2) share a color
        let g = graph(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        let sol = color_cactus(&g).unwrap();
        assert_eq!(sol.k, 2);
        assert_eq!(sol.reused, vec![(1, 3)]);
        assert!(verify_coloring(&g, &sol.coloring).unwrap().valid);
    }

    #[test]
    fn rejects_non_cactus() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(matches!(color_cactus(&g), Err(CactusError::NotCactus(_))));
    }
}
