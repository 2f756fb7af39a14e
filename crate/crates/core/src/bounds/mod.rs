//! Constructive upper bounds and certified lower bounds.
//!
//! Every construction here returns an explicit [`Coloring`]; callers can
//! check it with [`crate::conflict::verify_coloring`].

mod arcs;
mod chordal;
mod groupable;
mod report;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

pub use arcs::{arc_intersection_graph, circular_arc_coloring, Arc};
pub use chordal::{
    chordal_coloring, chordless_cycle, lex_bfs, perfect_elimination_order, ChordalColoring,
    CliqueTree,
};
pub use groupable::{
    k_perfectly_groupable, neighborhood_partitions, GroupableReport, NeighborhoodPartition,
};
pub use report::{vsrc_bounds, vsrc_bounds_with, BoundsReport, LowerBound, Skipped, UpperBound};

use crate::conflict::Coloring;
use crate::exact::{chromatic_number, ExactError};
use crate::graph::{complement_of, Adjacency, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("invalid clique partition: {0}")]
    InvalidPartition(String),
    #[error("invalid edge clique cover: {0}")]
    InvalidCover(String),
    #[error("not an intersection representation: vertices {u} and {v} are {} but their sets {}", if *.adjacent { "adjacent" } else { "not adjacent" }, if *.adjacent { "are disjoint" } else { "intersect" })]
    NotARepresentation { u: usize, v: usize, adjacent: bool },
    #[error("graph is not chordal: chordless cycle {cycle:?}")]
    NotChordal { cycle: Vec<usize> },
    #[error("{arcs} arcs given for {vertices} vertices")]
    ArcCount { arcs: usize, vertices: usize },
    #[error("arcs {u} and {v} {} but the vertices are {}", if *.adjacent { "are disjoint" } else { "intersect" }, if *.adjacent { "adjacent" } else { "not adjacent" })]
    ArcMismatch { u: usize, v: usize, adjacent: bool },
    #[error("{parts} parts given; at most 3 allowed")]
    TooManyParts { parts: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("malformed {what}: {reason}")]
    Format { what: &'static str, reason: String },
}

/// Disjoint cliques covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePartition {
    pub parts: Vec<Vec<usize>>,
}

impl CliquePartition {
    /// Checks the partition against `g` and returns the part index of each
    /// vertex.
    pub fn part_of<A: Adjacency + ?Sized>(&self, g: &A) -> Result<Vec<usize>, BoundsError> {
        let n = g.vertex_count();
        let mut part = vec![usize::MAX; n];
        for (i, p) in self.parts.iter().enumerate() {
            if p.is_empty() {
                return Err(BoundsError::InvalidPartition(format!("part {i} is empty")));
            }
            for &v in p {
                if v >= n {
                    return Err(BoundsError::InvalidPartition(format!(
                        "vertex {v} out of range"
                    )));
                }
                if part[v] != usize::MAX {
                    return Err(BoundsError::InvalidPartition(format!(
                        "vertex {v} in two parts"
                    )));
                }
                part[v] = i;
            }
            check_clique(g, p).map_err(|(u, v)| {
                BoundsError::InvalidPartition(format!("part {i} has non-adjacent {u} and {v}"))
            })?;
        }
        if let Some(v) = part.iter().position(|&p| p == usize::MAX) {
            return Err(BoundsError::InvalidPartition(format!(
                "vertex {v} uncovered"
            )));
        }
        Ok(part)
    }
}

/// Cliques whose union covers every edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCliqueCover {
    pub cliques: Vec<Vec<usize>>,
}

impl EdgeCliqueCover {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), BoundsError> {
        let mut covered = vec![false; g.m()];
        for (i, q) in self.cliques.iter().enumerate() {
            if let Some(&v) = q.iter().find(|&&v| v >= g.n()) {
                return Err(BoundsError::InvalidCover(format!(
                    "vertex {v} out of range"
                )));
            }
            check_clique(g, q).map_err(|(u, v)| {
                BoundsError::InvalidCover(format!("clique {i} has non-adjacent {u} and {v}"))
            })?;
            for (a, &u) in q.iter().enumerate() {
                for &v in &q[a + 1..] {
                    if let Some(e) = g.edge_id(u, v) {
                        covered[e] = true;
                    }
                }
            }
        }
        match covered.iter().position(|c| !c) {
            Some(e) => {
                let (u, v) = g.edge(e);
                Err(BoundsError::InvalidCover(format!("edge {u}-{v} uncovered")))
            }
            None => Ok(()),
        }
    }
}

/// `uv` is an edge iff `sets[u]` and `sets[v]` share an element. Sets hold
/// indices into `universe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionRep {
    pub universe: Vec<String>,
    pub sets: Vec<Vec<usize>>,
}

impl IntersectionRep {
    /// `{"universe": [labels], "sets": {"v": [labels]}}`.
    pub fn to_json(&self) -> Value {
        let sets: Map<String, Value> = self
            .sets
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let labels: Vec<&str> = s.iter().map(|&x| self.universe[x].as_str()).collect();
                (v.to_string(), json!(labels))
            })
            .collect();
        json!({ "universe": self.universe, "sets": sets })
    }

    pub fn from_json(n: usize, value: &Value) -> Result<Self, BoundsError> {
        let bad = |reason: String| BoundsError::Format {
            what: "intersection representation",
            reason,
        };
        let universe: Vec<String> = serde_json::from_value(value["universe"].clone())
            .map_err(|e| bad(format!("universe: {e}")))?;
        let index: std::collections::HashMap<&str, usize> = universe
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        if index.len() != universe.len() {
            return Err(bad("duplicate universe label".into()));
        }
        let map = value["sets"]
            .as_object()
            .ok_or_else(|| bad("sets must be an object".into()))?;
        let mut sets = vec![Vec::new(); n];
        for (key, labels) in map {
            let v: usize = key
                .parse()
                .ok()
                .filter(|&v| v < n)
                .ok_or_else(|| bad(format!("bad vertex key {key:?}")))?;
            let labels: Vec<String> = serde_json::from_value(labels.clone())
                .map_err(|e| bad(format!("set {key}: {e}")))?;
            for l in labels {
                let x = *index
                    .get(l.as_str())
                    .ok_or_else(|| bad(format!("unknown element {l:?}")))?;
                sets[v].push(x);
            }
            sets[v].sort_unstable();
            sets[v].dedup();
        }
        Ok(IntersectionRep {
            universe: universe.clone(),
            sets,
        })
    }
}

/// First non-adjacent pair in `q`, if any.
fn check_clique<A: Adjacency + ?Sized>(g: &A, q: &[usize]) -> Result<(), (usize, usize)> {
    for (a, &u) in q.iter().enumerate() {
        for &v in &q[a + 1..] {
            if u == v || !g.has_edge(u, v) {
                return Err((u, v));
            }
        }
    }
    Ok(())
}

fn smallest_common(a: &[usize], b: &[usize]) -> Option<usize> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

/// Colors `uv` with the unordered pair of parts `{c(u), c(v)}`; at most
/// `r(r+1)/2` colors for `r` parts.
pub fn coloring_from_clique_partition(
    g: &Graph,
    p: &CliquePartition,
) -> Result<Coloring, BoundsError> {
    let part = p.part_of(g)?;
    Ok(Coloring::new(g.edges().iter().map(|&(u, v)| {
        let (a, b) = (part[u], part[v]);
        (a.min(b), a.max(b))
    })))
}

/// Colors each edge with the smallest universe element its endpoints share.
pub fn coloring_from_intersection_rep(
    g: &Graph,
    rep: &IntersectionRep,
) -> Result<Coloring, BoundsError> {
    if rep.sets.len() != g.n() {
        return Err(BoundsError::Format {
            what: "intersection representation",
            reason: format!("{} sets for {} vertices", rep.sets.len(), g.n()),
        });
    }
    let mut sets = rep.sets.clone();
    for s in &mut sets {
        if let Some(&x) = s.iter().find(|&&x| x >= rep.universe.len()) {
            return Err(BoundsError::Format {
                what: "intersection representation",
                reason: format!("element {x} outside the universe"),
            });
        }
        s.sort_unstable();
        s.dedup();
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let adjacent = g.has_edge(u, v);
            if adjacent != smallest_common(&sets[u], &sets[v]).is_some() {
                return Err(BoundsError::NotARepresentation { u, v, adjacent });
            }
        }
    }
    Ok(Coloring::new(g.edges().iter().map(|&(u, v)| {
        smallest_common(&sets[u], &sets[v]).expect("checked above")
    })))
}

/// One universe element per clique; at most `|cover|` colors.
pub fn coloring_from_ecc(g: &Graph, cover: &EdgeCliqueCover) -> Result<Coloring, BoundsError> {
    cover.validate(g)?;
    coloring_from_intersection_rep(g, &rep_from_cover(g.n(), cover))
}

pub fn rep_from_cover(n: usize, cover: &EdgeCliqueCover) -> IntersectionRep {
    let mut sets = vec![Vec::new(); n];
    for (i, q) in cover.cliques.iter().enumerate() {
        for &v in q {
            sets[v].push(i);
        }
    }
    IntersectionRep {
        universe: (0..cover.len()).map(|i| format!("q{i}")).collect(),
        sets,
    }
}

/// Covers uncovered edges in id order, growing each into a maximal clique
/// that prefers vertices closing the most uncovered edges.
pub fn greedy_edge_clique_cover(g: &Graph) -> EdgeCliqueCover {
    let mut covered = vec![false; g.m()];
    let mut cliques = Vec::new();
    for e in 0..g.m() {
        if covered[e] {
            continue;
        }
        let (u, v) = g.edge(e);
        let mut clique = vec![u, v];
        let mut candidates: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != v && g.has_edge(v, w))
            .collect();
        while !candidates.is_empty() {
            let gain = |w: usize| {
                clique
                    .iter()
                    .filter(|&&c| !covered[g.edge_id(c, w).expect("clique neighbor")])
                    .count()
            };
            let best = *candidates
                .iter()
                .max_by_key(|&&w| (gain(w), std::cmp::Reverse(w)))
                .expect("nonempty");
            clique.push(best);
            candidates.retain(|&w| w != best && g.has_edge(best, w));
        }
        clique.sort_unstable();
        for (a, &x) in clique.iter().enumerate() {
            for &y in &clique[a + 1..] {
                covered[g.edge_id(x, y).expect("clique edge")] = true;
            }
        }
        cliques.push(clique);
    }
    EdgeCliqueCover { cliques }
}

/// Edges and triangles covering every edge, at most `floor(n^2 / 4)` of them.
///
/// Repeatedly takes the smallest edge `uv` between live vertices, covers each
/// live `w` adjacent to both by the triangle `uvw` and each live `w` adjacent
/// to one by its edge, then retires `u` and `v`. Each round uses at most
/// `n - 1` pieces on `n` live vertices.
pub fn egp_cover(g: &Graph) -> EdgeCliqueCover {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut cliques = Vec::new();
    while let Some(&(u, v)) = g
        .edges()
        .iter()
        .filter(|&&(u, v)| alive[u] && alive[v])
        .min()
    {
        let mut triangle = false;
        for w in (0..n).filter(|&w| alive[w] && w != u && w != v) {
            match (g.has_edge(u, w), g.has_edge(v, w)) {
                (true, true) => {
                    triangle = true;
                    cliques.push(vec![u, v, w]);
                }
                (true, false) => cliques.push(vec![u, w]),
                (false, true) => cliques.push(vec![v, w]),
                (false, false) => {}
            }
        }
        if !triangle {
            cliques.push(vec![u, v]);
        }
        alive[u] = false;
        alive[v] = false;
    }
    for q in &mut cliques {
        q.sort_unstable();
    }
    EdgeCliqueCover { cliques }
}

/// Minimum clique partition: the color classes of an optimal coloring of the
/// complement.
pub fn clique_partition_exact<A: Adjacency + ?Sized>(
    g: &A,
    budget: u64,
) -> Result<CliquePartition, ExactError> {
    let res = chromatic_number(&complement_of(g), budget)?;
    let mut parts = vec![Vec::new(); res.chi];
    for (v, &c) in res.witness.iter().enumerate() {
        parts[c].push(v);
    }
    Ok(CliquePartition { parts })
}

/// `g` plus a universal vertex `n`. Edge ids: the edges of `g` in
/// lexicographic order, then the spokes `(v, n)` for `v = 0..n`.
pub fn hat_graph<A: Adjacency + ?Sized>(g: &A) -> Graph {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| {
            g.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
        .collect();
    edges.extend((0..n).map(|v| (v, n)));
    Graph::new(n + 1, &edges).expect("a universal vertex connects everything")
}

/// Coloring of `hat_graph(g)` from a partition into at most three cliques:
/// edges inside part `i` and spokes into part `i` get color `i`, edges
/// between parts `i` and `j` get the remaining color.
pub fn hat_cp3_coloring<A: Adjacency + ?Sized>(
    g: &A,
    p: &CliquePartition,
) -> Result<Coloring, BoundsError> {
    if p.parts.len() > 3 {
        return Err(BoundsError::TooManyParts {
            parts: p.parts.len(),
        });
    }
    let part = p.part_of(g)?;
    let hat = hat_graph(g);
    let n = g.vertex_count();
    Ok(Coloring::new(hat.edges().iter().map(|&(u, v)| {
        if v == n || part[u] == part[v] {
            part[u]
        } else {
            3 - part[u] - part[v]
        }
    })))
}

/// Coloring of `hat_graph(g)` from any clique partition: the pair coloring on
/// `g`, and each spoke `v` gets the singleton `{c(v)}`.
pub fn hat_coloring_from_clique_partition<A: Adjacency + ?Sized>(
    g: &A,
    p: &CliquePartition,
) -> Result<Coloring, BoundsError> {
    let part = p.part_of(g)?;
    let hat = hat_graph(g);
    let n = g.vertex_count();
    Ok(Coloring::new(hat.edges().iter().map(|&(u, v)| {
        let (a, b) = if v == n {
            (part[u], part[u])
        } else {
            (part[u], part[v])
        };
        (a.min(b), a.max(b))
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conflict::verify_coloring;
    use crate::graph::SimpleGraph;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        graph(n, &edges)
    }

    fn valid(g: &Graph, c: &Coloring) -> bool {
        verify_coloring(g, c).unwrap().valid
    }

    fn parts(p: &[&[usize]]) -> CliquePartition {
        CliquePartition {
            parts: p.iter().map(|s| s.to_vec()).collect(),
        }
    }

    #[test]
    fn clique_partition_colorings() {
        let k5 = complete(5);
        assert_eq!(
            coloring_from_clique_partition(&k5, &parts(&[&[0, 1, 2, 3, 4]]))
                .unwrap()
                .k(),
            1
        );

        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let c = coloring_from_clique_partition(&c4, &parts(&[&[0, 1], &[2, 3]])).unwrap();
        assert!(c.k() <= 3 && valid(&c4, &c));

        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let c = coloring_from_clique_partition(&p3, &parts(&[&[0, 1], &[2]])).unwrap();
        assert_eq!(c.k(), 2);
        assert!(valid(&p3, &c));
    }

    #[test]
    fn invalid_partitions() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        for bad in [
            parts(&[&[0, 2], &[1]]),
            parts(&[&[0, 1]]),
            parts(&[&[0, 1], &[1, 2]]),
        ] {
            assert!(matches!(
                coloring_from_clique_partition(&p3, &bad),
                Err(BoundsError::InvalidPartition(_))
            ));
        }
    }

    #[test]
    fn line_graph_of_triangle() {
        // L(K3) = K3 with S_uv = {u, v}
        let g = complete(3);
        let rep = IntersectionRep {
            universe: vec!["a".into(), "b".into(), "c".into()],
            sets: vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        };
        let c = coloring_from_intersection_rep(&g, &rep).unwrap();
        assert!(c.k() <= 3 && valid(&g, &c));
    }

    #[test]
    fn interval_representation() {
        // intervals [0,2] [1,4] [3,6] [5,7] on integer points 0..=7
        let iv = [(0, 2), (1, 4), (3, 6), (5, 7)];
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let rep = IntersectionRep {
            universe: (0..8).map(|x| x.to_string()).collect(),
            sets: iv.iter().map(|&(l, r)| (l..=r).collect()).collect(),
        };
        let c = coloring_from_intersection_rep(&g, &rep).unwrap();
        assert!(c.k() <= 8 && valid(&g, &c));
        assert_eq!(c.k(), 3);
    }

    #[test]
    fn single_element_rep() {
        let g = complete(4);
        let rep = IntersectionRep {
            universe: vec!["x".into()],
            sets: vec![vec![0]; 4],
        };
        assert_eq!(coloring_from_intersection_rep(&g, &rep).unwrap().k(), 1);
    }

    #[test]
    fn rep_mismatch_witness() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let rep = IntersectionRep {
            universe: vec!["x".into()],
            sets: vec![vec![0]; 3],
        };
        assert_eq!(
            coloring_from_intersection_rep(&p3, &rep),
            Err(BoundsError::NotARepresentation {
                u: 0,
                v: 2,
                adjacent: false
            })
        );
        let rep = IntersectionRep {
            universe: vec!["x".into(), "y".into()],
            sets: vec![vec![0], vec![1], vec![1]],
        };
        assert_eq!(
            coloring_from_intersection_rep(&p3, &rep),
            Err(BoundsError::NotARepresentation {
                u: 0,
                v: 1,
                adjacent: true
            })
        );
    }

    #[test]
    fn rep_json_round_trip() {
        let rep = IntersectionRep {
            universe: vec!["a".into(), "b".into()],
            sets: vec![vec![0], vec![0, 1], vec![1]],
        };
        let v = rep.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"universe":["a","b"],"sets":{"0":["a"],"1":["a","b"],"2":["b"]}}"#
        );
        assert_eq!(IntersectionRep::from_json(3, &v).unwrap(), rep);
        assert!(IntersectionRep::from_json(2, &v).is_err());
    }

    #[test]
    fn ecc_colorings() {
        let k3 = complete(3);
        let c = coloring_from_ecc(
            &k3,
            &EdgeCliqueCover {
                cliques: vec![vec![0, 1, 2]],
            },
        )
        .unwrap();
        assert_eq!(c.k(), 1);

        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let cover = EdgeCliqueCover {
            cliques: vec![vec![0, 1], vec![1, 2], vec![2, 3]],
        };
        assert_eq!(coloring_from_ecc(&p4, &cover).unwrap().k(), 3);

        let bowtie = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let cover = EdgeCliqueCover {
            cliques: vec![vec![0, 1, 2], vec![2, 3, 4]],
        };
        let c = coloring_from_ecc(&bowtie, &cover).unwrap();
        assert_eq!(c.k(), 2);
        assert!(valid(&bowtie, &c));

        let partial = EdgeCliqueCover {
            cliques: vec![vec![0, 1, 2]],
        };
        assert!(matches!(
            coloring_from_ecc(&bowtie, &partial),
            Err(BoundsError::InvalidCover(_))
        ));
    }

    #[test]
    fn greedy_and_egp_covers() {
        let bowtie = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let greedy = greedy_edge_clique_cover(&bowtie);
        assert_eq!(greedy.cliques, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        for g in [
            bowtie,
            complete(6),
            graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        ] {
            let egp = egp_cover(&g);
            assert!(egp.len() <= g.n() * g.n() / 4);
            assert!(egp.cliques.iter().all(|q| q.len() <= 3));
            let c = coloring_from_ecc(&g, &egp).unwrap();
            assert!(valid(&g, &c));
        }
    }

    #[test]
    fn exact_clique_partitions() {
        assert_eq!(
            clique_partition_exact(&complete(5), 1000)
                .unwrap()
                .parts
                .len(),
            1
        );
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(clique_partition_exact(&c5, 1000).unwrap().parts.len(), 3);
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = clique_partition_exact(&p4, 1000).unwrap();
        assert_eq!(p.parts.len(), 2);
        assert!(p.part_of(&p4).is_ok());
    }

    #[test]
    fn hat_graphs() {
        let k2 = hat_graph(&SimpleGraph::empty(1));
        assert_eq!((k2.n(), k2.m()), (2, 1));
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let h = hat_graph(&p3);
        assert_eq!((h.n(), h.m()), (4, 5));
        assert_eq!(crate::graph::all_pairs_distances(&h).diameter(), 2);
        let star = hat_graph(&SimpleGraph::empty(3));
        assert_eq!(star.edges(), &[(0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn hat_three_part_colorings() {
        let empty3 = SimpleGraph::empty(3);
        let c = hat_cp3_coloring(&empty3, &parts(&[&[0], &[1], &[2]])).unwrap();
        assert_eq!(c.k(), 3);
        assert!(valid(&hat_graph(&empty3), &c));

        let k3 = SimpleGraph::empty(3).complement();
        let c = hat_cp3_coloring(&k3, &parts(&[&[0, 1, 2]])).unwrap();
        assert_eq!(c.k(), 1);
        assert!(valid(&hat_graph(&k3), &c));

        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = hat_cp3_coloring(&c4, &parts(&[&[0, 1], &[2, 3]])).unwrap();
        assert!(c.k() <= 3);
        assert!(valid(&hat_graph(&c4), &c));

        let four = parts(&[&[0], &[1], &[2], &[3]]);
        assert_eq!(
            hat_cp3_coloring(&SimpleGraph::empty(4), &four),
            Err(BoundsError::TooManyParts { parts: 4 })
        );
        let c = hat_coloring_from_clique_partition(&SimpleGraph::empty(4), &four).unwrap();
        assert!(valid(&hat_graph(&SimpleGraph::empty(4)), &c));
    }
}
