//! Seeded instance generators and the reduction from 3-coloring.
//!
//! All randomness comes from [`SeededRng`]: ChaCha8 keyed by the 64-bit seed
//! through `rand_chacha`'s `seed_from_u64`. Bounded draws use the
//! multiply-shift map `(x * n) >> 64` on raw 64-bit outputs and probabilities
//! compare the top 53 bits against `p`, so a seed reproduces the same graph
//! on any platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::hat_graph;
use crate::graph::{Graph, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

fn bad(msg: impl Into<String>) -> InstanceError {
    InstanceError::BadParameters(msg.into())
}

pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish integer in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((u128::from(self.next_u64()) * n as u128) >> 64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        ((self.next_u64() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CactusBlockKind {
    Bridge,
    OddCycle,
    EvenCycle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    RandomCactus {
        blocks: usize,
        max_len: usize,
        /// Allowed block kinds; all three when absent.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        kinds: Option<Vec<CactusBlockKind>>,
    },
    RandomInterval {
        n: usize,
    },
    RandomChordal {
        n: usize,
    },
    RandomConnected {
        n: usize,
        p: f64,
    },
}

/// A family with its parameters and a seed (ignored by deterministic
/// families).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
}

pub fn generate(spec: &GenSpec) -> Result<Graph, InstanceError> {
    let mut rng = SeededRng::new(spec.seed);
    let (n, edges) = match spec.family {
        Family::Path { n } => {
            if n == 0 {
                return Err(bad("path needs n >= 1"));
            }
            (n, (1..n).map(|i| (i - 1, i)).collect())
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(bad("cycle needs n >= 3"));
            }
            (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        Family::Star { leaves } => (leaves + 1, (1..=leaves).map(|i| (0, i)).collect()),
        Family::Complete { n } => {
            if n == 0 {
                return Err(bad("complete graph needs n >= 1"));
            }
            (n, all_pairs(n))
        }
        Family::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return Err(bad("complete bipartite graph needs a, b >= 1"));
            }
            let edges = (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect();
            (a + b, edges)
        }
        Family::RandomCactus {
            blocks,
            max_len,
            ref kinds,
        } => random_cactus(&mut rng, blocks, max_len, kinds.as_deref())?,
        Family::RandomInterval { n } => {
            let model = random_interval_model(&mut rng, n)?;
            return Ok(model.graph);
        }
        Family::RandomChordal { n } => random_chordal(&mut rng, n)?,
        Family::RandomConnected { n, p } => random_connected(&mut rng, n, p)?,
    };
    Ok(Graph::new(n, &edges).expect("generators build connected simple graphs"))
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn random_cactus(
    rng: &mut SeededRng,
    blocks: usize,
    max_len: usize,
    kinds: Option<&[CactusBlockKind]>,
) -> Result<(usize, Vec<(usize, usize)>), InstanceError> {
    let mut allowed: Vec<CactusBlockKind> = kinds.map(<[_]>::to_vec).unwrap_or_else(|| {
        vec![
            CactusBlockKind::Bridge,
            CactusBlockKind::OddCycle,
            CactusBlockKind::EvenCycle,
        ]
    });
    allowed.retain(|k| match k {
        CactusBlockKind::Bridge => true,
        CactusBlockKind::OddCycle => max_len >= 3,
        CactusBlockKind::EvenCycle => max_len >= 4,
    });
    allowed.dedup();
    if allowed.is_empty() && blocks > 0 {
        return Err(bad(format!("no block kind fits max_len = {max_len}")));
    }
    let mut n = 1;
    let mut edges = Vec::new();
    for _ in 0..blocks {
        let kind = allowed[rng.below(allowed.len())];
        let at = rng.below(n);
        let len = match kind {
            CactusBlockKind::Bridge => 1,
            CactusBlockKind::OddCycle => {
                let choices = (max_len - 1) / 2; // 3, 5, .. <= max_len
                3 + 2 * rng.below(choices)
            }
            CactusBlockKind::EvenCycle => {
                let choices = (max_len - 2) / 2; // 4, 6, .. <= max_len
                4 + 2 * rng.below(choices)
            }
        };
        if len == 1 {
            edges.push((at, n));
            n += 1;
            continue;
        }
        let mut prev = at;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, at));
    }
    Ok((n, edges))
}

/// An interval graph together with its closed integer intervals.
#[derive(Debug, Clone)]
pub struct IntervalModel {
    /// `intervals[v] = (left, right)`, sorted by left endpoint.
    pub intervals: Vec<(u64, u64)>,
    pub graph: Graph,
}

pub fn random_interval(n: usize, seed: u64) -> Result<IntervalModel, InstanceError> {
    random_interval_model(&mut SeededRng::new(seed), n)
}

fn random_interval_model(rng: &mut SeededRng, n: usize) -> Result<IntervalModel, InstanceError> {
    if n == 0 {
        return Err(bad("interval graph needs n >= 1"));
    }
    let span = 4 * n;
    let mut lefts: Vec<u64> = (0..n).map(|_| rng.below(span) as u64).collect();
    lefts.sort_unstable();
    let mut intervals = Vec::with_capacity(n);
    for i in 0..n {
        let len = 1 + rng.below(2 * n) as u64;
        let mut right = lefts[i] + len;
        // touch the next interval so the graph stays connected
        if i + 1 < n {
            right = right.max(lefts[i + 1]);
        }
        intervals.push((lefts[i], right));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if intervals[u].0.max(intervals[v].0) <= intervals[u].1.min(intervals[v].1) {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::new(n, &edges).expect("chained intervals are connected");
    Ok(IntervalModel { intervals, graph })
}

/// Each new vertex joins a random nonempty clique, so the reverse insertion
/// order is a perfect elimination order.
fn random_chordal(
    rng: &mut SeededRng,
    n: usize,
) -> Result<(usize, Vec<(usize, usize)>), InstanceError> {
    if n == 0 {
        return Err(bad("chordal graph needs n >= 1"));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.below(v);
        let mut clique = vec![u];
        let mut candidates = adj[u].clone();
        rng.shuffle(&mut candidates);
        for w in candidates {
            if rng.chance(0.5) && clique.iter().all(|c| adj[*c].contains(&w)) {
                clique.push(w);
            }
        }
        clique.sort_unstable();
        for c in clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((c, v));
        }
    }
    Ok((n, edges))
}

/// Random recursive spanning tree plus each remaining pair with
/// probability `p`.
fn random_connected(
    rng: &mut SeededRng,
    n: usize,
    p: f64,
) -> Result<(usize, Vec<(usize, usize)>), InstanceError> {
    if n == 0 {
        return Err(bad("random connected graph needs n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(bad(format!("probability {p} outside [0, 1]")));
    }
    let mut present = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.below(v);
        present[u][v] = true;
        edges.push((u, v));
    }
    for (u, v) in all_pairs(n) {
        if !present[u][v] && rng.chance(p) {
            edges.push((u, v));
        }
    }
    Ok((n, edges))
}

/// `hat(complement(g))`: 3-colorable `g` gives `vsrc <= 3`, otherwise
/// `vsrc > 3`.
pub fn reduce_3col(g: &SimpleGraph) -> Graph {
    hat_graph(&g.complement())
}

/// Random graph with edges only between the three round-robin classes
/// `v mod 3`.
pub fn planted_3colorable(n: usize, p: f64, seed: u64) -> Result<SimpleGraph, InstanceError> {
    if n < 3 {
        return Err(bad("planted 3-colorable graph needs n >= 3"));
    }
    let class: Vec<usize> = (0..n).map(|v| v % 3).collect();
    planted(&class, p, seed)
}

/// As [`planted_3colorable`] with explicit class sizes; vertices are
/// assigned to classes in blocks.
pub fn planted_with_classes(
    sizes: [usize; 3],
    p: f64,
    seed: u64,
) -> Result<SimpleGraph, InstanceError> {
    let class: Vec<usize> = (0..3)
        .flat_map(|c| std::iter::repeat_n(c, sizes[c]))
        .collect();
    planted(&class, p, seed)
}

fn planted(class: &[usize], p: f64, seed: u64) -> Result<SimpleGraph, InstanceError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(bad(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = SeededRng::new(seed);
    let edges: Vec<(usize, usize)> = all_pairs(class.len())
        .into_iter()
        .filter(|&(u, v)| class[u] != class[v] && rng.chance(p))
        .collect();
    Ok(SimpleGraph::from_edges(class.len(), &edges).expect("simple by construction"))
}

/// Random graph on `n >= 4` vertices containing a planted `K4`, so its
/// chromatic number is at least 4.
pub fn planted_k4(n: usize, p: f64, seed: u64) -> Result<SimpleGraph, InstanceError> {
    if n < 4 {
        return Err(bad("planted K4 needs n >= 4"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(bad(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = SeededRng::new(seed);
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let k4 = &order[..4];
    let edges: Vec<(usize, usize)> = all_pairs(n)
        .into_iter()
        .filter(|&(u, v)| (k4.contains(&u) && k4.contains(&v)) || rng.chance(p))
        .collect();
    Ok(SimpleGraph::from_edges(n, &edges).expect("simple by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cactus_decomposition, Adjacency};

    fn spec(family: Family, seed: u64) -> GenSpec {
        GenSpec { family, seed }
    }

    #[test]
    fn classic_families() {
        let p5 = generate(&spec(Family::Path { n: 5 }, 0)).unwrap();
        assert_eq!((p5.n(), p5.m()), (5, 4));
        let k23 = generate(&spec(Family::CompleteBipartite { a: 2, b: 3 }, 0)).unwrap();
        assert_eq!((k23.n(), k23.m()), (5, 6));
        let star = generate(&spec(Family::Star { leaves: 3 }, 0)).unwrap();
        assert_eq!(star.degree(0), 3);
        assert_eq!(
            generate(&spec(Family::Complete { n: 5 }, 0)).unwrap().m(),
            10
        );
        assert!(generate(&spec(Family::Cycle { n: 2 }, 0)).is_err());
    }

    #[test]
    fn random_cactus_is_a_cactus() {
        let g = generate(&spec(
            Family::RandomCactus {
                blocks: 4,
                max_len: 7,
                kinds: None,
            },
            1,
        ))
        .unwrap();
        assert!(cactus_decomposition(&g).is_ok());
        assert!(g.to_simple().is_connected());
    }

    #[test]
    fn cactus_kind_filter() {
        let g = generate(&spec(
            Family::RandomCactus {
                blocks: 6,
                max_len: 9,
                kinds: Some(vec![CactusBlockKind::OddCycle]),
            },
            3,
        ))
        .unwrap();
        let cd = cactus_decomposition(&g).unwrap();
        assert_eq!(cd.blocks.len(), 6);
        assert!(cd.blocks.iter().all(|b| b.is_cycle() && b.len() % 2 == 1));
        assert!(generate(&spec(
            Family::RandomCactus {
                blocks: 2,
                max_len: 3,
                kinds: Some(vec![CactusBlockKind::EvenCycle]),
            },
            0,
        ))
        .is_err());
    }

    #[test]
    fn same_seed_same_graph() {
        let s = spec(Family::RandomConnected { n: 9, p: 0.3 }, 42);
        assert_eq!(generate(&s).unwrap().edges(), generate(&s).unwrap().edges());
        let t = spec(Family::RandomConnected { n: 9, p: 0.3 }, 43);
        assert_ne!(generate(&s).unwrap().edges(), generate(&t).unwrap().edges());
    }

    #[test]
    fn gen_spec_json() {
        let s: GenSpec =
            serde_json::from_str(r#"{"family":"random_cactus","blocks":3,"max_len":5,"seed":9}"#)
                .unwrap();
        assert_eq!(
            s,
            spec(
                Family::RandomCactus {
                    blocks: 3,
                    max_len: 5,
                    kinds: None
                },
                9
            )
        );
        let back: GenSpec = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn planted_instances() {
        let k3 = planted_3colorable(3, 1.0, 5).unwrap();
        assert_eq!(k3.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let bip = planted_with_classes([3, 0, 4], 0.7, 1).unwrap();
        assert!(crate::graph::is_bipartite(&bip).is_bipartite());
        let g = planted_k4(7, 0.2, 11).unwrap();
        assert!(crate::exact::max_clique(&g, 1000).clique.len() >= 4);
        assert!(planted_3colorable(2, 0.5, 0).is_err());
    }

    #[test]
    fn reduction_shape() {
        let k3 = SimpleGraph::empty(3).complement();
        let r = reduce_3col(&k3);
        // complement of K3 is empty; hat of it is the star K_{1,3}
        assert_eq!((r.n(), r.m()), (4, 3));
        assert_eq!(r.degree(3), 3);
    }
}
