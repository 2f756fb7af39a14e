#![allow(dead_code)]

use proptest::prelude::*;
use vsrc_core::conflict::enumerate_shortest_paths;
use vsrc_core::instances::{generate, Family, GenSpec};
use vsrc_core::Graph;

pub fn connected(n: usize, p: f64, seed: u64) -> Graph {
    generate(&GenSpec {
        family: Family::RandomConnected { n, p },
        seed,
    })
    .unwrap()
}

pub fn cactus(blocks: usize, max_len: usize, seed: u64) -> Graph {
    generate(&GenSpec {
        family: Family::RandomCactus {
            blocks,
            max_len,
            kinds: None,
        },
        seed,
    })
    .unwrap()
}

pub fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..0.8f64, any::<u64>()).prop_map(|(n, p, seed)| connected(n, p, seed))
}

pub fn arb_cactus(max_blocks: usize, max_len: usize) -> impl Strategy<Value = Graph> {
    (0..=max_blocks, any::<u64>()).prop_map(move |(b, seed)| cactus(b, max_len, seed))
}

/// Every shortest path between every ordered pair `s < t`, as vertex lists.
pub fn all_shortest_paths(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            out.extend(enumerate_shortest_paths(g, s, t, 1_000_000).unwrap());
        }
    }
    out
}

pub fn path_edges(g: &Graph, path: &[usize]) -> Vec<usize> {
    path.windows(2)
        .map(|w| g.edge_id(w[0], w[1]).unwrap())
        .collect()
}

/// `together[e][f]`: some shortest path uses both `e` and `f`.
pub fn brute_conflicts(g: &Graph) -> Vec<Vec<bool>> {
    let mut together = vec![vec![false; g.m()]; g.m()];
    for p in all_shortest_paths(g) {
        let es = path_edges(g, &p);
        for &e in &es {
            for &f in &es {
                if e != f {
                    together[e][f] = true;
                }
            }
        }
    }
    together
}

/// Every shortest path has pairwise distinct edge colors.
pub fn brute_rainbow(g: &Graph, colors: &[usize]) -> bool {
    all_shortest_paths(g).iter().all(|p| {
        let mut cs: Vec<usize> = path_edges(g, p).iter().map(|&e| colors[e]).collect();
        let len = cs.len();
        cs.sort_unstable();
        cs.dedup();
        cs.len() == len
    })
}
