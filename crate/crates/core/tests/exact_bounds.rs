mod common;

use common::{arb_connected, brute_rainbow, connected};
use proptest::prelude::*;
use vsrc_core::bounds::{
    chordal_coloring, clique_partition_exact, coloring_from_clique_partition, hat_cp3_coloring,
    hat_graph, k_perfectly_groupable, vsrc_bounds,
};
use vsrc_core::conflict::{build_conflict_graph, verify_coloring};
use vsrc_core::exact::{
    chromatic_number, chromatic_number_ie, decide_vsrc2, max_clique, vsrc_exact, DEFAULT_BUDGET,
};
use vsrc_core::graph::{all_pairs_distances, blocks, is_bipartite};
use vsrc_core::instances::{generate, planted_with_classes, random_interval, Family, GenSpec};
use vsrc_core::{Adjacency, Graph, SimpleGraph};

fn arb_simple(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(p, _)| p)
                .collect();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
}

fn bridge_count(g: &Graph) -> usize {
    blocks(g).iter().filter(|b| b.is_bridge()).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn inclusion_exclusion_agrees_with_branch_and_bound(h in arb_simple(12)) {
        let bb = chromatic_number(&h, u64::MAX).unwrap();
        prop_assert_eq!(chromatic_number_ie(&h).unwrap(), bb.chi);
        for &(u, v) in &h.edges() {
            prop_assert_ne!(bb.witness[u], bb.witness[v]);
        }
    }

    #[test]
    fn exact_vsrc_invariants(g in arb_connected(8)) {
        let sol = vsrc_exact(&g, DEFAULT_BUDGET).unwrap();
        prop_assert!(verify_coloring(&g, &sol.coloring).unwrap().valid);
        prop_assert!(brute_rainbow(&g, sol.coloring.colors()));
        prop_assert_eq!(sol.coloring.k(), sol.k);
        let d = all_pairs_distances(&g);
        prop_assert!(sol.k >= d.diameter() as usize);
        prop_assert!(sol.k >= bridge_count(&g));
        prop_assert!(sol.k <= g.m());
        prop_assert!(sol.k <= g.n() * g.n() / 4);
        prop_assert_eq!(decide_vsrc2(&g), sol.k <= 2);
        // one color fewer is impossible: the conflict graph has no such coloring
        if sol.k > 0 {
            let cg = build_conflict_graph(&g);
            prop_assert_eq!(chromatic_number_ie(&cg).unwrap_or(sol.k), sol.k);
        }
    }

    #[test]
    fn groupable_soundness(g in arb_connected(8)) {
        let k = vsrc_exact(&g, DEFAULT_BUDGET).unwrap().k;
        prop_assert!(k_perfectly_groupable(&g, k, DEFAULT_BUDGET).unwrap().groupable);
    }

    #[test]
    fn bounds_sandwich(g in arb_connected(8)) {
        let k = vsrc_exact(&g, DEFAULT_BUDGET).unwrap().k;
        let r = vsrc_bounds(&g);
        prop_assert!(r.lower <= k && k <= r.upper, "{} <= {} <= {}", r.lower, k, r.upper);
        let d = all_pairs_distances(&g);
        prop_assert!(r.lower >= (d.diameter() as usize).max(bridge_count(&g)));
        for b in &r.upper_bounds {
            prop_assert!(verify_coloring(&g, &b.coloring).unwrap().valid, "{}", b.method);
            prop_assert_eq!(b.value, b.coloring.k());
        }
        prop_assert!(r.upper_bounds.iter().any(|b| b.method == "egp_cover" && b.value <= g.n() * g.n() / 4));
    }

    #[test]
    fn clique_partition_bound(g in arb_connected(10)) {
        let p = clique_partition_exact(&g, DEFAULT_BUDGET).unwrap();
        let r = p.parts.len();
        let c = coloring_from_clique_partition(&g, &p).unwrap();
        prop_assert!(c.k() <= r * (r + 1) / 2);
        prop_assert!(verify_coloring(&g, &c).unwrap().valid);
        let chi_complement = chromatic_number(&g.to_simple().complement(), u64::MAX).unwrap().chi;
        prop_assert_eq!(r, chi_complement);
    }

    #[test]
    fn chordal_bound(n in 1usize..13, seed in any::<u64>(), interval in any::<bool>()) {
        let g = if interval {
            random_interval(n, seed).unwrap().graph
        } else {
            generate(&GenSpec { family: Family::RandomChordal { n }, seed }).unwrap()
        };
        let c = chordal_coloring(&g).unwrap();
        let omega = max_clique(&g, u64::MAX).clique.len();
        prop_assert_eq!(c.omega, omega);
        prop_assert!(c.coloring.k() <= n - omega + 1);
        prop_assert!(c.tree.nodes.len() <= n - omega + 1);
        prop_assert!(verify_coloring(&g, &c.coloring).unwrap().valid);
    }

    #[test]
    fn interval_models_match(n in 1usize..15, seed in any::<u64>()) {
        let model = random_interval(n, seed).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (model.intervals[u], model.intervals[v]);
                prop_assert_eq!(model.graph.has_edge(u, v), a.0.max(b.0) <= a.1.min(b.1));
            }
        }
    }

    #[test]
    fn hat_three_clique_colorings(sizes in [0usize..4, 0usize..4, 0usize..4], p in 0.0..1.0f64, seed in any::<u64>()) {
        prop_assume!(sizes.iter().sum::<usize>() > 0);
        // complement of a 3-colorable graph has cp <= 3
        let g = planted_with_classes(sizes, p, seed).unwrap().complement();
        let cp = clique_partition_exact(&g, DEFAULT_BUDGET).unwrap();
        prop_assert!(cp.parts.len() <= 3);
        let c = hat_cp3_coloring(&g, &cp).unwrap();
        prop_assert!(c.k() <= 3);
        prop_assert!(verify_coloring(&hat_graph(&g), &c).unwrap().valid);
    }

    #[test]
    fn generators_are_deterministic(n in 1usize..12, p in 0.0..1.0f64, seed in any::<u64>()) {
        let spec = GenSpec { family: Family::RandomConnected { n, p }, seed };
        let (a, b) = (generate(&spec).unwrap(), generate(&spec).unwrap());
        prop_assert_eq!(a.edges(), b.edges());
        prop_assert!(a.to_simple().is_connected());
    }
}

#[test]
fn two_vsrc_matches_bipartite_conflict_graph() {
    for seed in 0..200 {
        let g = connected(6, 0.4, seed);
        let cg = build_conflict_graph(&g);
        assert_eq!(decide_vsrc2(&g), is_bipartite(&cg).is_bipartite());
    }
}

#[test]
fn five_cycle_with_pendant() {
    let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
    assert_eq!(vsrc_exact(&g, DEFAULT_BUDGET).unwrap().k, 3);
    assert_eq!(vsrc_core::cactus::color_cactus(&g).unwrap().k, 3);
}

#[test]
fn reduction_on_small_graphs() {
    use vsrc_core::instances::{planted_3colorable, planted_k4, reduce_3col};
    for seed in 0..10 {
        let g = planted_3colorable(7, 0.5, seed).unwrap();
        assert!(vsrc_exact(&reduce_3col(&g), DEFAULT_BUDGET).unwrap().k <= 3);
        let h = planted_k4(7, 0.3, seed).unwrap();
        assert!(vsrc_exact(&reduce_3col(&h), DEFAULT_BUDGET).unwrap().k > 3);
    }
}
