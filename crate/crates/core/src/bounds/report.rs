//! Aggregated lower and upper bounds with certificates.

use serde::Serialize;
use serde_json::{json, Value};

use super::{
    chordal_coloring, clique_partition_exact, coloring_from_clique_partition, coloring_from_ecc,
    egp_cover, greedy_edge_clique_cover, neighborhood_partitions, BoundsError,
};
use crate::cactus::color_cactus;
use crate::conflict::{build_conflict_graph_with, verify_coloring_with, Coloring};
use crate::exact::{chromatic_lower_bound, DEFAULT_BUDGET};
use crate::graph::{all_pairs_distances, blocks, DistanceMatrix, Graph};

/// Exact clique partitions are only attempted up to this many vertices.
const CP_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct LowerBound {
    pub method: &'static str,
    pub value: usize,
    pub certificate: Value,
}

/// An upper bound backed by a coloring that passed verification.
#[derive(Debug, Clone)]
pub struct UpperBound {
    pub method: &'static str,
    pub value: usize,
    pub coloring: Coloring,
}

/// An engine that produced no bound, and why.
#[derive(Debug, Clone, Serialize)]
pub struct Skipped {
    pub method: &'static str,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub lower: usize,
    pub upper: usize,
    pub lower_bounds: Vec<LowerBound>,
    pub upper_bounds: Vec<UpperBound>,
    pub skipped: Vec<Skipped>,
}

impl BoundsReport {
    pub fn is_tight(&self) -> bool {
        self.lower == self.upper
    }

    /// The first coloring achieving `upper`.
    pub fn best(&self) -> &UpperBound {
        self.upper_bounds
            .iter()
            .find(|b| b.value == self.upper)
            .expect("the rainbow coloring is always present")
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        let upper: Vec<Value> = self
            .upper_bounds
            .iter()
            .map(|b| json!({ "method": b.method, "value": b.value, "coloring": b.coloring.to_json(g) }))
            .collect();
        json!({
            "lower": self.lower,
            "upper": self.upper,
            "lower_bounds": self.lower_bounds,
            "upper_bounds": upper,
            "skipped": self.skipped,
        })
    }
}

pub fn vsrc_bounds(g: &Graph) -> BoundsReport {
    vsrc_bounds_with(g, DEFAULT_BUDGET)
}

fn edge_labels(g: &Graph, edges: impl IntoIterator<Item = usize>) -> Vec<String> {
    edges
        .into_iter()
        .map(|e| {
            let (u, v) = g.edge(e);
            format!("{u}-{v}")
        })
        .collect()
}

fn lower_bounds(
    g: &Graph,
    d: &DistanceMatrix,
    budget: u64,
    skipped: &mut Vec<Skipped>,
) -> Vec<LowerBound> {
    let mut out = Vec::new();

    let diameter = d.diameter() as usize;
    let (s, t) = (0..g.n())
        .flat_map(|s| (0..g.n()).map(move |t| (s, t)))
        .find(|&(s, t)| d.get(s, t) as usize == diameter)
        .unwrap_or((0, 0));
    out.push(LowerBound {
        method: "diameter",
        value: diameter,
        certificate: json!({ "path": d.shortest_path(g, s, t) }),
    });

    let bridges: Vec<usize> = blocks(g)
        .iter()
        .filter(|b| b.is_bridge())
        .map(|b| b.edges[0])
        .collect();
    out.push(LowerBound {
        method: "bridges",
        value: bridges.len(),
        certificate: json!({ "edges": edge_labels(g, bridges) }),
    });

    match neighborhood_partitions(g, budget) {
        Ok(parts) => {
            let worst = parts.into_iter().max_by(|a, b| {
                a.parts
                    .len()
                    .cmp(&b.parts.len())
                    .then(b.vertex.cmp(&a.vertex))
            });
            if let Some(w) = worst {
                out.push(LowerBound {
                    method: "groupable",
                    value: w.parts.len(),
                    certificate: json!({ "vertex": w.vertex, "neighborhood_parts": w.parts }),
                });
            }
        }
        Err(e) => skipped.push(Skipped {
            method: "groupable",
            reason: e.to_string(),
        }),
    }

    let cg = build_conflict_graph_with(g, d);
    let (value, clique) = chromatic_lower_bound(&cg, budget);
    out.push(LowerBound {
        method: "conflict_clique",
        value,
        certificate: json!({
            "pairwise_conflicting_edges": edge_labels(g, clique.iter().copied()),
            "via_independence_number": value > clique.len(),
        }),
    });
    out
}

fn upper_candidates(
    g: &Graph,
    budget: u64,
    skipped: &mut Vec<Skipped>,
) -> Vec<(&'static str, Coloring)> {
    if g.n() > CP_MAX_VERTICES {
        skipped.push(Skipped {
            method: "clique_partition",
            reason: format!("more than {CP_MAX_VERTICES} vertices"),
        });
    }
    let mut out = vec![("edges", Coloring::rainbow(g.m()))];
    let mut push = |method: &'static str, r: Result<Coloring, BoundsError>| match r {
        Ok(c) => out.push((method, c)),
        Err(e) => skipped.push(Skipped {
            method,
            reason: e.to_string(),
        }),
    };
    push("egp_cover", coloring_from_ecc(g, &egp_cover(g)));
    push(
        "edge_clique_cover",
        coloring_from_ecc(g, &greedy_edge_clique_cover(g)),
    );
    if g.n() <= CP_MAX_VERTICES {
        push(
            "clique_partition",
            clique_partition_exact(g, budget)
                .map_err(BoundsError::from)
                .and_then(|p| coloring_from_clique_partition(g, &p)),
        );
    }
    push("chordal", chordal_coloring(g).map(|c| c.coloring));
    match color_cactus(g) {
        Ok(sol) => out.push(("cactus", sol.coloring)),
        Err(e) => skipped.push(Skipped {
            method: "cactus",
            reason: e.to_string(),
        }),
    }
    out
}

/// All lower and upper bounds the crate knows for `g`. Each engine runs
/// under `budget`; an engine that fails or runs out of budget is listed in
/// `skipped` and the remaining bounds still apply.
pub fn vsrc_bounds_with(g: &Graph, budget: u64) -> BoundsReport {
    let d = all_pairs_distances(g);
    let mut skipped = Vec::new();
    let lower_bounds = lower_bounds(g, &d, budget, &mut skipped);
    let mut upper_bounds = Vec::new();
    for (method, coloring) in upper_candidates(g, budget, &mut skipped) {
        match verify_coloring_with(g, &d, &coloring) {
            Ok(r) if r.valid => upper_bounds.push(UpperBound {
                method,
                value: coloring.k(),
                coloring,
            }),
            Ok(_) => skipped.push(Skipped {
                method,
                reason: "coloring failed verification".into(),
            }),
            Err(e) => skipped.push(Skipped {
                method,
                reason: e.to_string(),
            }),
        }
    }
    BoundsReport {
        lower: lower_bounds.iter().map(|b| b.value).max().unwrap_or(0),
        upper: upper_bounds.iter().map(|b| b.value).min().unwrap_or(g.m()),
        lower_bounds,
        upper_bounds,
        skipped,
    }
}
