//! `k`-perfect groupability: every neighborhood splits into at most `k`
//! cliques. A graph with `vsrc <= k` is `k`-perfectly groupable, so the
//! largest neighborhood clique partition number is a lower bound on `vsrc`.

use serde::Serialize;

use super::clique_partition_exact;
use crate::exact::ExactError;
use crate::graph::{induced_of, Adjacency};

/// A minimum clique partition of `N(vertex)`, in original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborhoodPartition {
    pub vertex: usize,
    pub parts: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupableReport {
    pub k: usize,
    pub groupable: bool,
    /// One optimal partition per vertex.
    pub neighborhoods: Vec<NeighborhoodPartition>,
}

impl GroupableReport {
    /// Vertices whose neighborhood needs more than `k` cliques.
    pub fn failures(&self) -> impl Iterator<Item = &NeighborhoodPartition> {
        self.neighborhoods
            .iter()
            .filter(move |p| p.parts.len() > self.k)
    }
}

pub fn neighborhood_partitions<A: Adjacency + ?Sized>(
    g: &A,
    budget: u64,
) -> Result<Vec<NeighborhoodPartition>, ExactError> {
    (0..g.vertex_count())
        .map(|v| {
            let nbrs = g.neighbors(v);
            let local = clique_partition_exact(&induced_of(g, nbrs), budget)?;
            let parts = local
                .parts
                .into_iter()
                .map(|p| p.into_iter().map(|i| nbrs[i]).collect())
                .collect();
            Ok(NeighborhoodPartition { vertex: v, parts })
        })
        .collect()
}

pub fn k_perfectly_groupable<A: Adjacency + ?Sized>(
    g: &A,
    k: usize,
    budget: u64,
) -> Result<GroupableReport, ExactError> {
    let neighborhoods = neighborhood_partitions(g, budget)?;
    let groupable = neighborhoods.iter().all(|p| p.parts.len() <= k);
    Ok(GroupableReport {
        k,
        groupable,
        neighborhoods,
    })
}
