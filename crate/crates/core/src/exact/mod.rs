//! Exact `vsrc` through the chromatic number of the conflict graph.

mod clique;
mod dsatur;
mod inclusion_exclusion;

use thiserror::Error;

pub use clique::{max_clique, CliqueSearch};
pub use dsatur::{chromatic_number, ChromaticResult};
pub use inclusion_exclusion::{chromatic_number_ie, MAX_VERTICES as IE_MAX_VERTICES};

pub(crate) use dsatur::lower_bound as chromatic_lower_bound;

use crate::conflict::{build_conflict_graph, Coloring};
use crate::graph::{is_bipartite, Adjacency, Graph};

/// Default search-node budget for the exact engines.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("search budget exhausted; chromatic number lies in [{lower}, {upper}]")]
    BudgetExceeded {
        lower: usize,
        upper: usize,
        /// Best proper coloring found (uses `upper` colors).
        best: Vec<usize>,
    },
    #[error("{vertices} vertices exceed the engine limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

/// An optimal very strong rainbow coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VsrcSolution {
    pub k: usize,
    pub coloring: Coloring,
}

/// `vsrc(g)` as the chromatic number of the conflict graph. The coloring
/// gives each edge its conflict-graph color.
pub fn vsrc_exact(g: &Graph, budget: u64) -> Result<VsrcSolution, ExactError> {
    let cg = build_conflict_graph(g);
    let res = chromatic_number(&cg, budget)?;
    Ok(VsrcSolution {
        k: res.chi,
        coloring: Coloring::new(res.witness),
    })
}

/// Polynomial test for `vsrc(g) <= 2`: the conflict graph is bipartite.
pub fn decide_vsrc2(g: &Graph) -> bool {
    is_bipartite(&build_conflict_graph(g)).is_bipartite()
}

/// Checks `Δ(g) <= k·t` and `n <= (k·t)^k` with `t = max_clique`, the
/// clique-size instantiation of the treewidth bound for graphs with
/// `vsrc(g) = k`.
pub fn check_twbound_consistency(g: &Graph, k: usize, max_clique: usize) -> bool {
    let kt = k.saturating_mul(max_clique);
    let n_bound = u32::try_from(k)
        .ok()
        .and_then(|e| kt.checked_pow(e))
        .unwrap_or(usize::MAX);
    g.max_degree() <= kt && g.n() <= n_bound
}
