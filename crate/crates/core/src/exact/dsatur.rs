//! Exact chromatic number: DSATUR-ordered branch and bound.
//!
//! Lower bound: the larger of a maximum clique and `ceil(n / alpha)` when the
//! independence number `alpha` is known exactly. Upper bound: greedy DSATUR.
//! The clique is precolored `0..omega` to break color symmetry.

use serde::Serialize;

use super::clique::max_clique;
use super::ExactError;
use crate::graph::{complement_of, Adjacency};

const NONE: usize = usize::MAX;

/// An optimal proper vertex coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chi: usize,
    /// Color of each vertex, numbered by first appearance in vertex order.
    pub witness: Vec<usize>,
}

/// Renumbers colors by first appearance in vertex order.
pub(crate) fn canonical(colors: &[usize]) -> Vec<usize> {
    let mut map = vec![NONE; colors.iter().copied().max().map_or(0, |c| c + 1)];
    let mut next = 0;
    colors
        .iter()
        .map(|&c| {
            if map[c] == NONE {
                map[c] = next;
                next += 1;
            }
            map[c]
        })
        .collect()
}

/// Clique-based and independence-based lower bounds, each search capped at
/// `budget` nodes.
pub(crate) fn lower_bound<A: Adjacency + ?Sized>(h: &A, budget: u64) -> (usize, Vec<usize>) {
    let n = h.vertex_count();
    let clique = max_clique(h, budget).clique;
    let mut lower = clique.len();
    if n > 0 && clique.len() > 1 {
        let alpha = max_clique(&complement_of(h), budget);
        if alpha.exact {
            lower = lower.max(n.div_ceil(alpha.clique.len()));
        }
    }
    (lower, clique)
}

struct State<'a, A: Adjacency + ?Sized> {
    h: &'a A,
    color: Vec<usize>,
    /// `counts[v][c]`: neighbors of `v` holding color `c`.
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    free_degree: Vec<usize>,
}

impl<'a, A: Adjacency + ?Sized> State<'a, A> {
    fn new(h: &'a A, max_colors: usize) -> Self {
        let n = h.vertex_count();
        State {
            h,
            color: vec![NONE; n],
            counts: vec![vec![0; max_colors]; n],
            sat: vec![0; n],
            free_degree: (0..n).map(|v| h.degree(v)).collect(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &w in self.h.neighbors(v) {
            if self.counts[w][c] == 0 {
                self.sat[w] += 1;
            }
            self.counts[w][c] += 1;
            self.free_degree[w] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = NONE;
        for &w in self.h.neighbors(v) {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] -= 1;
            }
            self.free_degree[w] += 1;
        }
    }

    /// Uncolored vertex with maximum saturation, then maximum uncolored
    /// degree, then smallest index.
    fn select(&self) -> Option<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v] == NONE)
            .max_by_key(|&v| (self.sat[v], self.free_degree[v], std::cmp::Reverse(v)))
    }
}

struct Search<'a, A: Adjacency + ?Sized> {
    state: State<'a, A>,
    lower: usize,
    best: usize,
    best_colors: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<A: Adjacency + ?Sized> Search<'_, A> {
    fn run(&mut self, used: usize) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if used >= self.best {
            return Ok(());
        }
        let Some(v) = self.state.select() else {
            self.best = used;
            self.best_colors = self.state.color.clone();
            return Ok(());
        };
        for c in 0..used {
            if self.state.counts[v][c] == 0 {
                self.state.assign(v, c);
                let r = self.run(used);
                self.state.unassign(v);
                r?;
                if self.best <= self.lower || used >= self.best {
                    return Ok(());
                }
            }
        }
        if used + 1 < self.best {
            self.state.assign(v, used);
            let r = self.run(used + 1);
            self.state.unassign(v);
            r?;
        }
        Ok(())
    }
}

fn greedy_dsatur<A: Adjacency + ?Sized>(h: &A) -> Vec<usize> {
    let n = h.vertex_count();
    let mut state = State::new(h, n.max(1));
    while let Some(v) = state.select() {
        let c = (0..n)
            .find(|&c| state.counts[v][c] == 0)
            .expect("n colors suffice");
        state.assign(v, c);
    }
    state.color
}

/// Exact chromatic number of `h` with a witness coloring.
///
/// `budget` caps the number of branch-and-bound nodes (the two bound
/// searches get the same cap each). On exhaustion the error reports the best
/// bounds and the best coloring found.
pub fn chromatic_number<A: Adjacency + ?Sized>(
    h: &A,
    budget: u64,
) -> Result<ChromaticResult, ExactError> {
    let n = h.vertex_count();
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            witness: Vec::new(),
        });
    }
    let greedy = canonical(&greedy_dsatur(h));
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    let (lower, clique) = lower_bound(h, budget);
    if lower >= upper {
        return Ok(ChromaticResult {
            chi: upper,
            witness: greedy,
        });
    }

    let mut search = Search {
        state: State::new(h, upper),
        lower,
        best: upper,
        best_colors: greedy,
        nodes: 0,
        budget,
    };
    for (c, &v) in clique.iter().enumerate() {
        search.state.assign(v, c);
    }
    let finished = search.run(clique.len()).is_ok();
    let witness = canonical(&search.best_colors);
    if finished {
        Ok(ChromaticResult {
            chi: search.best,
            witness,
        })
    } else {
        Err(ExactError::BudgetExceeded {
            lower,
            upper: search.best,
            best: witness,
        })
    }
}
