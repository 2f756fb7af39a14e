//! Maximum clique by branch and bound with a greedy-coloring bound.

use crate::graph::Adjacency;

/// Result of a budgeted maximum-clique search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSearch {
    /// Largest clique found, ascending.
    pub clique: Vec<usize>,
    /// `true` when the search finished, so `clique` is maximum.
    pub exact: bool,
}

struct Search {
    adj: Vec<Vec<bool>>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

/// Largest clique of `h`, searching at most `budget` nodes.
///
/// When the budget runs out the best clique so far is returned with
/// `exact = false`; it is still a valid lower bound on the clique number.
pub fn max_clique<A: Adjacency + ?Sized>(h: &A, budget: u64) -> CliqueSearch {
    let n = h.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (u, row) in adj.iter_mut().enumerate() {
        for &w in h.neighbors(u) {
            row[w] = true;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));

    let mut s = Search {
        adj,
        best: Vec::new(),
        nodes: 0,
        budget,
    };
    s.best = s.greedy(&order);
    let exact = s.expand(&mut Vec::new(), order).is_ok();
    let mut clique = s.best;
    clique.sort_unstable();
    CliqueSearch { clique, exact }
}

impl Search {
    fn greedy(&self, order: &[usize]) -> Vec<usize> {
        let mut clique: Vec<usize> = Vec::new();
        for &v in order {
            if clique.iter().all(|&u| self.adj[u][v]) {
                clique.push(v);
            }
        }
        clique
    }

    /// Orders `p` by greedy color class; returns the order and, per
    /// position, the number of classes up to it.
    fn color_sort(&self, p: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in p {
            match classes
                .iter_mut()
                .find(|cls| cls.iter().all(|&u| !self.adj[u][v]))
            {
                Some(cls) => cls.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(p.len());
        let mut bound = Vec::with_capacity(p.len());
        for (i, cls) in classes.into_iter().enumerate() {
            bound.extend(std::iter::repeat_n(i + 1, cls.len()));
            order.extend(cls);
        }
        (order, bound)
    }

    fn expand(&mut self, r: &mut Vec<usize>, p: Vec<usize>) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let (order, bound) = self.color_sort(&p);
        for i in (0..order.len()).rev() {
            if r.len() + bound[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            r.push(v);
            let next: Vec<usize> = order[..i]
                .iter()
                .copied()
                .filter(|&w| self.adj[v][w])
                .collect();
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, next)?;
            }
            r.pop();
        }
        Ok(())
    }
}
