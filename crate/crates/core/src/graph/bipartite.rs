use std::collections::VecDeque;

use super::Adjacency;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `side[v]` is the class of `v`.
    Bipartite { side: Vec<bool> },
    /// An odd cycle, as a vertex sequence whose last vertex is adjacent to
    /// the first.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// BFS two-coloring of every component.
pub fn is_bipartite<A: Adjacency + ?Sized>(g: &A) -> Bipartiteness {
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if depth[w] % 2 == depth[u] % 2 {
                    return Bipartiteness::OddCycle(odd_cycle(&depth, &parent, u, w));
                }
            }
        }
    }
    Bipartiteness::Bipartite {
        side: depth.iter().map(|d| d % 2 == 1).collect(),
    }
}

fn odd_cycle(depth: &[usize], parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
