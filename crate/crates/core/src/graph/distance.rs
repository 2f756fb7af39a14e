use std::collections::VecDeque;

use super::Adjacency;

/// Hop-count distances between every pair of vertices.
///
/// Unreachable pairs hold [`DistanceMatrix::UNREACHABLE`]; this never
/// happens for a connected [`super::Graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance; 0 for graphs with fewer than two vertices.
    pub fn diameter(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != Self::UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    /// A shortest path from `s` to `t`, always stepping to the smallest-label
    /// neighbor that is one hop closer to `t`.
    pub fn shortest_path<A: Adjacency + ?Sized>(&self, g: &A, s: usize, t: usize) -> Vec<usize> {
        assert_ne!(
            self.get(s, t),
            Self::UNREACHABLE,
            "{s} and {t} are disconnected"
        );
        let mut path = vec![s];
        let mut cur = s;
        while cur != t {
            let want = self.get(cur, t) - 1;
            cur = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| self.get(w, t) == want)
                .expect("distance matrix is consistent with the graph");
            path.push(cur);
        }
        path
    }
}

/// Single-source BFS distances.
pub(crate) fn bfs<A: Adjacency + ?Sized>(g: &A, source: usize) -> Vec<u32> {
    let mut dist = vec![DistanceMatrix::UNREACHABLE; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == DistanceMatrix::UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// BFS from every vertex; `O(n·m)` total.
pub fn all_pairs_distances<A: Adjacency + ?Sized>(g: &A) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n {
        dist.extend(bfs(g, s));
    }
    DistanceMatrix { n, dist }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, SimpleGraph};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn path_p3() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.diameter(), 2);
        assert_eq!(d.shortest_path(&g, 2, 0), vec![2, 1, 0]);
    }

    #[test]
    fn cycle_distances() {
        let d = all_pairs_distances(&cycle(5));
        assert_eq!(d.get(1, 4), 2);
        for n in 3..12 {
            let d = all_pairs_distances(&cycle(n));
            for k in 0..n {
                assert_eq!(d.get(0, k) as usize, k.min(n - k));
            }
        }
    }

    #[test]
    fn complete_graph_k4() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = all_pairs_distances(&g);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn unreachable_pairs_are_marked() {
        let g = SimpleGraph::from_edges(3, &[(0, 1)]).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), DistanceMatrix::UNREACHABLE);
        assert_eq!(d.diameter(), 1);
    }
}
