//! Circular-arc graphs through their clockwise-endpoint representation.

use serde::{Deserialize, Serialize};

use super::{coloring_from_intersection_rep, BoundsError, IntersectionRep};
use crate::conflict::Coloring;
use crate::graph::{Adjacency, Graph, SimpleGraph};

/// Closed arc running clockwise from `start` to `end`, in degrees. Angles
/// are taken modulo 360; `start == end` is a single point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub start: f64,
    pub end: f64,
}

impl Arc {
    fn contains(&self, angle: f64) -> bool {
        let len = (self.end - self.start).rem_euclid(360.0);
        (angle - self.start).rem_euclid(360.0) <= len
    }

    fn meets(&self, other: &Arc) -> bool {
        self.contains(other.start) || other.contains(self.start)
    }
}

pub fn arc_intersection_graph(arcs: &[Arc]) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = (0..arcs.len())
        .flat_map(|u| (u + 1..arcs.len()).map(move |v| (u, v)))
        .filter(|&(u, v)| arcs[u].meets(&arcs[v]))
        .collect();
    SimpleGraph::from_edges(arcs.len(), &edges).expect("pairs are distinct")
}

/// Universe: the clockwise endpoint of every arc. Each vertex holds the
/// endpoints its arc contains; at most `n` colors.
pub fn circular_arc_coloring(arcs: &[Arc], g: &Graph) -> Result<Coloring, BoundsError> {
    if arcs.len() != g.n() {
        return Err(BoundsError::ArcCount {
            arcs: arcs.len(),
            vertices: g.n(),
        });
    }
    for u in 0..arcs.len() {
        for v in u + 1..arcs.len() {
            let adjacent = g.has_edge(u, v);
            if adjacent != arcs[u].meets(&arcs[v]) {
                return Err(BoundsError::ArcMismatch { u, v, adjacent });
            }
        }
    }
    let sets = arcs
        .iter()
        .map(|a| {
            (0..arcs.len())
                .filter(|&x| a.contains(arcs[x].end))
                .collect()
        })
        .collect();
    let rep = IntersectionRep {
        universe: (0..arcs.len()).map(|x| format!("end{x}")).collect(),
        sets,
    };
    coloring_from_intersection_rep(g, &rep)
}
