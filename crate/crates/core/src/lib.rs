//! Very strong rainbow colorings (VSRC) of graphs.
//!
//! An edge coloring is *very strongly rainbow* when every shortest path
//! between every pair of vertices sees pairwise distinct colors on its
//! edges. This crate computes, bounds, constructs and verifies such
//! colorings:
//!
//! * [`graph`]: graph representation, edge-list parsing, BFS distances,
//!   block decomposition and cactus recognition.
//! * [`conflict`]: the conflict relation between edges, the conflict graph
//!   and the coloring verifier.
//! * [`exact`]: exact chromatic number engines and the exact `vsrc` solver.
//! * [`cactus`]: the polynomial-time optimal algorithm for cactus graphs.
//! * [`bounds`]: constructive upper bounds from clique structures and
//!   certified lower bounds.
//! * [`instances`]: seeded instance generators and the 3-coloring reduction.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod cactus;
pub mod conflict;
pub mod exact;
pub mod graph;
pub mod instances;

pub use conflict::{Coloring, ConflictGraph, VerificationReport};
pub use graph::{Adjacency, DistanceMatrix, Graph, GraphError, SimpleGraph};
