//! Degree-preserving shrinking of hypertrees.
//!
//! A hypertree on `n` vertices can be *shrunk*: one pair of vertices is
//! chosen from each hyperedge so that the pairs form a spanning tree. This
//! crate computes shrinkings in which every vertex keeps a fixed fraction of
//! its degree, `d_T(v) >= max(1, floor(d_H(v) / k))` for rank `k`, using two
//! reusable engines:
//!
//! * [`orientation`]: orient hyperedges to meet per-vertex indegree demands
//!   (bipartite matching, with a Hall violator when impossible);
//! * [`rainbow`]: rainbow spanning trees of edge-coloured graphs via
//!   graphic/partition matroid intersection.
//!
//! [`shrink`] chains them, [`recognition`] decides hypertree membership and
//! [`gen`] builds seeded instances. The crate is `no_std` and only needs
//! `alloc`.
#![no_std]

extern crate alloc;

pub mod dsu;
pub mod gen;
pub mod hypergraph;
pub mod matching;
pub mod orientation;
pub mod rainbow;
pub mod recognition;
pub mod shrink;

pub use hypergraph::{
    validate, DemandFunction, DirectedHypergraph, Hypergraph, ValidationReport, Violation,
};
pub use orientation::{floor_demand, orient_floor, orient_with_demands, OrientationResult};
pub use rainbow::{
    check_rainbow_condition, clique_graph, rainbow_spanning_tree, star_graph, ColouredGraph,
    RainbowCondition, RainbowTree,
};
pub use recognition::{is_hypertree, is_hypertree_bruteforce, Recognition};
pub use shrink::{
    brute_force_shrink, shrink_hypertree, shrink_hypertree_with_k, verify_shrinking, ShrinkError,
    Shrinking, VerificationReport,
};
