//! Spanning-tree lower bounds for k-chromatic graphs.
//!
//! Every connected graph with chromatic number `k` has at least `k^(k-2)`
//! spanning trees. This crate counts spanning trees exactly, computes
//! chromatic numbers exactly, builds explicit witness families of distinct
//! spanning trees by following the inductive argument case by case, and
//! recognizes the extremal graphs (complete graphs with pendant trees hung
//! off them) where the bound is attained.
//!
//! The [`harness`] module ties these together for corpus ingestion and
//! exhaustive sweeps; the `treebound` binary is a thin CLI on top.

pub mod chromatic;
pub mod error;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod harness;
pub mod tree_count;
pub mod witness;

pub use chromatic::{chromatic_number, is_k_colorable, Coloring};
pub use error::{Error, Result};
pub use extremal::{generate_extremal, recognize_extremal, ExtremalCertificate, PendantSpec};
pub use format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use graph::{ContractionResult, Edge, Graph, Piece};
pub use harness::{
    builtin_source, enumerate_connected_graphs, graph6_source, sweep, verify_bound, OutputStyle,
    SweepMode, SweepOptions, SweepSummary, VerificationRecord,
};
pub use tree_count::{
    cayley_complete_trees, count_spanning_trees, count_spanning_trees_bruteforce,
    enumerate_spanning_trees, BigCount, CayleyTrees, SpanningTree,
};
pub use witness::{bound, construct_witnesses, lift_tree, Case, WitnessSet, WitnessTree};
