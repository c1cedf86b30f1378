//! Graph thickness toolkit.
//!
//! The thickness of a graph is the minimum number of planar spanning
//! subgraphs whose edge sets partition its edge set. This crate provides:
//!
//! - a simple undirected graph type with generators for the standard
//!   test families (complete, complete bipartite, hypercube);
//! - planarity testing (left-right criterion), incremental sessions,
//!   embedding witnesses and non-planar obstructions;
//! - exact thickness via branch-and-bound edge partitioning, a greedy
//!   upper-bound heuristic, counting lower bounds, and certificates;
//! - the four graph amalgamations (vertex, two-vertex, edge, bar) with
//!   explicit vertex relabeling maps;
//! - composers that turn planar decompositions of two operands into a
//!   planar decomposition of their amalgamation, with size guarantees;
//! - seeded verification campaigns that check the composed bounds
//!   against exact thickness on generated instances.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature additionally enables wall-clock budgets for the exact solver.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod amalgamation;
pub mod compose;
mod connectivity;
pub mod graph;
pub mod planarity;
pub mod thickness;
pub mod verify;

pub use amalgamation::{
    amalgamate, bar_amalgamate, edge_amalgamate, two_vertex_amalgamate, vertex_amalgamate,
    AmalgamationError, AmalgamationKind, AmalgamationResult, AmalgamationSpec, SpecParseError,
};
pub use graph::{
    disjoint_union, induced_relabel, make_complete, make_complete_bipartite, make_hypercube,
    Edge, Graph, GraphError, Operand, VertexMap,
};
pub use planarity::{
    check_planarity, check_planarity_with_witness, is_planar, Embedding, PlanaritySession,
    PlanarityVerdict, SessionError,
};
pub use compose::{
    compose, compose_bar, compose_edge, compose_two_vertex, compose_vertex, ComposeError,
    CompositionOutcome,
};
pub use thickness::{
    euler_lower_bound, exact_thickness, heuristic_thickness, thickness_oracle,
    validate_decomposition, Budget, CertificateStatus, DecompositionReport, GraphFamily,
    LowerBoundKind, PlanarDecomposition, SolveOutcome, ThicknessCertificate, ThicknessError,
};
pub use verify::{
    campaign_passes, check_instance, run_campaign, CampaignConfig, InstanceStatus, ThetaBounds,
    VerificationReport, VerifyError,
};
