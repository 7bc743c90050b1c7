#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::needless_range_loop)]

//! # proxrem-core
//!
//! Exact distance invariants of connected graphs (proximity, remoteness,
//! diameter, radius), triangle and 4-cycle detection, the extremal graph
//! families that show the triangle-free and C4-free proximity bounds are
//! sharp, and a catalog of those bounds as checkable data.
//!
//! The crate only needs `alloc`. The `std` feature (on by default) adds
//! `std::error::Error` plumbing through `core::error`; the `parallel`
//! feature fans the per-source BFS out over rayon.

extern crate alloc;

/// Undirected simple graphs in compressed adjacency form, plus builders.
pub mod graph;
/// Per-source BFS, total distances and the invariant report.
pub mod metrics;
/// Triangle / 4-cycle witnesses and the second-neighbourhood ball lemma.
pub mod forbidden;
/// Finite fields, polarity graphs and the layered extremal families.
pub mod constructions;
/// Bound catalog and exact evaluation.
pub mod bounds;
/// Small-graph enumeration, Floyd–Warshall oracle and corpus scans.
pub mod search;
/// The graph6 text encoding.
pub mod graph6;

pub use graph::{Graph, GraphError, LayerPlan, Link, VertexId};
pub use metrics::{invariant_report, InvariantReport, MetricsError, Rational};

#[cfg(test)]
pub(crate) mod testutil;
