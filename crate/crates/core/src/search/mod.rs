//! Small-graph enumeration, a Floyd–Warshall distance oracle, and corpus
//! scans of the bound catalog.

use thiserror::Error;

mod canon;
mod enumerate;
mod oracle;
mod scan;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANON_ORDER};
pub use enumerate::{enumerate_connected, Extensions, Filter, MAX_ENUM_ORDER, MIN_ENUM_ORDER};
pub use oracle::{oracle_apsp, ORACLE_MAX_ORDER};
#[cfg(feature = "parallel")]
pub use scan::scan_parallel;
pub use scan::{scan, BoundTally, ScanSummary, SlackWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} is outside the supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
    #[error("vertex {unreached} is unreachable from {origin}")]
    Disconnected { origin: usize, unreached: usize },
}
