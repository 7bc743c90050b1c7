//! Extremal graph families.
//!
//! Every constructor validates the structural claims it relies on (order,
//! minimum degree, class membership, diameter, radius) with the metrics and
//! forbidden-subgraph modules and fails with
//! [`ConstructionError::Integrity`] instead of returning an unchecked graph.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::GraphError;

pub mod family;
pub mod field;
pub mod layered;
pub mod polarity;

pub use family::{build_family, Built, Family};
pub use field::{make_field, FieldElement, FieldError, FiniteField};
pub use layered::{layer_sizes, layered_extremal, layered_extremal_padded, LayeredExtremal, PaddedLayered, Reconciliation};
pub use polarity::{
    chain, polarity_graph, projective_points, puncture, select_puncture_points, PolarityChain, PolarityGraph,
    ProjectivePoint, PuncturedPolarity,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("construction integrity check failed: {0}")]
    Integrity(String),
}

impl ConstructionError {
    pub(crate) fn integrity(msg: String) -> Self {
        Self::Integrity(msg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoteStatus {
    /// Claim checked and holds.
    Verified,
    /// Reported value only; no claim attached.
    Measured,
    /// Claim outside the parameter range where it is asserted.
    Advisory,
}

/// One line of a construction's validation log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationNote {
    pub claim: String,
    pub value: String,
    pub status: NoteStatus,
}

impl ValidationNote {
    pub fn verified(claim: &str, value: String) -> Self {
        Self { claim: claim.into(), value, status: NoteStatus::Verified }
    }

    pub fn measured(claim: &str, value: String) -> Self {
        Self { claim: claim.into(), value, status: NoteStatus::Measured }
    }

    pub fn advisory(claim: &str, value: String) -> Self {
        Self { claim: claim.into(), value, status: NoteStatus::Advisory }
    }
}

impl fmt::Display for ValidationNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            NoteStatus::Verified => "ok",
            NoteStatus::Measured => "measured",
            NoteStatus::Advisory => "advisory",
        };
        write!(f, "[{tag}] {}: {}", self.claim, self.value)
    }
}

pub(crate) fn expect_eq(
    notes: &mut Vec<ValidationNote>,
    claim: String,
    expected: usize,
    actual: usize,
) -> Result<(), ConstructionError> {
    if expected != actual {
        return Err(ConstructionError::Integrity(alloc::format!("{claim}: expected {expected}, measured {actual}")));
    }
    notes.push(ValidationNote { claim, value: alloc::format!("{actual}"), status: NoteStatus::Verified });
    Ok(())
}
