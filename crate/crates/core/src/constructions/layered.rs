//! The triangle-free layered family `G_{δ,k}` and its padded variant
//! `G^n_{δ,k}`.
//!
//! `G_{δ,k}` is the sequential sum of edgeless layers with sizes
//!
//! ```text
//! [1, δ, δ−1, 1] [1, δ−1, δ−1, 1]^(k−2) [1, δ−1, δ, 1]
//! ```
//!
//! The closing block is the mirror of the opening one; with it every
//! vertex has degree at least δ and the median and margin totals equal
//! `2δk² + 4k − 3` and `(2δk + 2)(2k − 1/2)`.

use alloc::format;
use alloc::vec::Vec;

use super::{expect_eq, ConstructionError, ValidationNote};
use crate::forbidden::find_triangle;
use crate::graph::{Graph, LayerPlan, VertexId};
use crate::metrics::{invariant_report, InvariantReport, Rational};

/// Layer sizes of `G_{δ,k}`.
pub fn layer_sizes(delta: usize, k: usize) -> Vec<usize> {
    let mut sizes = Vec::with_capacity(4 * k);
    sizes.extend([1, delta, delta - 1, 1]);
    for _ in 0..k.saturating_sub(2) {
        sizes.extend([1, delta - 1, delta - 1, 1]);
    }
    sizes.extend([1, delta - 1, delta, 1]);
    sizes
}

/// Measured total distance against a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reconciliation {
    pub measured: Rational,
    pub formula: Rational,
}

impl Reconciliation {
    pub fn difference(&self) -> Rational {
        self.measured - self.formula
    }
}

#[derive(Debug, Clone)]
pub struct LayeredExtremal {
    pub delta: usize,
    pub k: usize,
    pub graph: Graph,
    pub plan: LayerPlan,
    pub layer_of: Vec<usize>,
    pub report: InvariantReport,
    /// σ(median) against `2δk² + 4k − 3`.
    pub median_total: Reconciliation,
    /// σ(margin) against `(2δk + 2)(2k − 1/2)`.
    pub margin_total: Reconciliation,
    /// Set for odd `k`, where the closed forms are not claimed.
    pub parity_advisory: bool,
    pub notes: Vec<ValidationNote>,
}

fn check_params(delta: usize, k: usize) -> Result<(), ConstructionError> {
    if delta < 3 {
        return Err(ConstructionError::Parameter(format!("layered family needs δ ≥ 3, got {delta}")));
    }
    if k < 2 {
        return Err(ConstructionError::Parameter(format!("layered family needs k ≥ 2, got {k}")));
    }
    Ok(())
}

fn validate_shape(
    notes: &mut Vec<ValidationNote>,
    g: &Graph,
    report: &InvariantReport,
    delta: usize,
    k: usize,
    order: usize,
) -> Result<(), ConstructionError> {
    expect_eq(notes, "order".into(), order, g.order())?;
    expect_eq(notes, "minimum degree δ".into(), delta, g.min_degree())?;
    if let Some(w) = find_triangle(g) {
        return Err(ConstructionError::Integrity(format!("contains the triangle {:?}", w.vertices)));
    }
    notes.push(ValidationNote::verified("triangle-free", "true".into()));
    expect_eq(notes, "diameter 4k−1".into(), 4 * k - 1, report.diameter as usize)?;
    expect_eq(notes, "radius 2k".into(), 2 * k, report.radius as usize)?;
    Ok(())
}

pub fn layered_extremal(delta: usize, k: usize) -> Result<LayeredExtremal, ConstructionError> {
    check_params(delta, k)?;
    let plan = LayerPlan::new(layer_sizes(delta, k))?;
    let (graph, layer_of) = Graph::sequential_sum(&plan);
    let report = invariant_report(&graph).map_err(|e| ConstructionError::Integrity(format!("G_{{{delta},{k}}}: {e}")))?;

    let mut notes = Vec::new();
    validate_shape(&mut notes, &graph, &report, delta, k, 2 * k * delta + 2)?;

    let (d, kk) = (delta as i128, k as i128);
    let median_total = Reconciliation {
        measured: Rational::from(i128::from(report.min_total_distance())),
        formula: Rational::from(2 * d * kk * kk + 4 * kk - 3),
    };
    let margin_total = Reconciliation {
        measured: Rational::from(i128::from(report.max_total_distance())),
        formula: Rational::from(2 * d * kk + 2) * (Rational::from(2 * kk) - Rational::new(1, 2)),
    };
    let parity_advisory = k % 2 == 1;
    let note = |claim: &str, r: &Reconciliation| {
        let value = format!("measured {}, formula {}, difference {}", r.measured, r.formula, r.difference());
        if parity_advisory {
            ValidationNote::advisory(claim, value)
        } else {
            ValidationNote::measured(claim, value)
        }
    };
    notes.push(note("σ(median) vs 2δk²+4k−3", &median_total));
    notes.push(note("σ(margin) vs (2δk+2)(2k−1/2)", &margin_total));
    notes.push(ValidationNote::measured("π", format!("{}", report.proximity)));
    notes.push(ValidationNote::measured("ρ", format!("{}", report.remoteness)));

    Ok(LayeredExtremal {
        delta,
        k,
        graph,
        plan,
        layer_of,
        report,
        median_total,
        margin_total,
        parity_advisory,
        notes,
    })
}

/// `G^n_{δ,k}`: `G_{δ,k}` plus `n − n₀` twins of `w`, the lowest-index
/// neighbour of the lowest-index median `u`.
#[derive(Debug, Clone)]
pub struct PaddedLayered {
    pub base: LayeredExtremal,
    pub graph: Graph,
    pub report: InvariantReport,
    pub u: VertexId,
    pub w: VertexId,
    pub notes: Vec<ValidationNote>,
}

pub fn layered_extremal_padded(delta: usize, k: usize, n: usize) -> Result<PaddedLayered, ConstructionError> {
    check_params(delta, k)?;
    let n0 = 2 * k * delta + 2;
    if n < n0 {
        return Err(ConstructionError::Parameter(format!("target order {n} is below n₀ = 2kδ+2 = {n0}")));
    }
    let base = layered_extremal(delta, k)?;
    let u = base.report.median();
    let w = base.graph.neighbors(u)[0] as usize;
    let graph = base.graph.add_twins(w, n - n0)?;
    let report =
        invariant_report(&graph).map_err(|e| ConstructionError::Integrity(format!("G^{n}_{{{delta},{k}}}: {e}")))?;

    let mut notes = Vec::new();
    validate_shape(&mut notes, &graph, &report, delta, k, n)?;
    if !report.median_vertices.contains(&u) {
        return Err(ConstructionError::Integrity(format!("vertex {u} is no longer a median")));
    }
    notes.push(ValidationNote::verified("u is still a median", format!("u = {u}")));
    let expected = base.report.total_distance[u] + (n - n0) as u64;
    if report.total_distance[u] != expected {
        return Err(ConstructionError::Integrity(format!(
            "σ(u) = {}, expected σ_G(u) + n − n₀ = {expected}",
            report.total_distance[u]
        )));
    }
    notes.push(ValidationNote::verified("σ(u) = σ_{G_{δ,k}}(u) + n − n₀", format!("{expected}")));
    notes.push(ValidationNote::measured("π", format!("{}", report.proximity)));

    Ok(PaddedLayered { base, graph, report, u, w, notes })
}
