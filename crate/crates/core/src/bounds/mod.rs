//! Published proximity / remoteness bounds as data, evaluated exactly.
//!
//! Each [`BoundSpec`] is `lhs ≤ rhs` or `lhs ≥ rhs` over the invariants of
//! an [`InvariantReport`], guarded by hypotheses on `n`, `δ` and the graph
//! class. Evaluation is in exact rationals, so `tight` means equality.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::metrics::{invariant_report, InvariantReport, MetricsError, Rational};

mod catalog;
pub mod expr;

pub use catalog::catalog;
pub use expr::{Env, EvalError, Expr, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassRequirement {
    Any,
    TriangleFree,
    C4Free,
}

impl fmt::Display for ClassRequirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassRequirement::Any => "connected",
            ClassRequirement::TriangleFree => "triangle-free",
            ClassRequirement::C4Free => "C4-free",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    AtMost,
    AtLeast,
}

impl Direction {
    pub fn symbol(self) -> &'static str {
        match self {
            Direction::AtMost => "≤",
            Direction::AtLeast => "≥",
        }
    }
}

/// Side conditions that do not fit the `n ≥ a, δ ≥ b` shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtraHypothesis {
    /// `δ < n/4 − 1`
    DeltaBelowQuarterOrderMinusOne,
}

impl ExtraHypothesis {
    fn holds(self, order: usize, min_degree: usize) -> bool {
        match self {
            // δ < n/4 − 1  ⇔  4δ + 4 < n
            ExtraHypothesis::DeltaBelowQuarterOrderMinusOne => 4 * min_degree + 4 < order,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypotheses {
    pub min_n: usize,
    pub min_delta: usize,
    pub extra: Option<ExtraHypothesis>,
}

impl fmt::Display for Hypotheses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.min_n > 2 {
            parts.push(alloc::format!("n ≥ {}", self.min_n));
        }
        if self.min_delta > 1 {
            parts.push(alloc::format!("δ ≥ {}", self.min_delta));
        }
        if let Some(ExtraHypothesis::DeltaBelowQuarterOrderMinusOne) = self.extra {
            parts.push("δ < n/4 − 1".to_string());
        }
        if parts.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundSpec {
    pub id: &'static str,
    pub description: &'static str,
    pub class: ClassRequirement,
    pub hypotheses: Hypotheses,
    pub lhs: Expr,
    pub rhs: Expr,
    pub direction: Direction,
}

impl BoundSpec {
    /// The inequality as text, e.g. `ρ − π ≤ (n + 1)/(2·δ) + 4`.
    pub fn statement(&self) -> String {
        alloc::format!("{} {} {}", self.lhs, self.direction.symbol(), self.rhs)
    }

    fn needs_classes(&self) -> bool {
        self.class != ClassRequirement::Any || self.lhs.mentions(Var::MinBall2) || self.rhs.mentions(Var::MinBall2)
    }
}

/// Outcome of one bound on one graph. `lhs`, `rhs` and `slack` are `None`
/// when the bound does not apply; `holds` is then vacuously true.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub applicable: bool,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    /// Non-negative iff the bound holds.
    pub slack: Option<Rational>,
    pub holds: bool,
    pub tight: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("unknown bound id `{0}`")]
    UnknownBound(String),
    #[error("bound {0} needs class flags; build the report with `with_classes`")]
    MissingClassFlags(&'static str),
    #[error("bound {id}: {source}")]
    Eval { id: &'static str, source: EvalError },
    #[error(transparent)]
    Metrics(#[from] MetricsError),
}

/// Whether the hypotheses of `bound` hold for `report`.
pub fn applies(bound: &BoundSpec, report: &InvariantReport) -> Result<bool, BoundError> {
    let h = &bound.hypotheses;
    let class_ok = match bound.class {
        ClassRequirement::Any => true,
        ClassRequirement::TriangleFree => report.classes.ok_or(BoundError::MissingClassFlags(bound.id))?.triangle_free,
        ClassRequirement::C4Free => report.classes.ok_or(BoundError::MissingClassFlags(bound.id))?.c4_free,
    };
    Ok(class_ok
        && report.order >= h.min_n
        && report.min_degree >= h.min_delta
        && h.extra.map_or(true, |x| x.holds(report.order, report.min_degree)))
}

pub fn evaluate(bound: &BoundSpec, report: &InvariantReport) -> Result<CheckResult, BoundError> {
    if bound.needs_classes() && report.classes.is_none() {
        return Err(BoundError::MissingClassFlags(bound.id));
    }
    if !applies(bound, report)? {
        return Ok(CheckResult {
            id: bound.id.to_string(),
            applicable: false,
            lhs: None,
            rhs: None,
            slack: None,
            holds: true,
            tight: false,
        });
    }
    let env = Env::from_report(report);
    let eval = |e: &Expr| e.eval(&env).map_err(|source| BoundError::Eval { id: bound.id, source });
    let lhs = eval(&bound.lhs)?;
    let rhs = eval(&bound.rhs)?;
    let slack = match bound.direction {
        Direction::AtMost => rhs - lhs,
        Direction::AtLeast => lhs - rhs,
    };
    let zero = Rational::from(0);
    Ok(CheckResult {
        id: bound.id.to_string(),
        applicable: true,
        lhs: Some(lhs),
        rhs: Some(rhs),
        slack: Some(slack),
        holds: slack >= zero,
        tight: slack == zero,
    })
}

/// Catalog entries for `ids`, or the whole catalog for `None`.
pub fn select(ids: Option<&[&str]>) -> Result<Vec<BoundSpec>, BoundError> {
    let all = catalog();
    let Some(ids) = ids else { return Ok(all) };
    ids.iter()
        .map(|id| {
            all.iter().find(|b| b.id == *id).cloned().ok_or_else(|| BoundError::UnknownBound((*id).to_string()))
        })
        .collect()
}

pub fn check_report(report: &InvariantReport, bounds: &[BoundSpec]) -> Result<Vec<CheckResult>, BoundError> {
    bounds.iter().map(|b| evaluate(b, report)).collect()
}

/// Measures `g` (with class flags) and checks the selected bounds.
pub fn check_graph(g: &Graph, ids: Option<&[&str]>) -> Result<Vec<CheckResult>, BoundError> {
    let bounds = select(ids)?;
    let report = invariant_report(g)?.with_classes(g);
    check_report(&report, &bounds)
}
