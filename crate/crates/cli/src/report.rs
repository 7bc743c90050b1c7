//! JSON documents. Rationals are written as `{numerator, denominator,
//! decimal}`; the decimal is a 6-significant-digit rendering for people and
//! is never read back for comparisons.

use std::collections::BTreeMap;

use proxrem_core::bounds::CheckResult;
use proxrem_core::constructions::{NoteStatus, ValidationNote};
use proxrem_core::metrics::ClassFlags;
use proxrem_core::search::{BoundTally, ScanSummary};
use proxrem_core::{InvariantReport, Rational};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub numerator: i128,
    pub denominator: i128,
    pub decimal: String,
}

impl From<Rational> for JsonRational {
    fn from(r: Rational) -> Self {
        Self { numerator: *r.numer(), denominator: *r.denom(), decimal: decimal6(r) }
    }
}

impl JsonRational {
    pub fn value(&self) -> Rational {
        Rational::new(self.numerator, self.denominator)
    }
}

/// `r` rounded to 6 significant digits, trailing zeros dropped.
pub fn decimal6(r: Rational) -> String {
    let x = *r.numer() as f64 / *r.denom() as f64;
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let places = (5 - magnitude).max(0) as usize;
    let s = format!("{x:.places$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphDescriptor {
    Family { name: String, parameters: BTreeMap<String, usize> },
    File { path: String, index: usize },
}

impl std::fmt::Display for GraphDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphDescriptor::Family { name, parameters } => {
                let params: Vec<String> = parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                write!(f, "{name}({})", params.join(", "))
            }
            GraphDescriptor::File { path, index } => write!(f, "{path}#{index}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub triangle_free: bool,
    pub c4_free: bool,
    pub min_ball2: usize,
}

impl From<ClassFlags> for ClassDoc {
    fn from(c: ClassFlags) -> Self {
        Self { triangle_free: c.triangle_free, c4_free: c.c4_free, min_ball2: c.min_ball2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub id: String,
    pub applicable: bool,
    pub lhs: Option<JsonRational>,
    pub rhs: Option<JsonRational>,
    pub slack: Option<JsonRational>,
    pub holds: bool,
    pub tight: bool,
}

impl From<&CheckResult> for CheckDoc {
    fn from(r: &CheckResult) -> Self {
        Self {
            id: r.id.clone(),
            applicable: r.applicable,
            lhs: r.lhs.map(Into::into),
            rhs: r.rhs.map(Into::into),
            slack: r.slack.map(Into::into),
            holds: r.holds,
            tight: r.tight,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoteDoc {
    pub claim: String,
    pub value: String,
    pub status: String,
}

impl From<&ValidationNote> for NoteDoc {
    fn from(n: &ValidationNote) -> Self {
        let status = match n.status {
            NoteStatus::Verified => "verified",
            NoteStatus::Measured => "measured",
            NoteStatus::Advisory => "advisory",
        };
        Self { claim: n.claim.clone(), value: n.value.clone(), status: status.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub graph: GraphDescriptor,
    pub order: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub proximity: JsonRational,
    pub remoteness: JsonRational,
    pub average_distance: JsonRational,
    pub diameter: u32,
    pub radius: u32,
    pub median_vertices: Vec<usize>,
    pub margin_vertices: Vec<usize>,
    pub center_vertices: Vec<usize>,
    pub total_distance: Vec<u64>,
    pub eccentricity: Vec<u32>,
    pub classes: Option<ClassDoc>,
    pub checks: Vec<CheckDoc>,
    pub notes: Vec<NoteDoc>,
}

impl ReportDocument {
    pub fn new(graph: GraphDescriptor, report: &InvariantReport) -> Self {
        Self {
            tool_version: TOOL_VERSION.into(),
            graph,
            order: report.order,
            edge_count: report.edge_count,
            min_degree: report.min_degree,
            proximity: report.proximity.into(),
            remoteness: report.remoteness.into(),
            average_distance: report.average_distance.into(),
            diameter: report.diameter,
            radius: report.radius,
            median_vertices: report.median_vertices.clone(),
            margin_vertices: report.margin_vertices.clone(),
            center_vertices: report.center_vertices.clone(),
            total_distance: report.total_distance.clone(),
            eccentricity: report.eccentricity.clone(),
            classes: report.classes.map(Into::into),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_checks(mut self, checks: &[CheckResult]) -> Self {
        self.checks = checks.iter().map(Into::into).collect();
        self
    }

    pub fn with_notes(mut self, notes: &[ValidationNote]) -> Self {
        self.notes = notes.iter().map(Into::into).collect();
        self
    }

    pub fn violations(&self) -> usize {
        self.checks.iter().filter(|c| !c.holds).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub slack: JsonRational,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TallyDoc {
    pub id: String,
    pub applicable: usize,
    pub violations: usize,
    pub violating: Vec<String>,
    pub tight: Vec<String>,
    pub min_slack: Option<WitnessDoc>,
}

impl From<&BoundTally> for TallyDoc {
    fn from(t: &BoundTally) -> Self {
        Self {
            id: t.id.clone(),
            applicable: t.applicable,
            violations: t.violations,
            violating: t.violating.clone(),
            tight: t.tight.clone(),
            min_slack: t.min_slack.as_ref().map(|w| WitnessDoc { slack: w.slack.into(), graph6: w.graph6.clone() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanDocument {
    pub tool_version: String,
    pub corpus: String,
    pub scanned: usize,
    pub skipped: usize,
    pub bounds: Vec<TallyDoc>,
}

impl From<&ScanSummary> for ScanDocument {
    fn from(s: &ScanSummary) -> Self {
        Self {
            tool_version: TOOL_VERSION.into(),
            corpus: s.corpus.clone(),
            scanned: s.scanned,
            skipped: s.skipped,
            bounds: s.bounds.iter().map(Into::into).collect(),
        }
    }
}
