use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{
    chain, layered_extremal, layered_extremal_padded, make_field, polarity_graph, puncture, ConstructionError,
    ValidationNote,
};
use crate::graph::Graph;

/// A named family with its parameters, as addressed from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Layered { delta: usize, k: usize },
    LayeredPadded { delta: usize, k: usize, n: usize },
    Polarity { q: usize },
    Puncture { q: usize },
    Chain { q: usize, k: usize },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
}

pub const FAMILY_NAMES: [&str; 8] = ["layered", "layered-padded", "polarity", "puncture", "chain", "path", "cycle", "complete"];

/// A constructed graph and its validation log.
#[derive(Debug, Clone)]
pub struct Built {
    pub family: Family,
    pub graph: Graph,
    pub notes: Vec<ValidationNote>,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Layered { .. } => "layered",
            Family::LayeredPadded { .. } => "layered-padded",
            Family::Polarity { .. } => "polarity",
            Family::Puncture { .. } => "puncture",
            Family::Chain { .. } => "chain",
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
        }
    }

    /// `(name, value)` pairs of the parameters.
    pub fn parameters(&self) -> Vec<(&'static str, usize)> {
        match *self {
            Family::Layered { delta, k } => alloc::vec![("delta", delta), ("k", k)],
            Family::LayeredPadded { delta, k, n } => alloc::vec![("delta", delta), ("k", k), ("n", n)],
            Family::Polarity { q } | Family::Puncture { q } => alloc::vec![("q", q)],
            Family::Chain { q, k } => alloc::vec![("q", q), ("k", k)],
            Family::Path { n } | Family::Cycle { n } | Family::Complete { n } => alloc::vec![("n", n)],
        }
    }

    /// Builds a family from its name and optional parameters, reporting the
    /// first missing one.
    pub fn from_parts(
        name: &str,
        delta: Option<usize>,
        k: Option<usize>,
        n: Option<usize>,
        q: Option<usize>,
    ) -> Result<Self, ConstructionError> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| ConstructionError::Parameter(alloc::format!("family `{name}` needs --{flag}")))
        };
        Ok(match name {
            "layered" => Family::Layered { delta: need(delta, "delta")?, k: need(k, "k")? },
            "layered-padded" => Family::LayeredPadded { delta: need(delta, "delta")?, k: need(k, "k")?, n: need(n, "n")? },
            "polarity" => Family::Polarity { q: need(q, "q")? },
            "puncture" => Family::Puncture { q: need(q, "q")? },
            "chain" => Family::Chain { q: need(q, "q")?, k: need(k, "k")? },
            "path" => Family::Path { n: need(n, "n")? },
            "cycle" => Family::Cycle { n: need(n, "n")? },
            "complete" => Family::Complete { n: need(n, "n")? },
            other => {
                return Err(ConstructionError::Parameter(alloc::format!(
                    "unknown family `{other}`; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name())?;
        for (i, (k, v)) in self.parameters().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str(")")
    }
}

pub fn build_family(family: &Family) -> Result<Built, ConstructionError> {
    let (graph, notes) = match *family {
        Family::Layered { delta, k } => {
            let fam = layered_extremal(delta, k)?;
            (fam.graph, fam.notes)
        }
        Family::LayeredPadded { delta, k, n } => {
            let fam = layered_extremal_padded(delta, k, n)?;
            (fam.graph, fam.notes)
        }
        Family::Polarity { q } => {
            let h = polarity_graph(&make_field(q)?)?;
            let notes = alloc::vec![
                ValidationNote::verified("order q²+q+1", alloc::format!("{}", h.graph.order())),
                ValidationNote::verified("degrees q (isotropic) / q+1", alloc::format!("{} isotropic", h.isotropic_count())),
                ValidationNote::verified("C4-free", String::from("true")),
            ];
            (h.graph, notes)
        }
        Family::Puncture { q } => {
            let p = puncture(&make_field(q)?)?;
            (p.graph, p.notes)
        }
        Family::Chain { q, k } => {
            let c = chain(&make_field(q)?, k)?;
            (c.graph, c.notes)
        }
        Family::Path { n } => (Graph::path(n)?, Vec::new()),
        Family::Cycle { n } => (Graph::cycle(n)?, Vec::new()),
        Family::Complete { n } => (Graph::complete(n)?, Vec::new()),
    };
    Ok(Built { family: *family, graph, notes })
}
