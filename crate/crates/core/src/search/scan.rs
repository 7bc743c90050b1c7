use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{check_report, select, BoundError, BoundSpec, CheckResult};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::metrics::{invariant_report, Rational};

/// The smallest slack seen for one bound, with the graph attaining it.
/// Ties go to the lexicographically smallest graph6 string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlackWitness {
    pub slack: Rational,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTally {
    pub id: String,
    pub applicable: usize,
    pub violations: usize,
    /// graph6 strings of violating graphs, sorted.
    pub violating: Vec<String>,
    /// graph6 strings of graphs with zero slack, sorted.
    pub tight: Vec<String>,
    pub min_slack: Option<SlackWitness>,
}

impl BoundTally {
    fn new(id: &str) -> Self {
        Self { id: id.into(), applicable: 0, violations: 0, violating: Vec::new(), tight: Vec::new(), min_slack: None }
    }

    fn record(&mut self, r: &CheckResult, g6: &str) {
        let Some(slack) = r.slack else { return };
        self.applicable += 1;
        if !r.holds {
            self.violations += 1;
            insert_sorted(&mut self.violating, g6);
        }
        if r.tight {
            insert_sorted(&mut self.tight, g6);
        }
        self.offer(SlackWitness { slack, graph6: g6.into() });
    }

    fn offer(&mut self, w: SlackWitness) {
        let better = match &self.min_slack {
            None => true,
            Some(cur) => (w.slack, &w.graph6) < (cur.slack, &cur.graph6),
        };
        if better {
            self.min_slack = Some(w);
        }
    }

    fn merge(&mut self, other: BoundTally) {
        self.applicable += other.applicable;
        self.violations += other.violations;
        for g in other.violating {
            insert_sorted(&mut self.violating, &g);
        }
        for g in other.tight {
            insert_sorted(&mut self.tight, &g);
        }
        if let Some(w) = other.min_slack {
            self.offer(w);
        }
    }
}

fn insert_sorted(list: &mut Vec<String>, g6: &str) {
    let at = list.partition_point(|x| x.as_str() <= g6);
    list.insert(at, g6.into());
}

/// Aggregate of a bound check over a corpus. Independent of corpus order,
/// and [`ScanSummary::merge`] is associative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    pub corpus: String,
    pub scanned: usize,
    /// Disconnected or single-vertex graphs.
    pub skipped: usize,
    pub bounds: Vec<BoundTally>,
}

impl ScanSummary {
    pub fn new(corpus: &str, bounds: &[BoundSpec]) -> Self {
        Self {
            corpus: corpus.into(),
            scanned: 0,
            skipped: 0,
            bounds: bounds.iter().map(|b| BoundTally::new(b.id)).collect(),
        }
    }

    pub fn total_violations(&self) -> usize {
        self.bounds.iter().map(|b| b.violations).sum()
    }

    pub fn tally(&self, id: &str) -> Option<&BoundTally> {
        self.bounds.iter().find(|b| b.id == id)
    }

    /// Checks one graph and folds it in.
    pub fn add(&mut self, g: &Graph, bounds: &[BoundSpec]) -> Result<(), BoundError> {
        if g.order() < 2 || !g.is_connected() {
            self.skipped += 1;
            return Ok(());
        }
        let report = invariant_report(g)?.with_classes(g);
        let results = check_report(&report, bounds)?;
        let g6 = to_graph6(g);
        for (tally, r) in self.bounds.iter_mut().zip(&results) {
            tally.record(r, &g6);
        }
        self.scanned += 1;
        Ok(())
    }

    /// Combines two summaries over the same bound list.
    pub fn merge(&mut self, other: ScanSummary) {
        assert_eq!(self.bounds.len(), other.bounds.len(), "summaries over different bound lists");
        self.scanned += other.scanned;
        self.skipped += other.skipped;
        for (a, b) in self.bounds.iter_mut().zip(other.bounds) {
            debug_assert_eq!(a.id, b.id);
            a.merge(b);
        }
    }
}

/// Checks every graph of `corpus` against the bounds `ids` (all when `None`).
pub fn scan<I>(corpus: I, ids: Option<&[&str]>, description: &str) -> Result<ScanSummary, BoundError>
where
    I: IntoIterator<Item = Graph>,
{
    let bounds = select(ids)?;
    let mut summary = ScanSummary::new(description, &bounds);
    for g in corpus {
        summary.add(&g, &bounds)?;
    }
    Ok(summary)
}

/// [`scan`] with the bound checks spread over the rayon pool.
#[cfg(feature = "parallel")]
pub fn scan_parallel(corpus: Vec<Graph>, ids: Option<&[&str]>, description: &str) -> Result<ScanSummary, BoundError> {
    use rayon::prelude::*;

    let bounds = select(ids)?;
    corpus
        .par_iter()
        .try_fold(
            || ScanSummary::new(description, &bounds),
            |mut s, g| {
                s.add(g, &bounds)?;
                Ok(s)
            },
        )
        .try_reduce(
            || ScanSummary::new(description, &bounds),
            |mut a, b| {
                a.merge(b);
                Ok(a)
            },
        )
}
