//! Exact distance invariants.
//!
//! Everything is computed from one BFS per source vertex. Totals are
//! integers and the averages (`π`, `ρ`, mean distance) are reduced
//! rationals, so bound checks never depend on floating point.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

/// Exact rational in lowest terms with a positive denominator.
pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is disconnected: vertex {unreached} is unreachable from {origin}")]
    Disconnected { origin: VertexId, unreached: VertexId },
    #[error("average distance needs at least 2 vertices, got {0}")]
    TooSmall(usize),
}

/// Reusable BFS state: a frontier queue and an epoch-stamped visited
/// array, so running `n` sources costs no allocation after the first.
#[derive(Debug, Clone)]
pub struct BfsScratch {
    dist: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<u32>,
}

/// Total distance and eccentricity of one source.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSummary {
    pub total: u64,
    pub eccentricity: u32,
}

impl BfsScratch {
    pub fn new(order: usize) -> Self {
        Self { dist: vec![0; order], stamp: vec![0; order], epoch: 0, queue: Vec::with_capacity(order) }
    }

    fn ensure(&mut self, order: usize) {
        if self.dist.len() < order {
            self.dist.resize(order, 0);
            self.stamp.resize(order, 0);
        }
    }

    fn next_epoch(&mut self) -> u32 {
        if self.epoch == u32::MAX {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 0;
        }
        self.epoch += 1;
        self.epoch
    }

    /// Runs BFS from `source`; afterwards `queue` holds the reached vertices
    /// in BFS order and `dist` is valid for them. Returns the distance sum.
    fn run(&mut self, g: &Graph, source: VertexId) -> u64 {
        self.ensure(g.order());
        let epoch = self.next_epoch();
        let (dist, stamp, queue) = (&mut self.dist, &mut self.stamp, &mut self.queue);
        queue.clear();
        stamp[source] = epoch;
        dist[source] = 0;
        queue.push(source as u32);
        let mut head = 0;
        let mut total = 0u64;
        while head < queue.len() {
            let x = queue[head] as usize;
            head += 1;
            let dx = dist[x];
            total += u64::from(dx);
            for &y in g.neighbors(x) {
                let y = y as usize;
                if stamp[y] != epoch {
                    stamp[y] = epoch;
                    dist[y] = dx + 1;
                    queue.push(y as u32);
                }
            }
        }
        total
    }

    fn unreached(&self, g: &Graph) -> Option<VertexId> {
        (0..g.order()).find(|&v| self.stamp[v] != self.epoch)
    }

    pub fn summary(&mut self, g: &Graph, source: VertexId) -> Result<SourceSummary, MetricsError> {
        g.check_vertex(source)?;
        let total = self.run(g, source);
        if self.queue.len() != g.order() {
            let unreached = self.unreached(g).expect("some vertex unreached");
            return Err(MetricsError::Disconnected { origin: source, unreached });
        }
        let last = *self.queue.last().expect("source is always reached") as usize;
        Ok(SourceSummary { total, eccentricity: self.dist[last] })
    }

    pub fn distances(&mut self, g: &Graph, source: VertexId) -> Result<Vec<u32>, MetricsError> {
        self.summary(g, source)?;
        Ok(self.dist[..g.order()].to_vec())
    }

    /// Distances with `None` for unreachable vertices.
    fn partial_distances(&mut self, g: &Graph, source: VertexId) -> Result<Vec<Option<u32>>, MetricsError> {
        g.check_vertex(source)?;
        self.run(g, source);
        let epoch = self.epoch;
        Ok((0..g.order()).map(|v| (self.stamp[v] == epoch).then(|| self.dist[v])).collect())
    }
}

/// `d(v, w)` for every `w`.
pub fn bfs_distances(g: &Graph, v: VertexId) -> Result<Vec<u32>, MetricsError> {
    BfsScratch::new(g.order()).distances(g, v)
}

/// `σ(v)`.
pub fn total_distance(g: &Graph, v: VertexId) -> Result<u64, MetricsError> {
    Ok(BfsScratch::new(g.order()).summary(g, v)?.total)
}

pub fn eccentricity(g: &Graph, v: VertexId) -> Result<u32, MetricsError> {
    Ok(BfsScratch::new(g.order()).summary(g, v)?.eccentricity)
}

/// `σ(v | X)`: distances from `v` summed over the members of `set`.
pub fn partial_total_distance(g: &Graph, v: VertexId, set: &[VertexId]) -> Result<u64, MetricsError> {
    for &x in set {
        g.check_vertex(x)?;
    }
    let d = bfs_distances(g, v)?;
    Ok(set.iter().map(|&x| u64::from(d[x])).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingMode {
    /// `N_i(v)`
    Exact,
    /// `N_{≤i}(v)`
    AtMost,
    /// `N_{≥i}(v)`
    AtLeast,
}

/// Vertices at distance exactly / at most / at least `i` from `v`, ascending.
/// `v` itself qualifies whenever distance 0 does. Unreachable vertices count
/// as infinitely far.
pub fn neighborhood_ring(g: &Graph, v: VertexId, i: u32, mode: RingMode) -> Result<Vec<VertexId>, MetricsError> {
    let d = BfsScratch::new(g.order()).partial_distances(g, v)?;
    Ok((0..g.order())
        .filter(|&w| match (mode, d[w]) {
            (RingMode::Exact, Some(dw)) => dw == i,
            (RingMode::AtMost, Some(dw)) => dw <= i,
            (RingMode::AtLeast, Some(dw)) => dw >= i,
            (RingMode::AtLeast, None) => true,
            (_, None) => false,
        })
        .collect())
}

/// Graph-class flags, filled in by [`crate::forbidden::class_flags`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassFlags {
    pub triangle_free: bool,
    pub c4_free: bool,
    /// `min_v |N_{≤2}(v)|`, counting `v` itself.
    pub min_ball2: usize,
}

/// Exact distance invariants of one connected graph of order ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub order: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    /// `σ(v)` per vertex.
    pub total_distance: Vec<u64>,
    /// `ecc(v)` per vertex.
    pub eccentricity: Vec<u32>,
    /// `π = min σ(v) / (n − 1)`
    pub proximity: Rational,
    /// `ρ = max σ(v) / (n − 1)`
    pub remoteness: Rational,
    /// Mean distance over unordered pairs.
    pub average_distance: Rational,
    pub diameter: u32,
    pub radius: u32,
    pub median_vertices: Vec<VertexId>,
    pub margin_vertices: Vec<VertexId>,
    pub center_vertices: Vec<VertexId>,
    pub classes: Option<ClassFlags>,
}

impl InvariantReport {
    /// Assembles the report from per-source results (a pure min/max/sum reduction).
    pub fn from_sources(g: &Graph, sources: &[SourceSummary]) -> Result<Self, MetricsError> {
        let n = g.order();
        if n < 2 {
            return Err(MetricsError::TooSmall(n));
        }
        assert_eq!(sources.len(), n, "one summary per vertex");
        let total_distance: Vec<u64> = sources.iter().map(|s| s.total).collect();
        let eccentricity: Vec<u32> = sources.iter().map(|s| s.eccentricity).collect();
        let min_total = *total_distance.iter().min().unwrap();
        let max_total = *total_distance.iter().max().unwrap();
        let diameter = *eccentricity.iter().max().unwrap();
        let radius = *eccentricity.iter().min().unwrap();
        let wiener2: u64 = total_distance.iter().sum();
        let denom = (n - 1) as i128;
        let arg = |xs: &[u64], target: u64| -> Vec<VertexId> { (0..n).filter(|&v| xs[v] == target).collect() };
        Ok(Self {
            order: n,
            edge_count: g.edge_count(),
            min_degree: g.min_degree(),
            median_vertices: arg(&total_distance, min_total),
            margin_vertices: arg(&total_distance, max_total),
            center_vertices: (0..n).filter(|&v| eccentricity[v] == radius).collect(),
            proximity: Rational::new(i128::from(min_total), denom),
            remoteness: Rational::new(i128::from(max_total), denom),
            average_distance: Rational::new(i128::from(wiener2), denom * n as i128),
            diameter,
            radius,
            total_distance,
            eccentricity,
            classes: None,
        })
    }

    pub fn min_total_distance(&self) -> u64 {
        self.total_distance[self.median_vertices[0]]
    }

    pub fn max_total_distance(&self) -> u64 {
        self.total_distance[self.margin_vertices[0]]
    }

    /// Lowest-index median vertex.
    pub fn median(&self) -> VertexId {
        self.median_vertices[0]
    }

    pub fn with_classes(mut self, g: &Graph) -> Self {
        self.classes = Some(crate::forbidden::class_flags(g));
        self
    }
}

/// Per-source summaries, one BFS per vertex, sequentially.
pub fn source_summaries(g: &Graph) -> Result<Vec<SourceSummary>, MetricsError> {
    let mut scratch = BfsScratch::new(g.order());
    (0..g.order()).map(|v| scratch.summary(g, v)).collect()
}

/// Per-source summaries with the sources fanned out over the current rayon pool.
#[cfg(feature = "parallel")]
pub fn source_summaries_parallel(g: &Graph) -> Result<Vec<SourceSummary>, MetricsError> {
    use rayon::prelude::*;
    (0..g.order())
        .into_par_iter()
        .map_init(|| BfsScratch::new(g.order()), |scratch, v| scratch.summary(g, v))
        .collect()
}

/// Full invariant report (class flags left empty).
pub fn invariant_report(g: &Graph) -> Result<InvariantReport, MetricsError> {
    if g.order() < 2 {
        return Err(MetricsError::TooSmall(g.order()));
    }
    InvariantReport::from_sources(g, &source_summaries(g)?)
}

#[cfg(feature = "parallel")]
pub fn invariant_report_parallel(g: &Graph) -> Result<InvariantReport, MetricsError> {
    if g.order() < 2 {
        return Err(MetricsError::TooSmall(g.order()));
    }
    InvariantReport::from_sources(g, &source_summaries_parallel(g)?)
}
