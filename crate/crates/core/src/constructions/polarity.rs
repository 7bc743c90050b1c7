//! Polarity graphs of the projective plane over GF(q), the punctured graph
//! `H_q' = H_q − z − M`, and the chained family `H_{q,k}`.

use alloc::format;
use alloc::vec::Vec;

use super::field::{FieldElement, FiniteField};
use super::{ConstructionError, ValidationNote};
use crate::forbidden::find_c4;
use crate::graph::{Graph, Link, VertexId};
use crate::metrics::{bfs_distances, invariant_report};

/// A 1-dimensional subspace of GF(q)^3, normalized so the first nonzero
/// coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint(pub [FieldElement; 3]);

impl ProjectivePoint {
    /// Normal form of a nonzero vector; `None` for the zero vector.
    pub fn normalize(field: &FiniteField, coords: [FieldElement; 3]) -> Option<Self> {
        let lead = *coords.iter().find(|&&c| c != 0)?;
        let s = field.inv(lead);
        Some(Self(coords.map(|c| field.mul(c, s))))
    }

    pub fn is_isotropic(&self, field: &FiniteField) -> bool {
        field.dot(&self.0, &self.0) == 0
    }
}

/// All `q² + q + 1` points of PG(2, q), sorted lexicographically.
pub fn projective_points(field: &FiniteField) -> Vec<ProjectivePoint> {
    let q = field.order() as u8;
    let mut points = Vec::with_capacity(field.order() * field.order() + field.order() + 1);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let coords = [a, b, c];
                if coords.iter().find(|&&x| x != 0) == Some(&1) {
                    points.push(ProjectivePoint(coords));
                }
            }
        }
    }
    points
}

/// `H_q`: vertex `i` is `points[i]`; two points are adjacent when their
/// standard dot product vanishes. Isotropic points get no loop.
#[derive(Debug, Clone)]
pub struct PolarityGraph {
    pub q: usize,
    pub graph: Graph,
    pub points: Vec<ProjectivePoint>,
    pub isotropic: Vec<bool>,
}

impl PolarityGraph {
    pub fn isotropic_count(&self) -> usize {
        self.isotropic.iter().filter(|&&b| b).count()
    }
}

pub fn polarity_graph(field: &FiniteField) -> Result<PolarityGraph, ConstructionError> {
    let q = field.order();
    let points = projective_points(field);
    let n = points.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if field.dot(&points[i].0, &points[j].0) == 0 {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(n, edges)?;
    let isotropic: Vec<bool> = points.iter().map(|p| p.is_isotropic(field)).collect();
    let h = PolarityGraph { q, graph, points, isotropic };

    if h.graph.order() != q * q + q + 1 {
        return Err(ConstructionError::integrity(format!("H_{q} has {} vertices, expected q²+q+1", h.graph.order())));
    }
    for v in 0..n {
        let expected = if h.isotropic[v] { q } else { q + 1 };
        if h.graph.degree(v) != expected {
            return Err(ConstructionError::integrity(format!(
                "H_{q}: vertex {v} has degree {}, expected {expected}",
                h.graph.degree(v)
            )));
        }
    }
    if let Some(w) = find_c4(&h.graph) {
        return Err(ConstructionError::integrity(format!("H_{q} contains the 4-cycle {:?}", w.vertices)));
    }
    Ok(h)
}

/// The `z`, `u`, `v` of the puncturing step (vertex ids in `H_q`):
/// `z` is the first isotropic point, `u < v` the first pair of its
/// non-isotropic, mutually non-adjacent neighbours.
pub fn select_puncture_points(h: &PolarityGraph) -> Result<(VertexId, VertexId, VertexId), ConstructionError> {
    let z = h
        .isotropic
        .iter()
        .position(|&b| b)
        .ok_or_else(|| ConstructionError::integrity(format!("H_{} has no self-orthogonal point", h.q)))?;
    let candidates: Vec<VertexId> =
        h.graph.neighbors(z).iter().map(|&x| x as usize).filter(|&x| !h.isotropic[x]).collect();
    for (i, &u) in candidates.iter().enumerate() {
        for &v in &candidates[i + 1..] {
            if !h.graph.has_edge(u, v) {
                return Ok((z, u, v));
            }
        }
    }
    Err(ConstructionError::integrity(format!("no admissible (u, v) pair around z = {z} in H_{}", h.q)))
}

/// `H_q'` together with the bookkeeping of how it was cut out of `H_q`.
#[derive(Debug, Clone)]
pub struct PuncturedPolarity {
    pub q: usize,
    pub graph: Graph,
    /// Endpoints in `graph` numbering.
    pub u: VertexId,
    pub v: VertexId,
    /// `z` in `H_q` numbering.
    pub removed_vertex: VertexId,
    /// The matching `M`, in `H_q` numbering.
    pub removed_matching: Vec<(VertexId, VertexId)>,
    /// `graph` vertex `i` is `H_q` vertex `original[i]`.
    pub original: Vec<VertexId>,
    pub notes: Vec<ValidationNote>,
}

pub fn puncture(field: &FiniteField) -> Result<PuncturedPolarity, ConstructionError> {
    let h = polarity_graph(field)?;
    puncture_polarity(&h)
}

pub fn puncture_polarity(h: &PolarityGraph) -> Result<PuncturedPolarity, ConstructionError> {
    let q = h.q;
    let g = &h.graph;
    let (z, u, v) = select_puncture_points(h)?;

    let side_u: Vec<VertexId> = g.neighbors(u).iter().map(|&x| x as usize).filter(|&x| x != z).collect();
    let side_v: Vec<VertexId> = g.neighbors(v).iter().map(|&x| x as usize).filter(|&x| x != z).collect();
    let matching: Vec<(VertexId, VertexId)> =
        side_u.iter().flat_map(|&a| side_v.iter().filter(move |&&b| g.has_edge(a, b)).map(move |&b| (a, b))).collect();
    let covers_once = |side: &[VertexId], pick: fn(&(VertexId, VertexId)) -> VertexId| {
        side.iter().all(|&x| matching.iter().filter(|e| pick(e) == x).count() == 1)
    };
    if side_u.len() != side_v.len()
        || matching.len() != side_u.len()
        || !covers_once(&side_u, |e| e.0)
        || !covers_once(&side_v, |e| e.1)
    {
        return Err(ConstructionError::integrity(format!(
            "H_{q}: edges between N(u)−z and N(v)−z do not form a perfect matching ({} edges, sides {} and {})",
            matching.len(),
            side_u.len(),
            side_v.len()
        )));
    }

    let original: Vec<VertexId> = (0..g.order()).filter(|&x| x != z).collect();
    let index = |x: VertexId| if x < z { x } else { x - 1 };
    let edges = g
        .edges()
        .filter(|&(a, b)| a != z && b != z)
        .filter(|&(a, b)| !matching.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b)))
        .map(|(a, b)| (index(a), index(b)));
    let graph = Graph::from_edges(original.len(), edges)?;
    let (pu, pv) = (index(u), index(v));

    let mut notes = Vec::new();
    let order = graph.order();
    super::expect_eq(&mut notes, format!("H_{q}' order q²+q"), q * q + q, order)?;
    super::expect_eq(&mut notes, format!("H_{q}' minimum degree q−1"), q - 1, graph.min_degree())?;
    let duv = bfs_distances(&graph, pu).map_err(|e| ConstructionError::integrity(format!("H_{q}': {e}")))?[pv];
    if duv < 4 {
        return Err(ConstructionError::integrity(format!("H_{q}': d(u, v) = {duv} < 4")));
    }
    notes.push(ValidationNote::verified("H_q' d(u, v) ≥ 4", format!("{duv}")));
    let report = invariant_report(&graph).map_err(|e| ConstructionError::integrity(format!("H_{q}': {e}")))?;
    super::expect_eq(&mut notes, format!("H_{q}' diameter 4"), 4, report.diameter as usize)?;

    Ok(PuncturedPolarity {
        q,
        graph,
        u: pu,
        v: pv,
        removed_vertex: z,
        removed_matching: matching,
        original,
        notes,
    })
}

/// `H_{q,k}`: `k` copies of `H_q'` with bridges `v_i u_{i+1}`.
#[derive(Debug, Clone)]
pub struct PolarityChain {
    pub q: usize,
    pub k: usize,
    pub graph: Graph,
    /// Copy `i` occupies `offsets[i]..offsets[i] + q² + q`.
    pub offsets: Vec<usize>,
    pub base: PuncturedPolarity,
    pub notes: Vec<ValidationNote>,
}

pub fn chain(field: &FiniteField, k: usize) -> Result<PolarityChain, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::Parameter(format!("chain needs k ≥ 2 copies, got {k}")));
    }
    let base = puncture(field)?;
    let q = base.q;
    let parts: Vec<Graph> = (0..k).map(|_| base.graph.clone()).collect();
    let links: Vec<Link> = (0..k - 1).map(|i| Link::new(i, base.v, i + 1, base.u)).collect();
    let (graph, offsets) = Graph::disjoint_union_with_links(&parts, &links)?;

    let mut notes = Vec::new();
    super::expect_eq(&mut notes, "H_{q,k} order k(q²+q)".into(), k * (q * q + q), graph.order())?;
    super::expect_eq(&mut notes, "H_{q,k} minimum degree q−1".into(), q - 1, graph.min_degree())?;
    if let Some(w) = find_c4(&graph) {
        return Err(ConstructionError::integrity(format!("H_{{{q},{k}}} contains the 4-cycle {:?}", w.vertices)));
    }
    notes.push(ValidationNote::verified("H_{q,k} is C4-free", "true".into()));
    let report = invariant_report(&graph).map_err(|e| ConstructionError::integrity(format!("H_{{{q},{k}}}: {e}")))?;
    if k % 2 == 0 {
        super::expect_eq(&mut notes, "H_{q,k} diameter 5k−1".into(), 5 * k - 1, report.diameter as usize)?;
        super::expect_eq(&mut notes, "H_{q,k} radius 5k/2".into(), 5 * k / 2, report.radius as usize)?;
    } else {
        notes.push(ValidationNote::advisory(
            "H_{q,k} diameter/radius formulas assume even k",
            format!("diameter {}, radius {}", report.diameter, report.radius),
        ));
    }
    notes.push(ValidationNote::measured("π(H_{q,k})", format!("{}", report.proximity)));
    notes.push(ValidationNote::measured("ρ(H_{q,k})", format!("{}", report.remoteness)));

    Ok(PolarityChain { q, k, graph, offsets, base, notes })
}
