//! Triangle and 4-cycle detection (as not necessarily induced subgraphs)
//! and the lower bound `|N_{≤2}(v)| ≥ δ² − 2⌊δ/2⌋ + 1` for C4-free graphs.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::metrics::ClassFlags;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenKind {
    Triangle,
    C4,
}

/// A cycle found in a host graph. Consecutive vertices (cyclically) are adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub vertices: Vec<VertexId>,
}

impl ForbiddenWitness {
    /// Checks distinctness and cyclic adjacency against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        let expected = match self.kind {
            ForbiddenKind::Triangle => 3,
            ForbiddenKind::C4 => 4,
        };
        if k != expected {
            return false;
        }
        let distinct = (0..k).all(|i| (i + 1..k).all(|j| self.vertices[i] != self.vertices[j]));
        distinct && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForbiddenError {
    #[error("graph contains a 4-cycle {:?}", .0.vertices)]
    ContainsC4(ForbiddenWitness),
    #[error("graph is disconnected")]
    Disconnected,
}

/// First triangle `(u, v, w)` with `u < v < w` in lexicographic order, if any.
///
/// Each edge `uv` with `u < v` is scanned for a common neighbour above `v`
/// by merging the two sorted neighbour lists.
pub fn find_triangle(g: &Graph) -> Option<ForbiddenWitness> {
    for u in 0..g.order() {
        let nu = g.neighbors(u);
        for &v in nu.iter().filter(|&&v| v as usize > u) {
            let nv = g.neighbors(v as usize);
            let (mut i, mut j) = (0, 0);
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    core::cmp::Ordering::Less => i += 1,
                    core::cmp::Ordering::Greater => j += 1,
                    core::cmp::Ordering::Equal => {
                        if nu[i] > v {
                            return Some(ForbiddenWitness {
                                kind: ForbiddenKind::Triangle,
                                vertices: vec![u, v as usize, nu[i] as usize],
                            });
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    None
}

/// A 4-cycle `(a, x, b, y)` if some pair `a < b` has two common neighbours `x, y`.
///
/// For each `a` in increasing order, walks the 2-paths `a - x - b` with
/// `b > a`, remembering the first middle vertex seen for each `b`; a second
/// one closes the cycle. `O(Σ deg²)` worst case, exits on the first hit.
pub fn find_c4(g: &Graph) -> Option<ForbiddenWitness> {
    let n = g.order();
    let mut via = vec![u32::MAX; n];
    let mut stamp = vec![usize::MAX; n];
    for a in 0..n {
        for &x in g.neighbors(a) {
            for &b in g.neighbors(x as usize) {
                let b = b as usize;
                if b <= a {
                    continue;
                }
                if stamp[b] == a {
                    return Some(ForbiddenWitness {
                        kind: ForbiddenKind::C4,
                        vertices: vec![a, via[b] as usize, b, x as usize],
                    });
                }
                stamp[b] = a;
                via[b] = x;
            }
        }
    }
    None
}

/// `δ² − 2⌊δ/2⌋ + 1`.
pub fn epp_ball_bound(min_degree: usize) -> usize {
    min_degree * min_degree - 2 * (min_degree / 2) + 1
}

/// `|N_{≤2}(v)|`, including `v` itself.
pub fn ball2_size(g: &Graph, v: VertexId) -> usize {
    let mut seen = vec![false; g.order()];
    ball2_with(g, v, &mut seen)
}

fn ball2_with(g: &Graph, v: VertexId, seen: &mut [bool]) -> usize {
    let mut touched: Vec<usize> = Vec::with_capacity(1 + g.degree(v) * 4);
    seen[v] = true;
    touched.push(v);
    for &x in g.neighbors(v) {
        if !seen[x as usize] {
            seen[x as usize] = true;
            touched.push(x as usize);
        }
    }
    for &x in g.neighbors(v) {
        for &y in g.neighbors(x as usize) {
            if !seen[y as usize] {
                seen[y as usize] = true;
                touched.push(y as usize);
            }
        }
    }
    let size = touched.len();
    for t in touched {
        seen[t] = false;
    }
    size
}

fn ball2_sizes(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    (0..g.order()).map(|v| ball2_with(g, v, &mut seen)).collect()
}

/// Outcome of the second-neighbourhood lemma on every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EppReport {
    pub min_degree: usize,
    pub bound: usize,
    pub ball_sizes: Vec<usize>,
    pub min_ball: usize,
    /// `min_ball − bound`; negative means the lemma failed somewhere.
    pub slack: i64,
}

impl EppReport {
    pub fn holds(&self) -> bool {
        self.slack >= 0
    }

    pub fn violating_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.ball_sizes.len()).filter(|&v| self.ball_sizes[v] < self.bound)
    }
}

pub fn check_epp_lemma(g: &Graph) -> Result<EppReport, ForbiddenError> {
    if !g.is_connected() {
        return Err(ForbiddenError::Disconnected);
    }
    if let Some(w) = find_c4(g) {
        return Err(ForbiddenError::ContainsC4(w));
    }
    let min_degree = g.min_degree();
    let bound = epp_ball_bound(min_degree);
    let ball_sizes = ball2_sizes(g);
    let min_ball = ball_sizes.iter().copied().min().unwrap_or(0);
    Ok(EppReport { min_degree, bound, slack: min_ball as i64 - bound as i64, ball_sizes, min_ball })
}

pub fn class_flags(g: &Graph) -> ClassFlags {
    ClassFlags {
        triangle_free: find_triangle(g).is_none(),
        c4_free: find_c4(g).is_none(),
        min_ball2: ball2_sizes(g).into_iter().min().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn brute_triangle(g: &Graph) -> bool {
        let n = g.order();
        (0..n).any(|a| {
            (a + 1..n).any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))
        })
    }

    fn brute_c4(g: &Graph) -> bool {
        let n = g.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                        if distinct && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn triangles() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(find_triangle(&k3).unwrap().vertices, [0, 1, 2]);
        assert!(find_triangle(&Graph::cycle(5).unwrap()).is_none());
        assert!(find_triangle(&Graph::complete_bipartite(3, 3).unwrap()).is_none());
    }

    #[test]
    fn four_cycles() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(find_c4(&c4).unwrap().vertices, [0, 1, 2, 3]);

        // parts {0,1} (degree 3) and {2,3,4}
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let w = find_c4(&k23).unwrap();
        assert!(w.validate(&k23));
        assert!(w.vertices.contains(&0) && w.vertices.contains(&1));

        assert!(find_c4(&Graph::petersen()).is_none());
        assert!(find_c4(&Graph::cycle(5).unwrap()).is_none());
        assert!(find_c4(&Graph::complete(4).unwrap()).is_some());
    }

    #[test]
    fn petersen_pairs_share_at_most_one_neighbour() {
        let g = Graph::petersen();
        for a in 0..10 {
            for b in a + 1..10 {
                let common = (0..10).filter(|&x| g.has_edge(a, x) && g.has_edge(b, x)).count();
                assert!(common <= 1);
            }
        }
    }

    #[test]
    fn balls() {
        let pet = Graph::petersen();
        assert!((0..10).all(|v| ball2_size(&pet, v) == 10));
        assert_eq!(epp_ball_bound(3), 8);
        assert_eq!(ball2_size(&Graph::path(5).unwrap(), 0), 3);
        let c5 = Graph::cycle(5).unwrap();
        assert!((0..5).all(|v| ball2_size(&c5, v) == 5));
    }

    #[test]
    fn epp_lemma() {
        let rep = check_epp_lemma(&Graph::petersen()).unwrap();
        assert_eq!((rep.min_ball, rep.bound, rep.slack), (10, 8, 2));
        assert!(rep.holds());

        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        match check_epp_lemma(&k23) {
            Err(ForbiddenError::ContainsC4(w)) => assert!(w.validate(&k23)),
            other => panic!("expected C4 error, got {other:?}"),
        }
        assert_eq!(check_epp_lemma(&Graph::edgeless(2).unwrap()), Err(ForbiddenError::Disconnected));
    }

    #[test]
    fn epp_bound_values() {
        let expected = [(1, 2), (2, 3), (3, 8), (4, 13), (5, 22), (6, 31)];
        for (d, b) in expected {
            assert_eq!(epp_ball_bound(d), b, "δ = {d}");
        }
    }

    proptest! {
        #[test]
        fn detectors_match_brute_force(g in arb_graph(9)) {
            let t = find_triangle(&g);
            prop_assert_eq!(t.is_some(), brute_triangle(&g));
            if let Some(w) = t { prop_assert!(w.validate(&g)); }
            let c = find_c4(&g);
            prop_assert_eq!(c.is_some(), brute_c4(&g));
            if let Some(w) = &c { prop_assert!(w.validate(&g)); }
            let pair_rule = (0..g.order()).all(|a| (a + 1..g.order()).all(|b| {
                (0..g.order()).filter(|&x| g.has_edge(a, x) && g.has_edge(b, x)).count() <= 1
            }));
            prop_assert_eq!(c.is_none(), pair_rule);
        }
    }
}
