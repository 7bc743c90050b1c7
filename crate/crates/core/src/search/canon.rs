//! Canonical forms of small graphs.
//!
//! The form is the minimal upper-triangle bit string (graph6 pair order,
//! first pair most significant) over the leaves of an
//! individualization-refinement tree. Refinement is label-invariant and the
//! only pruning is between twin vertices, whose swap is an automorphism, so
//! the minimum is an isomorphism invariant.

use alloc::vec::Vec;

use crate::graph::Graph;

use super::SearchError;

/// Largest order whose upper triangle fits in a `u64`.
pub const MAX_CANON_ORDER: usize = 11;

/// An isomorphism-class fingerprint: equal for two graphs iff they are
/// isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub code: u64,
}

impl CanonicalForm {
    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        let adj = decode(self.order, self.code);
        to_graph(&adj[..self.order])
    }
}

/// Adjacency rows as bit masks; row `v` has bit `u` set for each edge `uv`.
pub(crate) type Rows = [u16; MAX_CANON_ORDER];

pub(crate) fn rows_of(g: &Graph) -> Rows {
    let mut adj = [0u16; MAX_CANON_ORDER];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub(crate) fn to_graph(adj: &[u16]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|v| (v + 1..n).filter(move |&u| adj[v] >> u & 1 == 1).map(move |u| (v, u)));
    Graph::from_edges(n, edges).expect("rows describe a simple graph")
}

pub(crate) fn decode(n: usize, code: u64) -> Rows {
    let mut adj = [0u16; MAX_CANON_ORDER];
    let bits = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    adj
}

/// Code of the graph relabelled so that vertex `inv[p]` sits at position `p`.
fn code_of(adj: &[u16], inv: &[usize]) -> u64 {
    let n = adj.len();
    let mut code = 0u64;
    for j in 1..n {
        let row = adj[inv[j]];
        for &x in &inv[..j] {
            code = (code << 1) | u64::from(row >> x & 1);
        }
    }
    code
}

/// Replaces `colors` by the coarsest equitable refinement, numbered
/// `0..k` by (old colour, neighbour colour counts).
fn refine(adj: &[u16], colors: &mut [u8]) {
    let n = adj.len();
    let mut classes = count_classes(colors);
    loop {
        let mut keyed: Vec<([u8; 2 * MAX_CANON_ORDER + 2], usize)> = (0..n)
            .map(|v| {
                let mut key = [0u8; 2 * MAX_CANON_ORDER + 2];
                key[0] = colors[v];
                let mut row = adj[v];
                while row != 0 {
                    let u = row.trailing_zeros() as usize;
                    key[1 + colors[u] as usize] += 1;
                    row &= row - 1;
                }
                (key, v)
            })
            .collect();
        keyed.sort_unstable();
        let mut next = 0u8;
        for i in 0..n {
            if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                next += 1;
            }
            colors[keyed[i].1] = next;
        }
        let now = usize::from(next) + 1;
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u8]) -> usize {
    let mut seen = 0u32;
    for &c in colors {
        seen |= 1 << c;
    }
    seen.count_ones() as usize
}

fn are_twins(adj: &[u16], u: usize, v: usize) -> bool {
    adj[u] & !(1 << v) == adj[v] & !(1 << u)
}

struct Search<'a> {
    adj: &'a [u16],
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn visit(&mut self, colors: &[u8]) {
        let n = self.adj.len();
        if count_classes(colors) == n {
            let mut inv = alloc::vec![0usize; n];
            for v in 0..n {
                inv[colors[v] as usize] = v;
            }
            let code = code_of(self.adj, &inv);
            if self.best.as_ref().map_or(true, |(b, _)| code < *b) {
                self.best = Some((code, inv));
            }
            return;
        }
        // smallest non-singleton cell, lowest colour first
        let mut sizes = [0u8; MAX_CANON_ORDER];
        for &c in colors {
            sizes[c as usize] += 1;
        }
        let target = (0..n).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c)).expect("not discrete") as u8;
        let mut tried: Vec<usize> = Vec::new();
        for v in (0..n).filter(|&v| colors[v] == target) {
            if tried.iter().any(|&u| are_twins(self.adj, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child: Vec<u8> = colors.iter().enumerate().map(|(x, &c)| 2 * c + u8::from(x != v)).collect();
            refine(self.adj, &mut child);
            self.visit(&child);
        }
    }
}

/// Canonical code and the labelling achieving it (`inv[p]` is the vertex
/// placed at position `p`).
pub(crate) fn canon_rows(adj: &[u16]) -> (u64, Vec<usize>) {
    let mut colors = alloc::vec![0u8; adj.len()];
    refine(adj, &mut colors);
    let mut search = Search { adj, best: None };
    search.visit(&colors);
    search.best.expect("search tree has a leaf")
}

fn check_order(g: &Graph) -> Result<usize, SearchError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(SearchError::OrderOutOfRange { order: n, min: 1, max: MAX_CANON_ORDER });
    }
    Ok(n)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, SearchError> {
    let n = check_order(g)?;
    let adj = rows_of(g);
    Ok(CanonicalForm { order: n, code: canon_rows(&adj[..n]).0 })
}

/// A permutation `perm` with `g.relabel(&perm)` equal to the canonical
/// representative.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, SearchError> {
    let n = check_order(g)?;
    let adj = rows_of(g);
    let (_, inv) = canon_rows(&adj[..n]);
    let mut perm = alloc::vec![0; n];
    for (p, &v) in inv.iter().enumerate() {
        perm[v] = p;
    }
    Ok(perm)
}

#[cfg(test)]
/// Minimum over every permutation; the reference for small orders.
pub(crate) fn brute_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    let mut inv: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut inv, 0, &mut |p| best = best.min(code_of(adj, p)));
    best
}

#[cfg(test)]
fn permute(a: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permute(a, k + 1, f);
        a.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn form_is_decodable() {
        let g = Graph::path(5).unwrap();
        let c = canonical_form(&g).unwrap();
        let h = c.to_graph();
        assert_eq!(canonical_form(&h).unwrap(), c);
        assert_eq!(g.relabel(&canonical_labeling(&g).unwrap()), h);
    }

    #[test]
    fn regular_graphs_are_cheap() {
        for n in [9, 11] {
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_form(&k).unwrap().code, (1u64 << (n * (n - 1) / 2)) - 1);
            let e = Graph::edgeless(n).unwrap();
            assert_eq!(canonical_form(&e).unwrap().code, 0);
        }
        let p = Graph::petersen();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let base = canonical_form(&p).unwrap();
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&p.relabel(&perm)).unwrap(), base);
        }
    }

    #[test]
    fn separates_cospectral_pair() {
        // K_{1,4} and C4 + K1 share a spectrum but not an isomorphism class
        let star = Graph::complete_bipartite(1, 4).unwrap();
        let c4k1 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_ne!(canonical_form(&star).unwrap(), canonical_form(&c4k1).unwrap());
    }

    #[test]
    fn order_cap() {
        assert!(canonical_form(&Graph::path(12).unwrap()).is_err());
    }

    proptest! {
        #[test]
        fn relabel_invariant(g in arb_graph(11), seed in any::<u64>()) {
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.relabel(&perm)).unwrap());
        }

        #[test]
        fn same_classes_as_brute_force(
            (n, a, b) in (1..=6usize).prop_flat_map(|n| {
                let bits = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
                (Just(n), bits.clone(), bits)
            })
        ) {
            let build = |bits: &[bool]| {
                let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
            };
            let (a, b) = (build(&a), build(&b));
            let (ra, rb) = (rows_of(&a), rows_of(&b));
            let brute_eq = brute_code(&ra[..n]) == brute_code(&rb[..n]);
            prop_assert_eq!(brute_eq, canonical_form(&a).unwrap() == canonical_form(&b).unwrap());
        }
    }
}
