//! Connected graphs of a given order, one per isomorphism class.
//!
//! Every connected graph of order `n` is a connected graph of order `n − 1`
//! plus a vertex joined to a nonempty subset: delete a leaf of a spanning
//! tree. Triangles and 4-cycles survive in supergraphs, so the class
//! filters are applied at every level.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

use super::canon::{canon_rows, decode, to_graph, Rows, MAX_CANON_ORDER};
use super::SearchError;

pub const MIN_ENUM_ORDER: usize = 2;
pub const MAX_ENUM_ORDER: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Filter {
    #[default]
    All,
    TriangleFree,
    C4Free,
    /// Triangle-free and C4-free.
    Both,
}

impl Filter {
    pub const NAMES: [&'static str; 4] = ["all", "triangle-free", "c4-free", "both"];

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "all" => Filter::All,
            "triangle-free" | "triangle_free" | "tf" => Filter::TriangleFree,
            "c4-free" | "c4_free" | "c4" => Filter::C4Free,
            "both" => Filter::Both,
            _ => return None,
        })
    }

    fn forbids_triangles(self) -> bool {
        matches!(self, Filter::TriangleFree | Filter::Both)
    }

    fn forbids_c4(self) -> bool {
        matches!(self, Filter::C4Free | Filter::Both)
    }

    /// Whether joining a new vertex to `set` keeps the graph in the class.
    fn admits(self, adj: &[u16], set: u16) -> bool {
        let mut rest = set;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.forbids_triangles() && adj[a] & set != 0 {
                return false;
            }
            if self.forbids_c4() {
                let mut others = rest;
                while others != 0 {
                    let c = others.trailing_zeros() as usize;
                    others &= others - 1;
                    if adj[a] & adj[c] != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::TriangleFree => "triangle-free",
            Filter::C4Free => "c4-free",
            Filter::Both => "both",
        })
    }
}

/// Lazily extends one level of canonical codes to the next.
pub struct Extensions {
    order: usize,
    filter: Filter,
    parents: Vec<u64>,
    next_parent: usize,
    parent: Rows,
    mask: u32,
    seen: BTreeSet<u64>,
}

impl Extensions {
    fn new(order: usize, filter: Filter, parents: Vec<u64>) -> Self {
        let mut it = Self {
            order,
            filter,
            parents,
            next_parent: 0,
            parent: [0; MAX_CANON_ORDER],
            mask: 0,
            seen: BTreeSet::new(),
        };
        it.load_parent();
        it
    }

    fn load_parent(&mut self) -> bool {
        let Some(&code) = self.parents.get(self.next_parent) else { return false };
        self.parent = decode(self.order - 1, code);
        self.next_parent += 1;
        self.mask = 0;
        true
    }

    fn next_code(&mut self) -> Option<u64> {
        let m = self.order - 1;
        if self.next_parent == 0 {
            return None;
        }
        loop {
            self.mask += 1;
            if self.mask >= 1 << m {
                if !self.load_parent() {
                    return None;
                }
                continue;
            }
            let set = self.mask as u16;
            if !self.filter.admits(&self.parent[..m], set) {
                continue;
            }
            let mut adj = self.parent;
            adj[m] = set;
            for (v, row) in adj.iter_mut().enumerate().take(m) {
                if set >> v & 1 == 1 {
                    *row |= 1 << m;
                }
            }
            let (code, _) = canon_rows(&adj[..self.order]);
            if self.seen.insert(code) {
                return Some(code);
            }
        }
    }
}

impl Iterator for Extensions {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let code = self.next_code()?;
        Some(to_graph(&decode(self.order, code)[..self.order]))
    }
}

fn level_codes(n: usize, filter: Filter) -> Vec<u64> {
    if n == 1 {
        return alloc::vec![0];
    }
    let mut ext = Extensions::new(n, filter, level_codes(n - 1, filter));
    core::iter::from_fn(|| ext.next_code()).collect()
}

/// One canonical representative of every isomorphism class of connected
/// graphs of order `n` in the class `filter`. Levels below `n` are built
/// eagerly; level `n` is produced on demand.
pub fn enumerate_connected(n: usize, filter: Filter) -> Result<Extensions, SearchError> {
    if !(MIN_ENUM_ORDER..=MAX_ENUM_ORDER).contains(&n) {
        return Err(SearchError::OrderOutOfRange { order: n, min: MIN_ENUM_ORDER, max: MAX_ENUM_ORDER });
    }
    Ok(Extensions::new(n, filter, level_codes(n - 1, filter)))
}
