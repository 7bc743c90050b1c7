use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Dense 0-based vertex index, valid relative to one [`Graph`].
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("layer plan is empty")]
    EmptyPlan,
    #[error("layer {0} of the plan has size 0")]
    EmptyLayer(usize),
    #[error("vertex {vertex} is not in 0..{order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("vertex {0} is isolated; its twins would be isolated too")]
    IsolatedTwinSource(usize),
    #[error("link refers to part {part} but only {parts} parts were given")]
    InvalidPart { part: usize, parts: usize },
    #[error("link refers to vertex {vertex} of part {part}, which has order {order}")]
    InvalidPartVertex { part: usize, vertex: usize, order: usize },
}

/// Immutable undirected simple graph.
///
/// Adjacency is stored as compressed rows: the neighbours of `v` are
/// `neighbors[offsets[v]..offsets[v + 1]]`, sorted ascending, symmetric,
/// loop-free and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

/// The named families accepted by [`Graph::basic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    Edgeless,
}

/// Layer sizes of a sequential sum of edgeless graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPlan {
    sizes: Vec<usize>,
}

impl LayerPlan {
    pub fn new(sizes: Vec<usize>) -> Result<Self, GraphError> {
        if sizes.is_empty() {
            return Err(GraphError::EmptyPlan);
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::EmptyLayer(i));
        }
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// A bridge edge between vertex `from.1` of part `from.0` and vertex
/// `to.1` of part `to.0`, used by [`Graph::disjoint_union_with_links`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Link {
    pub from: (usize, VertexId),
    pub to: (usize, VertexId),
}

impl Link {
    pub fn new(from_part: usize, from_vertex: VertexId, to_part: usize, to_vertex: VertexId) -> Self {
        Self { from: (from_part, from_vertex), to: (to_part, to_vertex) }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are merged.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if order == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            lists[u].push(v as u32);
            lists[v].push(u as u32);
        }
        Ok(Self::from_lists(lists))
    }

    /// Packs per-vertex lists; sorts and dedups them. Callers guarantee symmetry.
    pub(crate) fn from_lists(mut lists: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let total: usize = lists.iter().map(Vec::len).sum();
        let mut neighbors = Vec::with_capacity(total);
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        Self { offsets, neighbors }
    }

    pub fn basic(kind: BasicKind, n: usize) -> Result<Self, GraphError> {
        match kind {
            BasicKind::Path => Self::path(n),
            BasicKind::Cycle => Self::cycle(n),
            BasicKind::Complete => Self::complete(n),
            BasicKind::Edgeless => Self::edgeless(n),
        }
    }

    /// `P_n` with edges `(i, i + 1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `C_n`: the path plus `(n - 1, 0)`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooShort(n));
        }
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)).chain(core::iter::once((n - 1, 0))))
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, core::iter::empty())
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// The Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, edges).expect("static edge list")
    }

    /// Sequential sum of edgeless layers: every vertex of layer `i` is
    /// joined to every vertex of layer `i + 1`. Vertices are numbered layer
    /// by layer; the second component gives each vertex's layer index.
    pub fn sequential_sum(plan: &LayerPlan) -> (Self, Vec<usize>) {
        let sizes = plan.sizes();
        let mut starts = Vec::with_capacity(sizes.len() + 1);
        starts.push(0usize);
        for s in sizes {
            starts.push(starts.last().unwrap() + s);
        }
        let n = *starts.last().unwrap();
        let mut layer_of = Vec::with_capacity(n);
        let mut lists: Vec<Vec<u32>> = Vec::with_capacity(n);
        for (i, &size) in sizes.iter().enumerate() {
            for _ in 0..size {
                let mut list = Vec::new();
                if i > 0 {
                    list.extend((starts[i - 1]..starts[i]).map(|x| x as u32));
                }
                if i + 1 < sizes.len() {
                    list.extend((starts[i + 1]..starts[i + 2]).map(|x| x as u32));
                }
                lists.push(list);
                layer_of.push(i);
            }
        }
        (Self::from_lists(lists), layer_of)
    }

    /// Appends `count` twins of `w`: new vertices adjacent to exactly the
    /// original neighbours of `w`. New vertices get ids `n, n+1, ...`.
    pub fn add_twins(&self, w: VertexId, count: usize) -> Result<Self, GraphError> {
        self.check_vertex(w)?;
        if self.degree(w) == 0 {
            return Err(GraphError::IsolatedTwinSource(w));
        }
        let n = self.order();
        let mut lists: Vec<Vec<u32>> = (0..n).map(|v| self.neighbors(v).to_vec()).collect();
        let twin_list: Vec<u32> = self.neighbors(w).to_vec();
        for t in 0..count {
            let id = (n + t) as u32;
            for &x in &twin_list {
                lists[x as usize].push(id);
            }
            lists.push(twin_list.clone());
        }
        Ok(Self::from_lists(lists))
    }

    /// Disjoint union of `parts` (part `i` shifted by `offsets[i]`) plus the
    /// bridge edges in `links`. Returns the graph and the offset table.
    pub fn disjoint_union_with_links(parts: &[Graph], links: &[Link]) -> Result<(Self, Vec<usize>), GraphError> {
        let mut offsets = Vec::with_capacity(parts.len());
        let mut total = 0usize;
        for p in parts {
            offsets.push(total);
            total += p.order();
        }
        let resolve = |(part, vertex): (usize, VertexId)| -> Result<usize, GraphError> {
            let g = parts.get(part).ok_or(GraphError::InvalidPart { part, parts: parts.len() })?;
            if vertex >= g.order() {
                return Err(GraphError::InvalidPartVertex { part, vertex, order: g.order() });
            }
            Ok(offsets[part] + vertex)
        };
        let mut edges = Vec::with_capacity(parts.iter().map(Graph::edge_count).sum::<usize>() + links.len());
        for (p, g) in parts.iter().enumerate() {
            edges.extend(g.edges().map(|(u, v)| (u + offsets[p], v + offsets[p])));
        }
        for link in links {
            edges.push((resolve(link.from)?, resolve(link.to)?));
        }
        Ok((Self::from_edges(total, edges)?, offsets))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.order());
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); self.order()];
        for v in 0..self.order() {
            lists[perm[v]] = self.neighbors(v).iter().map(|&x| perm[x as usize] as u32).collect();
        }
        Self::from_lists(lists)
    }

    /// The subgraph induced on `keep` (in the given order), renumbered `0..keep.len()`.
    pub fn induced(&self, keep: &[VertexId]) -> Result<Self, GraphError> {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for &x in self.neighbors(v) {
                let j = index[x as usize];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(keep.len().max(1), edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Sorted neighbour list of `v`.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && v < self.order() && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.order())
            .flat_map(move |u| self.neighbors(u).iter().map(move |&v| (u, v as usize)))
            .filter(|&(u, v)| u < v)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    /// `δ(G)`.
    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// One BFS from vertex 0 reaches everything.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut queue = Vec::with_capacity(n);
        seen[0] = true;
        queue.push(0u32);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head] as usize;
            head += 1;
            for &y in self.neighbors(x) {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        queue.len() == n
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex { vertex: v, order: self.order() })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
