//! Loopless multigraphs, with the cubic ones as the main objects of interest.
//!
//! A graph is stored as an edge list. Parallel edges are separate entries and
//! receive separate [`EdgeId`]s, which matters because an H-coloring may give
//! two parallel edges different colors. Edges are normalized to
//! `(min, max)` endpoint order and sorted at construction, so the edge ids of a
//! graph coincide with the line order of its interchange encoding.

mod canon;
mod subset;

pub use canon::MAX_CANON_N;
pub use canon::{automorphisms, canonical_form, canonical_labeling, edge_orbits, CanonicalForm};
pub(crate) use canon::{canonize_matrix, orbit_representatives};
pub use subset::EdgeSubset;

use std::fmt;

use thiserror::Error;

/// Largest edge count representable by an [`EdgeSubset`].
pub const MAX_EDGES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EdgeId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: usize, vertex: usize },
    #[error("edge {edge} has endpoint {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("edge list is empty")]
    NoEdges,
    #[error("{m} edges exceed the supported maximum of {MAX_EDGES}")]
    TooManyEdges { m: usize },
    #[error("{n} vertices exceed the limit of {limit} for this operation")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("order {n} is not an even number of at least 2")]
    InvalidOrder { n: usize },
    #[error("{k} cover members exceed the limit of {limit}")]
    TooManyCoverMembers { k: usize, limit: usize },
}

/// A finite undirected multigraph without loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    incident: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    /// Validates and builds a multigraph. Degrees are unrestricted.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if pairs.is_empty() {
            return Err(GraphError::NoEdges);
        }
        if pairs.len() > MAX_EDGES {
            return Err(GraphError::TooManyEdges { m: pairs.len() });
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for (i, &(u, v)) in pairs.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        edge: i,
                        vertex: w,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge { edge: i, vertex: u });
            }
            edges.push((u.min(v) as u32, u.max(v) as u32));
        }
        Ok(Self::from_normalized(n, edges))
    }

    /// Like [`Multigraph::new`], additionally requiring every degree to be 3.
    pub fn cubic(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let g = Self::new(n, pairs)?;
        g.require_cubic()?;
        Ok(g)
    }

    pub fn require_cubic(&self) -> Result<(), GraphError> {
        match (0..self.n).find(|&v| self.incident[v].len() != 3) {
            Some(v) => Err(GraphError::NotCubic {
                vertex: v,
                degree: self.incident[v].len(),
            }),
            None => Ok(()),
        }
    }

    /// Endpoints must already satisfy `u < v < n`.
    pub(crate) fn from_normalized(n: usize, mut edges: Vec<(u32, u32)>) -> Self {
        edges.sort_unstable();
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u as usize].push(EdgeId(i as u32));
            incident[v as usize].push(EdgeId(i as u32));
        }
        Multigraph { n, edges, incident }
    }

    /// Builds the graph whose vertex pair multiplicities are given by `mult`
    /// (row-major, `n * n`, symmetric, zero diagonal).
    pub(crate) fn from_matrix(n: usize, mult: &[u8]) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                for _ in 0..mult[u * n + v] {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        Self::from_normalized(n, edges)
    }

    pub(crate) fn matrix(&self) -> Vec<u8> {
        let n = self.n;
        let mut mult = vec![0u8; n * n];
        for &(u, v) in &self.edges {
            mult[u as usize * n + v as usize] += 1;
            mult[v as usize * n + u as usize] += 1;
        }
        mult
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n as u32).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    /// Endpoint pairs in edge id order, each with `u < v`.
    pub fn edge_list(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let (u, v) = self.edges[e.index()];
        (VertexId(u), VertexId(v))
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident[v.index()].len()
    }

    pub fn is_cubic(&self) -> bool {
        self.incident.iter().all(|inc| inc.len() == 3)
    }

    /// Edge ids incident to `v`, ascending, one entry per parallel edge.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v.index()]
    }

    /// The set of edges incident to `v`.
    ///
    /// # Panics
    ///
    /// If `v` is out of range.
    pub fn star(&self, v: VertexId) -> EdgeSubset {
        self.incident[v.index()].iter().copied().collect()
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.m())
    }

    /// Whether two edges share an endpoint. An edge is not adjacent to itself;
    /// parallel edges are adjacent.
    pub fn edges_adjacent(&self, e1: EdgeId, e2: EdgeId) -> bool {
        if e1 == e2 {
            return false;
        }
        let (a, b) = self.edges[e1.index()];
        let (c, d) = self.edges[e2.index()];
        a == c || a == d || b == c || b == d
    }

    /// Edges adjacent to `e`, excluding `e`.
    pub fn edge_neighborhood(&self, e: EdgeId) -> EdgeSubset {
        let (u, v) = self.endpoints(e);
        let mut s = self.star(u).union(self.star(v));
        s.remove(e);
        s
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let key = (u.0.min(v.0), u.0.max(v.0));
        self.edges.iter().filter(|&&p| p == key).count()
    }

    /// All edges with the same endpoints as `e`, including `e`.
    pub fn parallel_class(&self, e: EdgeId) -> EdgeSubset {
        let key = self.edges[e.index()];
        self.edge_ids()
            .filter(|f| self.edges[f.index()] == key)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Connected component index of every vertex, numbered in order of first
    /// appearance.
    pub fn components(&self) -> Vec<usize> {
        self.components_avoiding(EdgeSubset::EMPTY)
    }

    fn components_avoiding(&self, removed: EdgeSubset) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &e in &self.incident[x] {
                    if removed.contains(e) {
                        continue;
                    }
                    let y = self.other_end(e, VertexId(x as u32)).index();
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Cut edges, found with a lowlink search that skips the tree edge by id
    /// (not by parent vertex), so an edge with a parallel twin is never a bridge.
    pub fn bridges(&self) -> EdgeSubset {
        let mut order = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut bridges = EdgeSubset::EMPTY;
        let mut clock = 0;
        // (vertex, tree edge into it, next incidence position)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = Vec::new();
        for root in 0..self.n {
            if order[root] != usize::MAX {
                continue;
            }
            order[root] = clock;
            low[root] = clock;
            clock += 1;
            stack.push((root, None, 0));
            while let Some(top) = stack.last_mut() {
                let (x, via, pos) = *top;
                if pos < self.incident[x].len() {
                    top.2 += 1;
                    let e = self.incident[x][pos];
                    if Some(e) == via {
                        continue;
                    }
                    let y = self.other_end(e, VertexId(x as u32)).index();
                    if order[y] == usize::MAX {
                        order[y] = clock;
                        low[y] = clock;
                        clock += 1;
                        stack.push((y, Some(e), 0));
                    } else {
                        low[x] = low[x].min(order[y]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(parent)) = (via, stack.last()) {
                        let p = parent.0;
                        low[p] = low[p].min(low[x]);
                        if low[x] > order[p] {
                            bridges.insert(e);
                        }
                    }
                }
            }
        }
        bridges
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Whether some three vertices are pairwise adjacent.
    pub fn has_triangle(&self) -> bool {
        let mult = self.matrix();
        let n = self.n;
        (0..n).any(|a| {
            (a + 1..n).any(|b| {
                mult[a * n + b] > 0
                    && (b + 1..n).any(|c| mult[a * n + c] > 0 && mult[b * n + c] > 0)
            })
        })
    }

    /// The image of this graph under the vertex map `v -> perm[v]`.
    ///
    /// Edge ids are reassigned by the sorting rule, so they generally differ.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u as usize] as u32, perm[v as usize] as u32);
                (a.min(b), a.max(b))
            })
            .collect();
        Multigraph::from_normalized(self.n, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.n as u32;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Multigraph::from_normalized(self.n + other.n, edges)
    }

    pub fn without_edges(&self, removed: EdgeSubset) -> Multigraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| !removed.contains(EdgeId(i as u32)))
            .map(|(_, &p)| p)
            .collect();
        Multigraph::from_normalized(self.n, edges)
    }

    /// Whether `s` has even degree at every vertex.
    pub fn is_even_subgraph(&self, s: EdgeSubset) -> bool {
        self.incident
            .iter()
            .all(|inc| inc.iter().filter(|&&e| s.contains(e)).count() % 2 == 0)
    }

    /// Degree of `v` within the edge set `s`.
    pub fn degree_in(&self, v: VertexId, s: EdgeSubset) -> usize {
        self.star(v).intersection(s).len()
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// The Petersen graph.
///
/// Vertices `0..5` are the outer cycle `u1..u5`, vertices `5..10` are `v1..v5`.
/// Edges: `u_i u_{i+1}`, spokes `u_i v_i`, and inner edges `v_i v_{i+2}`
/// (indices mod 5).
pub fn petersen() -> Multigraph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((i + 5, (i + 2) % 5 + 5));
    }
    Multigraph::cubic(10, &pairs).expect("petersen construction")
}

/// The Sylvester graph: a center joined by three bridges to three gadgets.
///
/// Vertex 0 is the center `c`. Gadget `i` in `0..3` consists of `w = 1 + 3i`,
/// `x = 2 + 3i`, `y = 3 + 3i` with edges `c-w`, `w-x`, `w-y` and a doubled
/// edge `x-y`.
pub fn sylvester() -> Multigraph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..3 {
        let (w, x, y) = (1 + 3 * i, 2 + 3 * i, 3 + 3 * i);
        pairs.extend([(0, w), (w, x), (w, y), (x, y), (x, y)]);
    }
    Multigraph::cubic(10, &pairs).expect("sylvester construction")
}

pub fn k4() -> Multigraph {
    Multigraph::cubic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("k4")
}

pub fn k33() -> Multigraph {
    let pairs: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    Multigraph::cubic(6, &pairs).expect("k33")
}

/// Two vertices joined by three parallel edges.
pub fn triple_edge() -> Multigraph {
    Multigraph::cubic(2, &[(0, 1), (0, 1), (0, 1)]).expect("triple edge")
}
