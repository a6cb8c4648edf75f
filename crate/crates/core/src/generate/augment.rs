//! Canonical construction path generation of cubic multigraphs.
//!
//! Both strategies grow graphs one step at a time and keep a child only if the
//! step just taken could be undone by the child's *canonical* reduction: the
//! child's canonical deletion (an edge, or a vertex) must be equivalent to the
//! one just added. Two deletions are treated as equivalent when they leave
//! isomorphic graphs. Every child therefore has a single parent isomorphism
//! class, and duplicates can only arise between siblings, which are removed
//! with a set that lives only as long as the parent's expansion.
//!
//! Any necessary condition for a partial graph to extend to a cubic graph may
//! be used to prune, because every graph on the canonical path of a cubic graph
//! is a subgraph of it.

use std::collections::HashSet;

use crate::graph::canonize_matrix;

/// Working state: multiplicity matrix with row stride `stride`, of which the
/// first `k` rows/columns are in use.
#[derive(Clone)]
struct Partial {
    k: usize,
    stride: usize,
    mult: Vec<u8>,
    degree: Vec<u8>,
}

impl Partial {
    fn empty(k: usize, stride: usize) -> Self {
        Partial {
            k,
            stride,
            mult: vec![0; stride * stride],
            degree: vec![0; stride],
        }
    }

    fn get(&self, u: usize, v: usize) -> u8 {
        self.mult[u * self.stride + v]
    }

    fn add(&mut self, u: usize, v: usize, c: u8) {
        self.mult[u * self.stride + v] += c;
        self.mult[v * self.stride + u] += c;
        self.degree[u] += c;
        self.degree[v] += c;
    }

    fn remove(&mut self, u: usize, v: usize, c: u8) {
        self.mult[u * self.stride + v] -= c;
        self.mult[v * self.stride + u] -= c;
        self.degree[u] -= c;
        self.degree[v] -= c;
    }

    /// Compact `k * k` matrix, optionally without vertex `skip`.
    fn compact(&self, skip: Option<usize>) -> (usize, Vec<u8>) {
        let keep: Vec<usize> = (0..self.k).filter(|&v| Some(v) != skip).collect();
        let n = keep.len();
        let mut out = vec![0; n * n];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                out[i * n + j] = self.get(a, b);
            }
        }
        (n, out)
    }

    fn canon(&self, skip: Option<usize>) -> (Vec<u8>, Vec<usize>) {
        let (n, m) = self.compact(skip);
        canonize_matrix(n, &m)
    }
}

/// Emits the compact multiplicity matrix of every cubic graph on `n` vertices,
/// one per isomorphism class, by inserting edges into the empty graph.
pub(crate) fn by_edge_insertion(n: usize, simple: bool, emit: &mut dyn FnMut(usize, &[u8])) {
    let mut g = Partial::empty(n, n);
    edge_step(&mut g, 0, simple, emit);
}

fn completable_by_edges(g: &Partial, simple: bool) -> bool {
    let deficit: Vec<u8> = (0..g.k).map(|v| 3 - g.degree[v]).collect();
    let total: u32 = deficit.iter().map(|&d| d as u32).sum();
    (0..g.k).all(|v| {
        let d = deficit[v] as u32;
        if d == 0 {
            return true;
        }
        if 2 * d > total {
            return false;
        }
        !simple
            || (0..g.k)
                .filter(|&w| w != v && deficit[w] > 0 && g.get(v, w) == 0)
                .count() as u32
                >= d
    })
}

fn edge_step(g: &mut Partial, m: usize, simple: bool, emit: &mut dyn FnMut(usize, &[u8])) {
    let n = g.k;
    if 2 * m == 3 * n {
        let (_, mat) = g.compact(None);
        emit(n, &mat);
        return;
    }
    let parent_code = g.canon(None).0;
    let mut siblings: HashSet<Vec<u8>> = HashSet::new();
    for u in 0..n {
        if g.degree[u] == 3 {
            continue;
        }
        for v in u + 1..n {
            if g.degree[v] == 3 || (simple && g.get(u, v) > 0) {
                continue;
            }
            g.add(u, v, 1);
            if completable_by_edges(g, simple) {
                if let Some(code) = accept_edge(g, u, v, &parent_code) {
                    if siblings.insert(code) {
                        edge_step(g, m + 1, simple, emit);
                    }
                }
            }
            g.remove(u, v, 1);
        }
    }
}

/// Returns the child's canonical code when `u-v` is a canonical last edge.
///
/// The canonical deletion is the vertex pair with the largest
/// `(multiplicity, larger degree, smaller degree, larger label, smaller label)`
/// under the child's canonical labeling.
fn accept_edge(g: &mut Partial, u: usize, v: usize, parent_code: &[u8]) -> Option<Vec<u8>> {
    let (code, labels) = g.canon(None);
    let key = |g: &Partial, a: usize, b: usize| {
        let (da, db) = (g.degree[a], g.degree[b]);
        let (la, lb) = (labels[a], labels[b]);
        (g.get(a, b), da.max(db), da.min(db), la.max(lb), la.min(lb))
    };
    let mut best = (u, v);
    let mut best_key = key(g, u, v);
    for a in 0..g.k {
        for b in a + 1..g.k {
            if g.get(a, b) > 0 {
                let k = key(g, a, b);
                if k > best_key {
                    best_key = k;
                    best = (a, b);
                }
            }
        }
    }
    if best == (u, v) {
        return Some(code);
    }
    let mine = key(g, u, v);
    if (best_key.0, best_key.1, best_key.2) != (mine.0, mine.1, mine.2) {
        return None;
    }
    g.remove(best.0, best.1, 1);
    let theirs = g.canon(None).0;
    g.add(best.0, best.1, 1);
    (theirs == parent_code).then_some(code)
}

/// Emits every cubic graph on `n` vertices, one per isomorphism class, by
/// adding vertices together with their edges to earlier vertices.
pub(crate) fn by_vertex_insertion(n: usize, simple: bool, emit: &mut dyn FnMut(usize, &[u8])) {
    let mut g = Partial::empty(0, n);
    vertex_step(&mut g, n, simple, emit);
}

fn vertex_step(g: &mut Partial, target: usize, simple: bool, emit: &mut dyn FnMut(usize, &[u8])) {
    if g.k == target {
        if (0..g.k).all(|v| g.degree[v] == 3) {
            let (_, mat) = g.compact(None);
            emit(g.k, &mat);
        }
        return;
    }
    let k = g.k;
    let parent_code = g.canon(None).0;
    let mut siblings: HashSet<Vec<u8>> = HashSet::new();
    let mut counts = vec![0u8; k];
    g.k += 1;
    neighborhoods(g, 0, 3, simple, &mut counts, &mut |g, counts| {
        for (w, &c) in counts.iter().enumerate() {
            if c > 0 {
                g.add(k, w, c);
            }
        }
        if completable_by_vertices(g, target, simple) {
            if let Some(code) = accept_vertex(g, k, &parent_code) {
                if siblings.insert(code) {
                    vertex_step(g, target, simple, emit);
                }
            }
        }
        for (w, &c) in counts.iter().enumerate() {
            if c > 0 {
                g.remove(k, w, c);
            }
        }
    });
    g.k -= 1;
}

/// Calls `f` for every assignment of edge counts from the new vertex to the
/// existing ones with total at most `budget`.
fn neighborhoods(
    g: &mut Partial,
    w: usize,
    budget: u8,
    simple: bool,
    counts: &mut Vec<u8>,
    f: &mut dyn FnMut(&mut Partial, &[u8]),
) {
    if w == counts.len() {
        f(g, counts);
        return;
    }
    let room = (3 - g.degree[w])
        .min(budget)
        .min(if simple { 1 } else { 3 });
    for c in 0..=room {
        counts[w] = c;
        neighborhoods(g, w + 1, budget - c, simple, counts, f);
    }
    counts[w] = 0;
}

/// Existing vertices only gain edges from vertices not yet added.
fn completable_by_vertices(g: &Partial, target: usize, simple: bool) -> bool {
    let remaining = (target - g.k) as u32;
    let total: u32 = (0..g.k).map(|v| 3 - g.degree[v] as u32).sum();
    total <= 3 * remaining && (!simple || (0..g.k).all(|v| 3 - g.degree[v] as u32 <= remaining))
}

/// Returns the child's canonical code when the newest vertex `v` is a
/// canonical last vertex: the one of largest degree, ties broken by largest
/// canonical label.
fn accept_vertex(g: &Partial, v: usize, parent_code: &[u8]) -> Option<Vec<u8>> {
    let (code, labels) = g.canon(None);
    let best = (0..g.k)
        .max_by_key(|&w| (g.degree[w], labels[w]))
        .expect("nonempty");
    if best == v {
        return Some(code);
    }
    if g.degree[best] != g.degree[v] {
        return None;
    }
    (g.canon(Some(best)).0 == parent_code).then_some(code)
}
