//! Matchings, perfect matchings, 3-edge-colorability and the cycle space.

use crate::graph::{EdgeId, EdgeSubset, GraphError, Multigraph, VertexId, MAX_CANON_N};

/// A list of matchings of one host graph.
pub type MatchingList = Vec<EdgeSubset>;

/// Largest vertex count for [`find_even_cover`].
pub const MAX_COVER_N: usize = 12;
/// Largest number of members for [`find_even_cover`].
pub const MAX_COVER_K: usize = 6;

/// Whether no two edges of `s` share an endpoint.
pub fn is_matching(g: &Multigraph, s: EdgeSubset) -> bool {
    g.vertices().all(|v| g.degree_in(v, s) <= 1)
}

pub fn is_perfect_matching(g: &Multigraph, s: EdgeSubset) -> bool {
    g.vertices().all(|v| g.degree_in(v, s) == 1)
}

fn vertex_mask(g: &Multigraph, e: EdgeId) -> u64 {
    let (u, v) = g.endpoints(e);
    1 << u.index() | 1 << v.index()
}

/// All perfect matchings, found by repeatedly matching the lowest uncovered
/// vertex. Output order is deterministic (lexicographic in the choice sequence).
pub fn enumerate_perfect_matchings(g: &Multigraph) -> Result<MatchingList, GraphError> {
    if g.n() > MAX_CANON_N {
        return Err(GraphError::SizeLimitExceeded {
            n: g.n(),
            limit: MAX_CANON_N,
        });
    }
    let mut out = Vec::new();
    perfect_matchings_from(g, 0, EdgeSubset::EMPTY, &mut |m| {
        out.push(m);
        true
    });
    Ok(out)
}

/// Calls `visit` on perfect matchings until it returns `false`.
/// Returns `false` iff stopped early.
fn perfect_matchings_from(
    g: &Multigraph,
    covered: u64,
    chosen: EdgeSubset,
    visit: &mut dyn FnMut(EdgeSubset) -> bool,
) -> bool {
    let full = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    if covered == full {
        return visit(chosen);
    }
    let v = (!covered).trailing_zeros();
    for &e in g.incident(VertexId(v)) {
        let mask = vertex_mask(g, e);
        if mask & covered == 0 && !perfect_matchings_from(g, covered | mask, chosen.with(e), visit)
        {
            return false;
        }
    }
    true
}

pub fn has_perfect_matching(g: &Multigraph) -> bool {
    if g.n() % 2 == 1 || g.n() > 64 {
        return false;
    }
    let mut found = false;
    perfect_matchings_from(g, 0, EdgeSubset::EMPTY, &mut |_| {
        found = true;
        false
    });
    found
}

/// Every matching of `g`, including the empty one.
pub fn enumerate_matchings(g: &Multigraph) -> MatchingList {
    fn extend(
        g: &Multigraph,
        next: usize,
        covered: u64,
        chosen: EdgeSubset,
        out: &mut MatchingList,
    ) {
        out.push(chosen);
        for i in next..g.m() {
            let e = EdgeId(i as u32);
            let mask = vertex_mask(g, e);
            if mask & covered == 0 {
                extend(g, i + 1, covered | mask, chosen.with(e), out);
            }
        }
    }
    let mut out = Vec::new();
    extend(g, 0, 0, EdgeSubset::EMPTY, &mut out);
    out
}

/// A proper 3-edge-coloring as three color classes, if one exists.
pub fn three_edge_coloring(g: &Multigraph) -> Option<[EdgeSubset; 3]> {
    if g.vertices().any(|v| g.degree(v) > 3) {
        return None;
    }
    // BFS edge order keeps each new edge close to already colored ones.
    let mut order = Vec::with_capacity(g.m());
    let mut placed = EdgeSubset::EMPTY;
    let mut seen = vec![false; g.n()];
    for s in g.vertices() {
        if seen[s.index()] {
            continue;
        }
        seen[s.index()] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &e in g.incident(x) {
                if !placed.contains(e) {
                    placed.insert(e);
                    order.push(e);
                }
                let y = g.other_end(e, x);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut classes = [EdgeSubset::EMPTY; 3];
    // used[v] = bitmask of colors present at v
    let mut used = vec![0u8; g.n()];
    fn go(
        g: &Multigraph,
        order: &[EdgeId],
        i: usize,
        used: &mut [u8],
        classes: &mut [EdgeSubset; 3],
    ) -> bool {
        let Some(&e) = order.get(i) else { return true };
        let (u, v) = g.endpoints(e);
        let blocked = used[u.index()] | used[v.index()];
        for c in 0..3u8 {
            if blocked >> c & 1 == 1 {
                continue;
            }
            used[u.index()] |= 1 << c;
            used[v.index()] |= 1 << c;
            classes[c as usize].insert(e);
            if go(g, order, i + 1, used, classes) {
                return true;
            }
            classes[c as usize].remove(e);
            used[u.index()] &= !(1 << c);
            used[v.index()] &= !(1 << c);
            // colors are interchangeable until the first edge is placed
            if i == 0 {
                break;
            }
        }
        false
    }
    go(g, &order, 0, &mut used, &mut classes).then_some(classes)
}

/// Chromatic index of a cubic graph: 3 if a proper 3-edge-coloring exists,
/// otherwise 4.
pub fn chromatic_index_cubic(g: &Multigraph) -> u8 {
    if three_edge_coloring(g).is_some() {
        3
    } else {
        4
    }
}

/// Fundamental cycles of a spanning forest; a basis of the cycle space over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenSubgraphBasis {
    pub basis: Vec<EdgeSubset>,
}

impl EvenSubgraphBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The member of the span selected by the bits of `index`.
    pub fn member(&self, index: u64) -> EdgeSubset {
        self.basis
            .iter()
            .enumerate()
            .filter(|&(i, _)| index >> i & 1 == 1)
            .fold(EdgeSubset::EMPTY, |acc, (_, &b)| acc.sym_diff(b))
    }

    /// All `2^dim` even subgraphs, starting with the empty one.
    ///
    /// # Panics
    ///
    /// If the dimension exceeds 32.
    pub fn span(&self) -> Vec<EdgeSubset> {
        assert!(self.dimension() <= 32, "cycle space too large to list");
        (0..1u64 << self.dimension())
            .map(|i| self.member(i))
            .collect()
    }
}

pub fn even_subgraph_basis(g: &Multigraph) -> EvenSubgraphBasis {
    let n = g.n();
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree = EdgeSubset::EMPTY;
    for s in g.vertices() {
        if depth[s.index()] != usize::MAX {
            continue;
        }
        depth[s.index()] = 0;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &e in g.incident(x) {
                let y = g.other_end(e, x);
                if depth[y.index()] == usize::MAX {
                    depth[y.index()] = depth[x.index()] + 1;
                    parent_edge[y.index()] = Some(e);
                    tree.insert(e);
                    stack.push(y);
                }
            }
        }
    }
    let basis = g
        .edge_ids()
        .filter(|&e| !tree.contains(e))
        .map(|e| {
            let (mut a, mut b) = g.endpoints(e);
            let mut cycle = EdgeSubset::EMPTY.with(e);
            while a != b {
                if depth[a.index()] < depth[b.index()] {
                    std::mem::swap(&mut a, &mut b);
                }
                let up = parent_edge[a.index()].expect("non-root has a tree edge");
                cycle.insert(up);
                a = g.other_end(up, a);
            }
            cycle
        })
        .collect();
    EvenSubgraphBasis { basis }
}

/// Whether every member of `cover` is even and every edge of `g` lies in
/// exactly `multiplicity` members.
pub fn is_even_cover(g: &Multigraph, cover: &[EdgeSubset], multiplicity: usize) -> bool {
    cover
        .iter()
        .all(|&c| c.is_subset(g.all_edges()) && g.is_even_subgraph(c))
        && covers_exactly(g, cover, multiplicity)
}

/// Whether every member is a perfect matching and every edge lies in exactly
/// `multiplicity` members.
pub fn is_perfect_matching_cover(
    g: &Multigraph,
    cover: &[EdgeSubset],
    multiplicity: usize,
) -> bool {
    cover
        .iter()
        .all(|&c| c.is_subset(g.all_edges()) && is_perfect_matching(g, c))
        && covers_exactly(g, cover, multiplicity)
}

fn covers_exactly(g: &Multigraph, cover: &[EdgeSubset], multiplicity: usize) -> bool {
    g.edge_ids()
        .all(|e| cover.iter().filter(|c| c.contains(e)).count() == multiplicity)
}

/// Searches for `k` even subgraphs covering every edge exactly `multiplicity`
/// times. `Ok(None)` means the search was exhaustive and found nothing.
///
/// The lowest edge still below its target count must be covered by some
/// remaining member, so each step only tries members containing that edge.
/// Members may repeat and may be empty.
pub fn find_even_cover(
    g: &Multigraph,
    k: usize,
    multiplicity: usize,
) -> Result<Option<Vec<EdgeSubset>>, GraphError> {
    if g.n() > MAX_COVER_N {
        return Err(GraphError::SizeLimitExceeded {
            n: g.n(),
            limit: MAX_COVER_N,
        });
    }
    if k > MAX_COVER_K {
        return Err(GraphError::TooManyCoverMembers {
            k,
            limit: MAX_COVER_K,
        });
    }
    let space = even_subgraph_basis(g).span();
    let mut counts = vec![0usize; g.m()];
    let mut chosen = Vec::with_capacity(k);
    let found = cover_step(&space, k, multiplicity, &mut counts, &mut chosen);
    Ok(found.then_some(chosen))
}

fn cover_step(
    space: &[EdgeSubset],
    k: usize,
    multiplicity: usize,
    counts: &mut [usize],
    chosen: &mut Vec<EdgeSubset>,
) -> bool {
    let remaining = k - chosen.len();
    let Some(lowest) = counts.iter().position(|&c| c < multiplicity) else {
        chosen.resize(k, EdgeSubset::EMPTY);
        return true;
    };
    if remaining == 0 || counts.iter().any(|&c| c + remaining < multiplicity) {
        return false;
    }
    let e = EdgeId(lowest as u32);
    for &member in space {
        if !member.contains(e) || member.iter().any(|f| counts[f.index()] >= multiplicity) {
            continue;
        }
        for f in member.iter() {
            counts[f.index()] += 1;
        }
        chosen.push(member);
        if cover_step(space, k, multiplicity, counts, chosen) {
            return true;
        }
        chosen.pop();
        for f in member.iter() {
            counts[f.index()] -= 1;
        }
    }
    false
}
