//! Complete backtracking search for H-colorings.
//!
//! Variables are the edges of `G`, domains are bitmasks over the edges of `H`.
//! Each vertex `x` of `G` carries one constraint: the colors of its three
//! edges, in order, form a permutation of some star of `H`. Domains are kept
//! generalized arc consistent for these constraints; the search branches on
//! the smallest domain, breaking ties by a breadth-first edge order.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use super::{HColorError, HColoring};
use crate::graph::{edge_orbits, orbit_representatives, EdgeId, Multigraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Keep searching after the first coloring.
    pub enumerate_all: bool,
    /// Stop after this many colorings when enumerating.
    pub max_solutions: usize,
    /// Restrict the first branching edge to one color per edge orbit of
    /// `Aut(H)`. Preserves existence, not the full witness set.
    pub symmetry_break: bool,
    /// Search nodes allowed before giving up with [`SolveStatus::NodeLimit`].
    pub node_limit: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            enumerate_all: false,
            max_solutions: usize::MAX,
            symmetry_break: false,
            node_limit: 1_000_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum SolveStatus {
    Found,
    /// The search tree was fully explored without a coloring: a proof that
    /// none exists.
    ExhaustedNone,
    /// Inconclusive.
    NodeLimit,
}

#[derive(Clone, Debug, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
    /// Whether the whole tree was explored, i.e. `witnesses` lists every
    /// coloring reachable under the chosen options.
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome<'g> {
    pub status: SolveStatus,
    pub witnesses: Vec<HColoring<'g>>,
    pub stats: SolveStats,
}

struct Solver<'a> {
    g: &'a Multigraph,
    /// Incident edges of each vertex of G.
    stars: Vec<[usize; 3]>,
    /// For every vertex of H, the six orderings of its star as single-bit masks.
    perms: Vec<[[u64; 3]; 6]>,
    rank: Vec<usize>,
    opts: &'a SolveOptions,
    nodes: u64,
    aborted: bool,
    solutions: Vec<Vec<EdgeId>>,
}

/// Decides whether `g` has an `h`-coloring, optionally enumerating all of them.
///
/// [`SolveStatus::ExhaustedNone`] is only returned after the search tree was
/// fully explored.
pub fn solve<'g>(
    g: &'g Multigraph,
    h: &'g Multigraph,
    opts: &SolveOptions,
) -> Result<SolveOutcome<'g>, HColorError> {
    g.require_cubic()?;
    h.require_cubic()?;
    if opts.node_limit == 0 {
        return Err(HColorError::ZeroNodeLimit);
    }
    let start = Instant::now();
    let stars = g
        .vertices()
        .map(|x| {
            let inc = g.incident(x);
            [inc[0].index(), inc[1].index(), inc[2].index()]
        })
        .collect();
    let perms = h
        .vertices()
        .map(|y| {
            let inc = h.incident(y);
            let bit = |i: usize| 1u64 << inc[i].index();
            let orders = [
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ];
            orders.map(|[a, b, c]| [bit(a), bit(b), bit(c)])
        })
        .collect();
    let mut solver = Solver {
        g,
        stars,
        perms,
        rank: bfs_rank(g),
        opts,
        nodes: 0,
        aborted: false,
        solutions: Vec::new(),
    };

    let full = if h.m() == 64 {
        u64::MAX
    } else {
        (1u64 << h.m()) - 1
    };
    let mut domains = vec![full; g.m()];
    let all_vertices: Vec<usize> = (0..g.n()).collect();
    if solver.propagate(&mut domains, all_vertices) {
        if opts.symmetry_break {
            if let Some(e) = solver.branch_edge(&domains) {
                let reps = orbit_representatives(&edge_orbits(h)).bits();
                // Root domains are unions of orbits, so the orbit minima suffice.
                domains[e] &= reps;
            }
        }
        solver.search(domains);
    }

    let capped = solver.solutions.len() >= opts.max_solutions;
    let complete =
        !solver.aborted && (opts.enumerate_all && !capped || solver.solutions.is_empty());
    let status = if !solver.solutions.is_empty() {
        SolveStatus::Found
    } else if solver.aborted {
        SolveStatus::NodeLimit
    } else {
        SolveStatus::ExhaustedNone
    };
    let witnesses = solver
        .solutions
        .into_iter()
        .map(|map| HColoring {
            source: g,
            target: h,
            map,
        })
        .collect::<Vec<_>>();
    debug_assert!(witnesses.iter().all(HColoring::is_valid));
    Ok(SolveOutcome {
        status,
        witnesses,
        stats: SolveStats {
            nodes: solver.nodes,
            elapsed: start.elapsed(),
            complete,
        },
    })
}

/// Position of every edge in a breadth-first traversal from vertex 0.
fn bfs_rank(g: &Multigraph) -> Vec<usize> {
    let mut rank = vec![usize::MAX; g.m()];
    let mut next = 0;
    let mut seen = vec![false; g.n()];
    for s in g.vertices() {
        if seen[s.index()] {
            continue;
        }
        seen[s.index()] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &e in g.incident(x) {
                if rank[e.index()] == usize::MAX {
                    rank[e.index()] = next;
                    next += 1;
                }
                let y = g.other_end(e, x);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    rank
}

impl Solver<'_> {
    fn done(&self) -> bool {
        self.aborted
            || self.solutions.len() >= self.opts.max_solutions
            || (!self.opts.enumerate_all && !self.solutions.is_empty())
    }

    /// Runs the vertex constraints to a fixed point starting from `initial`.
    /// One pass over a constraint already projects its full relation, so a
    /// vertex is only revisited when a neighboring constraint narrows one of
    /// its edges. Returns `false` on a domain wipeout.
    fn propagate(&self, domains: &mut [u64], initial: Vec<usize>) -> bool {
        let mut queued = vec![false; self.stars.len()];
        for &x in &initial {
            queued[x] = true;
        }
        let mut queue = VecDeque::from(initial);
        while let Some(x) = queue.pop_front() {
            queued[x] = false;
            let [a, b, c] = self.stars[x];
            let (da, db, dc) = (domains[a], domains[b], domains[c]);
            let (mut na, mut nb, mut nc) = (0u64, 0u64, 0u64);
            for orders in &self.perms {
                for &[p, q, r] in orders {
                    if da & p != 0 && db & q != 0 && dc & r != 0 {
                        na |= p;
                        nb |= q;
                        nc |= r;
                    }
                }
            }
            for (e, new) in [(a, na), (b, nb), (c, nc)] {
                if new == 0 {
                    return false;
                }
                if new != domains[e] {
                    domains[e] = new;
                    let (u, v) = self.g.endpoints(EdgeId(e as u32));
                    for w in [u, v] {
                        if w.index() != x && !queued[w.index()] {
                            queued[w.index()] = true;
                            queue.push_back(w.index());
                        }
                    }
                }
            }
        }
        true
    }

    fn branch_edge(&self, domains: &[u64]) -> Option<usize> {
        (0..domains.len())
            .filter(|&e| domains[e].count_ones() > 1)
            .min_by_key(|&e| (domains[e].count_ones(), self.rank[e]))
    }

    fn search(&mut self, domains: Vec<u64>) {
        if self.done() {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.opts.node_limit {
            self.aborted = true;
            return;
        }
        let Some(e) = self.branch_edge(&domains) else {
            self.solutions
                .push(domains.iter().map(|d| EdgeId(d.trailing_zeros())).collect());
            return;
        };
        let mut values = domains[e];
        while values != 0 {
            let bit = values & values.wrapping_neg();
            values &= values - 1;
            let mut child = domains.clone();
            child[e] = bit;
            let (u, v) = self.g.endpoints(EdgeId(e as u32));
            if self.propagate(&mut child, vec![u.index(), v.index()]) {
                self.search(child);
            }
            if self.done() {
                return;
            }
        }
    }
}
