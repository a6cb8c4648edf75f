//! Independent oracles shared by the integration tests and the acceptance
//! suite. They use only edge lists and plain matrices.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hcolor::generate::{cubic_graphs, GenFilter, Strategy};
use hcolor::graph::Multigraph;

/// Every combination of the three filter flags.
pub fn filters(n: usize) -> Vec<GenFilter> {
    let mut out = Vec::new();
    for bits in 0..8 {
        out.push(GenFilter {
            max_n: n,
            connected: bits & 1 != 0,
            bridgeless: bits & 2 != 0,
            simple_only: bits & 4 != 0,
        });
    }
    out
}

/// Labeled cubic multigraphs on `n` vertices, as multiplicity matrices, from
/// pairing half-edges: the lowest free half-edge is paired with a free
/// half-edge at a later vertex. Half-edges at one vertex are interchangeable,
/// so only the vertex of the partner matters.
pub fn pairings(n: usize) -> Vec<Vec<u8>> {
    fn go(n: usize, free: &mut Vec<u8>, mat: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let Some(v) = free.iter().position(|&f| f > 0) else {
            out.push(mat.clone());
            return;
        };
        free[v] -= 1;
        for w in v + 1..n {
            if free[w] > 0 {
                free[w] -= 1;
                mat[v * n + w] += 1;
                mat[w * n + v] += 1;
                go(n, free, mat, out);
                mat[v * n + w] -= 1;
                mat[w * n + v] -= 1;
                free[w] += 1;
            }
        }
        free[v] += 1;
    }
    let mut out = Vec::new();
    go(n, &mut vec![3; n], &mut vec![0; n * n], &mut out);
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Largest upper-triangle code over all vertex orders.
pub fn brute_code(n: usize, mat: &[u8], perms: &[Vec<usize>]) -> Vec<u8> {
    perms
        .iter()
        .map(|p| {
            let mut code = Vec::with_capacity(n * n / 2);
            for i in 0..n {
                for j in i + 1..n {
                    code.push(mat[p[i] * n + p[j]]);
                }
            }
            code
        })
        .max()
        .unwrap()
}

pub fn matrix_of(g: &Multigraph) -> Vec<u8> {
    let n = g.n();
    let mut mat = vec![0; n * n];
    for (u, v) in g.edge_list() {
        mat[u * n + v] += 1;
        mat[v * n + u] += 1;
    }
    mat
}

/// Vertices reachable from `start`, ignoring one copy of the edge `skip`.
pub fn reachable(n: usize, mat: &[u8], start: usize, skip: Option<(usize, usize)>) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            let mut c = mat[u * n + w];
            if skip == Some((u.min(w), u.max(w))) {
                c -= 1;
            }
            if c > 0 && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Filter flags decided from the matrix alone; `u-v` is a bridge when `v` is
/// unreachable from `u` without it.
pub fn oracle_accepts(f: &GenFilter, n: usize, mat: &[u8]) -> bool {
    let connected = reachable(n, mat, 0, None).iter().all(|&s| s);
    let simple = mat.iter().all(|&c| c <= 1);
    let bridgeless = (0..n)
        .all(|u| (u + 1..n).all(|v| mat[u * n + v] == 0 || reachable(n, mat, u, Some((u, v)))[v]));
    (!f.connected || connected) && (!f.simple_only || simple) && (!f.bridgeless || bridgeless)
}

/// Incident edge indices per vertex, straight from the edge list.
pub fn stars_of(g: &Multigraph) -> Vec<Vec<usize>> {
    let mut stars = vec![Vec::new(); g.n()];
    for (i, (u, v)) in g.edge_list().enumerate() {
        stars[u].push(i);
        stars[v].push(i);
    }
    stars
}

/// Every map `E(G) -> E(H)` that gives distinct colors to edges sharing an
/// endpoint and sends each complete star of `G` onto a star of `H`. Edges
/// are assigned in index order; a star is tested once its last edge is set.
pub fn naive_colorings(g: &Multigraph, h: &Multigraph) -> BTreeSet<Vec<u32>> {
    let ends: Vec<(usize, usize)> = g.edge_list().collect();
    let g_stars = stars_of(g);
    let h_stars: BTreeSet<Vec<usize>> = stars_of(h)
        .into_iter()
        .map(|mut s| {
            s.sort();
            s
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut map = vec![usize::MAX; g.m()];

    fn go(
        e: usize,
        ends: &[(usize, usize)],
        g_stars: &[Vec<usize>],
        h_stars: &BTreeSet<Vec<usize>>,
        h_m: usize,
        map: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<u32>>,
    ) {
        if e == ends.len() {
            out.insert(map.iter().map(|&c| c as u32).collect());
            return;
        }
        let (u, v) = ends[e];
        'color: for c in 0..h_m {
            for &x in [u, v].iter() {
                if g_stars[x].iter().any(|&f| f < e && map[f] == c) {
                    continue 'color;
                }
            }
            map[e] = c;
            let complete_ok = [u, v].iter().all(|&x| {
                let star = &g_stars[x];
                if star.iter().any(|&f| f > e) {
                    return true;
                }
                let mut img: Vec<usize> = star.iter().map(|&f| map[f]).collect();
                img.sort();
                h_stars.contains(&img)
            });
            if complete_ok {
                go(e + 1, ends, g_stars, h_stars, h_m, map, out);
            }
            map[e] = usize::MAX;
        }
    }
    go(0, &ends, &g_stars, &h_stars, h.m(), &mut map, &mut out);
    out
}

/// Canonical codes of the generated graphs of order `n` under `f`, computed
/// with [`brute_code`], or `None` if two generated graphs are isomorphic.
pub fn generated_codes(n: usize, f: &GenFilter, strategy: Strategy) -> Option<BTreeSet<Vec<u8>>> {
    let perms = permutations(n);
    let got = cubic_graphs(n, f, strategy).unwrap();
    let codes: BTreeSet<Vec<u8>> = got
        .iter()
        .map(|g| brute_code(n, &matrix_of(g), &perms))
        .collect();
    (codes.len() == got.len()).then_some(codes)
}

/// Canonical codes of the labeled pairings of order `n` accepted by `f`.
pub fn pairing_codes(n: usize, f: &GenFilter) -> BTreeSet<Vec<u8>> {
    let perms = permutations(n);
    pairings(n)
        .iter()
        .filter(|m| oracle_accepts(f, n, m))
        .map(|m| brute_code(n, m, &perms))
        .collect()
}
