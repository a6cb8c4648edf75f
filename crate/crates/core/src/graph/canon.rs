//! Canonical labeling by individualization and refinement.
//!
//! The graph is viewed as a symmetric matrix of edge multiplicities. An
//! ordered vertex partition is refined until equitable (every vertex of a cell
//! sends the same total multiplicity into every cell); when cells remain that
//! are not singletons, each vertex of the first such cell is individualized in
//! turn. Every discrete leaf yields a relabeled matrix and the largest one is
//! the canonical form. Leaves that tie with the best one expose automorphisms,
//! which prune sibling branches equivalent under automorphisms fixing the
//! current individualization prefix.

use std::fmt;

use super::{EdgeSubset, GraphError, Multigraph};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANON_N: usize = 16;

/// Byte string identifying the isomorphism class of a multigraph.
///
/// Layout: the vertex count, followed by the upper triangle of the canonically
/// relabeled multiplicity matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        hex::decode(s).ok().map(CanonicalForm)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

pub fn canonical_form(g: &Multigraph) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form together with the labeling that produces it: vertex `v` of
/// `g` becomes vertex `labels[v]` of the canonical representative.
pub fn canonical_labeling(g: &Multigraph) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    if g.n() > MAX_CANON_N {
        return Err(GraphError::SizeLimitExceeded {
            n: g.n(),
            limit: MAX_CANON_N,
        });
    }
    let (code, labels) = canonize_matrix(g.n(), &g.matrix());
    Ok((CanonicalForm(code), labels))
}

type Partition = Vec<Vec<u8>>;

struct Search<'a> {
    n: usize,
    mult: &'a [u8],
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<u8>>,
}

/// Canonical code and labeling of the multiplicity matrix `mult` (`n * n`).
pub(crate) fn canonize_matrix(n: usize, mult: &[u8]) -> (Vec<u8>, Vec<usize>) {
    debug_assert!(n <= MAX_CANON_N);
    if n == 0 {
        return (vec![0], Vec::new());
    }
    let mut search = Search {
        n,
        mult,
        best: None,
        automorphisms: Vec::new(),
    };
    let unit = vec![(0..n as u8).collect::<Vec<_>>()];
    let mut prefix = Vec::new();
    search.descend(unit, &mut prefix);
    let (code, labels) = search.best.expect("search visits at least one leaf");
    (code, labels)
}

/// Splits cells by their multiplicity profile toward every cell until stable.
/// The result depends only on the partition structure, never on vertex names.
pub(crate) fn refine(n: usize, mult: &[u8], mut cells: Partition) -> Partition {
    let mut signature = vec![0u16; n * MAX_CANON_N];
    loop {
        let k = cells.len();
        for v in 0..n {
            for (c, cell) in cells.iter().enumerate() {
                signature[v * MAX_CANON_N + c] =
                    cell.iter().map(|&w| mult[v * n + w as usize] as u16).sum();
            }
        }
        let sig = |v: u8| &signature[v as usize * MAX_CANON_N..v as usize * MAX_CANON_N + k];
        let mut next: Partition = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut sorted = cell.clone();
            sorted.sort_by(|&a, &b| sig(a).cmp(sig(b)).then(a.cmp(&b)));
            let mut start = 0;
            for i in 1..=sorted.len() {
                if i == sorted.len() || sig(sorted[i]) != sig(sorted[start]) {
                    next.push(sorted[start..i].to_vec());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition, prefix: &mut Vec<u8>) {
        let cells = refine(self.n, self.mult, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<u8> = Vec::new();
        for &w in &cells[target] {
            if self.equivalent_to_explored(w, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![w]);
            child.push(cells[target].iter().copied().filter(|&x| x != w).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(w);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(w);
        }
    }

    fn leaf(&mut self, cells: &Partition) {
        let n = self.n;
        let order: Vec<usize> = cells.iter().map(|c| c[0] as usize).collect();
        let mut code = Vec::with_capacity(1 + n * (n - 1) / 2);
        code.push(n as u8);
        for i in 0..n {
            for j in i + 1..n {
                code.push(self.mult[order[i] * n + order[j]]);
            }
        }
        let mut labels = vec![0usize; n];
        for (pos, &v) in order.iter().enumerate() {
            labels[v] = pos;
        }
        match &self.best {
            Some((best, _)) if code < *best => {}
            Some((best, best_labels)) if code == *best => {
                // Same relabeled matrix: v -> (vertex holding v's position in the best leaf).
                let mut inverse = vec![0u8; n];
                for (v, &pos) in best_labels.iter().enumerate() {
                    inverse[pos] = v as u8;
                }
                let gamma: Vec<u8> = labels.iter().map(|&pos| inverse[pos]).collect();
                if gamma.iter().enumerate().any(|(v, &x)| v != x as usize) {
                    self.automorphisms.push(gamma);
                }
            }
            _ => self.best = Some((code, labels)),
        }
    }

    fn equivalent_to_explored(&self, w: u8, explored: &[u8], prefix: &[u8]) -> bool {
        if explored.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(parent: &mut [u8], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p as usize] != p) {
                continue;
            }
            for (v, &x) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v as u8), find(&mut parent, x));
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&v| find(&mut parent, v) == root)
    }
}

/// Every automorphism of `g` as a vertex permutation, by backtracking over
/// vertex images restricted to matching cells of the equitable partition.
///
/// The group is enumerated element by element, so this is only meant for small
/// graphs such as the color graphs of an H-coloring.
pub fn automorphisms(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mult = g.matrix();
    let mut color = vec![0usize; n];
    if n <= MAX_CANON_N {
        let cells = refine(n, &mult, vec![(0..n as u8).collect()]);
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                color[v as usize] = c;
            }
        }
    } else {
        for (v, c) in color.iter_mut().enumerate() {
            *c = g.degree(super::VertexId(v as u32));
        }
    }
    let mut found = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_automorphism(0, n, &mult, &color, &mut image, &mut used, &mut found);
    found
}

fn extend_automorphism(
    v: usize,
    n: usize,
    mult: &[u8],
    color: &[usize],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
) {
    if v == n {
        found.push(image.clone());
        return;
    }
    for w in 0..n {
        if used[w] || color[w] != color[v] {
            continue;
        }
        if (0..v).any(|u| mult[u * n + v] != mult[image[u] * n + w]) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend_automorphism(v + 1, n, mult, color, image, used, found);
        used[w] = false;
    }
    image[v] = usize::MAX;
}

/// Partition of the edges of `g` into orbits of its automorphism group.
/// Parallel edges are always in one orbit.
pub fn edge_orbits(g: &Multigraph) -> Vec<EdgeSubset> {
    let autos = automorphisms(g);
    let mut orbits: Vec<EdgeSubset> = Vec::new();
    let mut seen = EdgeSubset::EMPTY;
    for e in g.edge_ids() {
        if seen.contains(e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let mut orbit = EdgeSubset::EMPTY;
        for sigma in &autos {
            let (a, b) = (sigma[u.index()], sigma[v.index()]);
            let key = (a.min(b), a.max(b));
            for f in g.edge_ids() {
                let (x, y) = g.endpoints(f);
                if (x.index(), y.index()) == key {
                    orbit.insert(f);
                }
            }
        }
        seen = seen.union(orbit);
        orbits.push(orbit);
    }
    orbits
}

/// Minimum edge id of each orbit.
pub(crate) fn orbit_representatives(orbits: &[EdgeSubset]) -> EdgeSubset {
    orbits.iter().filter_map(|o| o.iter().next()).collect()
}
