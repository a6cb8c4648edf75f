//! H-colorings of cubic graphs.
//!
//! An H-coloring of `G` is a map `f: E(G) -> E(H)` such that for every vertex
//! `x` of `G` the three edges at `x` are sent bijectively onto the three edges
//! at some vertex `y` of `H`. Properness (adjacent edges get distinct colors)
//! follows, because any two adjacent edges of `G` meet at a vertex whose star
//! is mapped injectively.

mod solver;

pub use solver::{solve, SolveOptions, SolveOutcome, SolveStats, SolveStatus};

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{petersen, EdgeId, EdgeSubset, GraphError, Multigraph, VertexId};
use crate::matchings::{
    chromatic_index_cubic, enumerate_matchings, enumerate_perfect_matchings, even_subgraph_basis,
    find_even_cover, is_matching, is_perfect_matching, three_edge_coloring,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HColorError {
    #[error("coloring map has {got} entries, source graph has {expected} edges")]
    GraphMismatch { expected: usize, got: usize },
    #[error("edge {edge} is mapped to {image}, target graph has {target_edges} edges")]
    ImageOutOfRange {
        edge: usize,
        image: usize,
        target_edges: usize,
    },
    #[error("not an H-coloring: {0}")]
    InvalidColoring(Violation),
    #[error("the target graph is not the Petersen graph")]
    TargetNotPetersen,
    #[error("the target graph has no (5,2) even-subgraph cover to pull back")]
    NoBaseCover,
    #[error("node limit must be positive")]
    ZeroNodeLimit,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Why a map fails to be an H-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two edges of the source meeting at `vertex` received the same color.
    NotProper {
        vertex: VertexId,
        first: EdgeId,
        second: EdgeId,
    },
    /// The three colors at `vertex` are distinct but are not the star of any
    /// target vertex.
    StarMismatch {
        vertex: VertexId,
        colors: [EdgeId; 3],
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotProper {
                vertex,
                first,
                second,
            } => {
                write!(f, "edges {first} and {second} at {vertex} share a color")
            }
            Violation::StarMismatch {
                vertex,
                colors: [a, b, c],
            } => {
                write!(
                    f,
                    "colors {{{a}, {b}, {c}}} at {vertex} are not the star of any target vertex"
                )
            }
        }
    }
}

/// A total map from the edges of `source` to the edges of `target`.
///
/// Construction only checks that the map is total and in range; use
/// [`HColoring::check`] to test the coloring conditions.
#[derive(Clone, PartialEq, Eq)]
pub struct HColoring<'g> {
    source: &'g Multigraph,
    target: &'g Multigraph,
    map: Vec<EdgeId>,
}

impl fmt::Debug for HColoring<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.map.iter().map(|e| e.0))
            .finish()
    }
}

impl<'g> HColoring<'g> {
    pub fn new(
        source: &'g Multigraph,
        target: &'g Multigraph,
        map: Vec<EdgeId>,
    ) -> Result<Self, HColorError> {
        if map.len() != source.m() {
            return Err(HColorError::GraphMismatch {
                expected: source.m(),
                got: map.len(),
            });
        }
        if let Some((i, e)) = map
            .iter()
            .enumerate()
            .find(|(_, e)| e.index() >= target.m())
        {
            return Err(HColorError::ImageOutOfRange {
                edge: i,
                image: e.index(),
                target_edges: target.m(),
            });
        }
        Ok(HColoring {
            source,
            target,
            map,
        })
    }

    /// The identity map of a graph onto itself.
    pub fn identity(g: &'g Multigraph) -> Self {
        HColoring {
            source: g,
            target: g,
            map: g.edge_ids().collect(),
        }
    }

    /// Sends the three color classes of a 3-edge-coloring of `source` onto the
    /// three edges at `y`. Every 3-edge-colorable cubic graph has such a
    /// coloring into every cubic target.
    pub fn from_star(source: &'g Multigraph, target: &'g Multigraph, y: VertexId) -> Option<Self> {
        let classes = three_edge_coloring(source)?;
        let star: Vec<EdgeId> = target.star(y).iter().collect();
        if star.len() != 3 {
            return None;
        }
        let map = source
            .edge_ids()
            .map(|e| {
                star[classes
                    .iter()
                    .position(|c| c.contains(e))
                    .expect("total coloring")]
            })
            .collect();
        Some(HColoring {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &'g Multigraph {
        self.source
    }

    pub fn target(&self) -> &'g Multigraph {
        self.target
    }

    pub fn map(&self) -> &[EdgeId] {
        &self.map
    }

    pub fn image(&self, e: EdgeId) -> EdgeId {
        self.map[e.index()]
    }

    /// Checks properness and the star condition at every source vertex.
    pub fn check(&self) -> Result<(), Violation> {
        for x in self.source.vertices() {
            let inc = self.source.incident(x);
            for (i, &a) in inc.iter().enumerate() {
                for &b in &inc[i + 1..] {
                    if self.image(a) == self.image(b) {
                        return Err(Violation::NotProper {
                            vertex: x,
                            first: a,
                            second: b,
                        });
                    }
                }
            }
            let colors: EdgeSubset = inc.iter().map(|&e| self.image(e)).collect();
            if self.target_vertex_of(colors).is_none() {
                let c: Vec<EdgeId> = inc.iter().map(|&e| self.image(e)).collect();
                return Err(Violation::StarMismatch {
                    vertex: x,
                    colors: [c[0], c[1], c[2]],
                });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    fn target_vertex_of(&self, colors: EdgeSubset) -> Option<VertexId> {
        self.target
            .vertices()
            .find(|&y| self.target.star(y) == colors)
    }

    /// The vertex `y` of the target with `f(star(x)) = star(y)`, for a valid
    /// coloring. Two such vertices exist only when the target is the triple edge.
    pub fn star_image(&self, x: VertexId) -> Option<VertexId> {
        let colors = self
            .source
            .incident(x)
            .iter()
            .map(|&e| self.image(e))
            .collect();
        self.target_vertex_of(colors)
    }

    /// Source edges whose color lies in `s`.
    pub fn preimage(&self, s: EdgeSubset) -> EdgeSubset {
        self.source
            .edge_ids()
            .filter(|&e| s.contains(self.image(e)))
            .collect()
    }

    /// Target edges with nonempty preimage.
    pub fn used_edges(&self) -> EdgeSubset {
        self.map.iter().copied().collect()
    }

    /// Whether every target edge adjacent to a used edge is itself used.
    pub fn check_adjacency_closure(&self) -> bool {
        let used = self.used_edges();
        used.iter()
            .all(|e| self.target.edge_neighborhood(e).is_subset(used))
    }
}

/// Whether adjacent edges of `g` always have adjacent images in `h`.
///
/// An edge is not adjacent to itself, so a map giving two adjacent edges the
/// same image is rejected.
pub fn is_adjacency_preserving(g: &Multigraph, h: &Multigraph, map: &[EdgeId]) -> bool {
    map.len() == g.m()
        && g.edge_ids().all(|a| {
            g.edge_neighborhood(a)
                .iter()
                .all(|b| h.edges_adjacent(map[a.index()], map[b.index()]))
        })
}

fn require_valid(f: &HColoring<'_>) -> Result<(), HColorError> {
    f.check().map_err(HColorError::InvalidColoring)
}

fn require_petersen(h: &Multigraph) -> Result<(), HColorError> {
    static FORM: OnceLock<crate::graph::CanonicalForm> = OnceLock::new();
    let form = FORM.get_or_init(|| crate::graph::canonical_form(&petersen()).expect("n = 10"));
    if h.n() == 10 && crate::graph::canonical_form(h)? == *form {
        Ok(())
    } else {
        Err(HColorError::TargetNotPetersen)
    }
}

struct PetersenCovers {
    graph: Multigraph,
    perfect_matchings: Vec<EdgeSubset>,
    even_cover: Option<Vec<EdgeSubset>>,
}

/// Both base covers of the Petersen graph, computed on first use.
fn petersen_covers() -> &'static PetersenCovers {
    static COVERS: OnceLock<PetersenCovers> = OnceLock::new();
    COVERS.get_or_init(|| {
        let graph = petersen();
        let perfect_matchings = enumerate_perfect_matchings(&graph).expect("n = 10");
        let even_cover = find_even_cover(&graph, 5, 2).expect("n = 10");
        PetersenCovers {
            graph,
            perfect_matchings,
            even_cover,
        }
    })
}

/// The six perfect matchings of the Petersen target pulled back along `f`.
///
/// Every edge of the Petersen graph lies in exactly two of its six perfect
/// matchings, and each pulls back to a perfect matching of the source, so the
/// result covers every source edge exactly twice.
pub fn derive_bf_cover(f: &HColoring<'_>) -> Result<Vec<EdgeSubset>, HColorError> {
    require_valid(f)?;
    require_petersen(f.target())?;
    let base = petersen_covers();
    let matchings = if *f.target() == base.graph {
        base.perfect_matchings.clone()
    } else {
        enumerate_perfect_matchings(f.target())?
    };
    Ok(matchings.into_iter().map(|m| f.preimage(m)).collect())
}

/// A (5,2) even-subgraph cover of the Petersen target pulled back along `f`.
pub fn derive_52_cover(f: &HColoring<'_>) -> Result<Vec<EdgeSubset>, HColorError> {
    require_valid(f)?;
    require_petersen(f.target())?;
    let base = petersen_covers();
    let cover = if *f.target() == base.graph {
        base.even_cover.clone()
    } else {
        find_even_cover(f.target(), 5, 2)?
    };
    let cover = cover.ok_or(HColorError::NoBaseCover)?;
    Ok(cover.into_iter().map(|c| f.preimage(c)).collect())
}

/// Tally of pullback checks on one coloring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PullbackAudit {
    pub matchings_checked: usize,
    pub perfect_matchings_checked: usize,
    pub even_subgraphs_checked: usize,
    pub violations: Vec<String>,
}

/// Pulls back every matching, perfect matching and even subgraph of the target
/// and checks that each keeps its kind; also compares chromatic indices.
pub fn audit_pullbacks(f: &HColoring<'_>) -> Result<PullbackAudit, HColorError> {
    require_valid(f)?;
    let (g, h) = (f.source(), f.target());
    let mut audit = PullbackAudit::default();
    for m in enumerate_matchings(h) {
        audit.matchings_checked += 1;
        let pre = f.preimage(m);
        if !is_matching(g, pre) {
            audit
                .violations
                .push(format!("matching {m:?} pulls back to non-matching {pre:?}"));
        }
        if is_perfect_matching(h, m) {
            audit.perfect_matchings_checked += 1;
            if !is_perfect_matching(g, pre) {
                audit.violations.push(format!(
                    "perfect matching {m:?} pulls back to {pre:?}, not perfect"
                ));
            }
        }
    }
    let stars: Vec<VertexId> = g
        .vertices()
        .map(|x| f.star_image(x).expect("valid coloring"))
        .collect();
    for c in even_subgraph_basis(h).span() {
        audit.even_subgraphs_checked += 1;
        let pre = f.preimage(c);
        for x in g.vertices() {
            let y = stars[x.index()];
            if g.degree_in(x, pre) != h.degree_in(y, c) || g.degree_in(x, pre) % 2 == 1 {
                audit.violations.push(format!(
                    "even subgraph {c:?}: degree of {x} in preimage differs from degree of {y}"
                ));
            }
        }
    }
    let (cg, ch) = (chromatic_index_cubic(g), chromatic_index_cubic(h));
    if cg > ch {
        audit.violations.push(format!(
            "chromatic index {cg} of source exceeds {ch} of target"
        ));
    }
    Ok(audit)
}
