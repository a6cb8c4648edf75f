//! H-colorings of cubic multigraphs.
//!
//! An H-coloring of a cubic graph `G` colors its edges with the edges of a
//! cubic graph `H`, so that adjacent edges get distinct colors and the three
//! colors at every vertex of `G` form the star of some vertex of `H`.
//!
//! - [`graph`]: multigraphs, named graphs, canonical forms, automorphisms.
//! - [`matchings`]: perfect matchings, 3-edge-colorings, the cycle space and
//!   even covers.
//! - [`hcoloring`]: checking and searching colorings, preimages, covers
//!   pulled back from the Petersen graph.
//! - [`generate`]: isomorph-free generation and exhaustive verification runs.
//! - [`io`]: edge-list and coloring file formats.
//!
//! ```
//! use hcolor::graph::{k4, petersen};
//! use hcolor::hcoloring::{solve, SolveOptions, SolveStatus};
//!
//! let (p, k) = (petersen(), k4());
//! let out = solve(&p, &k, &SolveOptions::default()).unwrap();
//! assert_eq!(out.status, SolveStatus::ExhaustedNone);
//! ```

pub mod generate;
pub mod graph;
pub mod hcoloring;
pub mod io;
pub mod matchings;

// Runs the guide's code blocks as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/matchings.md")]
    mod matchings {}
    #[doc = include_str!("../../../book/src/colorings.md")]
    mod colorings {}
    #[doc = include_str!("../../../book/src/covers.md")]
    mod covers {}
    #[doc = include_str!("../../../book/src/generation.md")]
    mod generation {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
