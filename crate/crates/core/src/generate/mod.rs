//! Isomorph-free generation of small cubic multigraphs and the verification
//! runs built on it.

mod augment;
mod verify;

pub use verify::{
    scan_jaeger, scan_sylvester, verify_prop1, verify_prop2, verify_thm1, verify_thm2,
    Counterexample, Filters, GraphResult, PullbackSummary, RunStats, Timestamp, Universe, Verdict,
    VerificationReport, VerifyConfig, DEFAULT_MAX_N,
};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{canonical_labeling, GraphError, Multigraph};

/// Largest order the generator accepts.
pub const MAX_GEN_N: usize = 12;

/// Which cubic graphs to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFilter {
    pub max_n: usize,
    pub connected: bool,
    pub bridgeless: bool,
    pub simple_only: bool,
}

impl GenFilter {
    pub fn new(max_n: usize) -> Self {
        GenFilter {
            max_n,
            connected: false,
            bridgeless: false,
            simple_only: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn bridgeless(mut self) -> Self {
        self.bridgeless = true;
        self
    }

    pub fn simple_only(mut self) -> Self {
        self.simple_only = true;
        self
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if self.max_n > MAX_GEN_N {
            return Err(GraphError::SizeLimitExceeded {
                n: self.max_n,
                limit: MAX_GEN_N,
            });
        }
        if self.max_n < 2 || self.max_n % 2 == 1 {
            return Err(GraphError::InvalidOrder { n: self.max_n });
        }
        Ok(())
    }

    pub fn accepts(&self, g: &Multigraph) -> bool {
        (!self.connected || g.is_connected())
            && (!self.bridgeless || g.is_bridgeless())
            && (!self.simple_only || g.is_simple())
    }
}

/// How isomorph-free generation proceeds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    /// Fixed vertex set; insert one edge at a time.
    EdgeInsertion,
    /// Add one vertex at a time together with its edges to earlier vertices.
    #[default]
    VertexInsertion,
}

/// All cubic multigraphs on exactly `n` vertices that pass `filter`, one
/// canonical representative per isomorphism class, sorted by canonical form.
pub fn cubic_graphs(
    n: usize,
    filter: &GenFilter,
    strategy: Strategy,
) -> Result<Vec<Multigraph>, GraphError> {
    GenFilter {
        max_n: n.max(2),
        ..*filter
    }
    .validate()?;
    let mut found: Vec<(Vec<u8>, Multigraph)> = Vec::new();
    let mut emit = |k: usize, mat: &[u8]| {
        let g = Multigraph::from_matrix(k, mat);
        if filter.accepts(&g) {
            let (form, labels) = canonical_labeling(&g).expect("n <= 12");
            found.push((form.as_bytes().to_vec(), g.relabel(&labels)));
        }
    };
    match strategy {
        Strategy::EdgeInsertion => augment::by_edge_insertion(n, filter.simple_only, &mut emit),
        Strategy::VertexInsertion => augment::by_vertex_insertion(n, filter.simple_only, &mut emit),
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, g)| g).collect())
}

/// Lazily generated cubic graphs of every even order up to `max_n`, in
/// increasing order of `n`.
pub struct CubicStream {
    filter: GenFilter,
    strategy: Strategy,
    next_n: usize,
    pending: VecDeque<Multigraph>,
}

impl Iterator for CubicStream {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        while self.pending.is_empty() && self.next_n <= self.filter.max_n {
            let n = self.next_n;
            self.next_n += 2;
            self.pending = cubic_graphs(n, &self.filter, self.strategy)
                .expect("validated")
                .into();
        }
        self.pending.pop_front()
    }
}

pub fn gen_cubic(filter: GenFilter) -> Result<CubicStream, GraphError> {
    gen_cubic_with(filter, Strategy::default())
}

pub fn gen_cubic_with(filter: GenFilter, strategy: Strategy) -> Result<CubicStream, GraphError> {
    filter.validate()?;
    Ok(CubicStream {
        filter,
        strategy,
        next_n: 2,
        pending: VecDeque::new(),
    })
}
