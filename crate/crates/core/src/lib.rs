//! Mining of contrasting quasi-cliques: vertex sets that are dense in one
//! layer of a two-layer graph and sparse in the other.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, timing and the
//! command line live in the `cqc` crate.
//!
//! ```
//! use cqc_core::{fixtures, mine, MiningParams, Rational};
//!
//! let graphs = fixtures::five_vertex_pair();
//! let params = MiningParams { delta: Rational::from_integer(1), ..MiningParams::default() };
//! let run = mine(&graphs, &params);
//! assert_eq!(run.result.len(), 1);
//! assert_eq!(run.result.patterns()[0].interestingness, Rational::new(10, 3));
//! ```

#![no_std]

extern crate alloc;

pub mod baseline;
pub mod fixtures;
pub mod graph;
pub mod oracle;
pub mod pattern;
pub mod search;
pub mod synth;

pub use graph::{Layer, LayerPair, LoadReport, VertexId};
pub use pattern::{MiningParams, Pattern, ResultSet};
pub use search::{mine, mine_with, Miner, Objective, Pruning, Run, Stats};

/// Exact rational used for every density and score.
pub type Rational = num_rational::Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex set has {0} vertices, at least 2 are required")]
    SetTooSmall(usize),
    #[error("vertex sets must be disjoint")]
    OverlappingSets,
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("{n} vertices exceeds the exhaustive enumeration limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("infeasible generator configuration: {0}")]
    Infeasible(&'static str),
}

/// Lossy conversion for output.
pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
