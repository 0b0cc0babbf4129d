//! Exhaustive reference enumeration for small graphs.
//!
//! Every subset of the vertex set is scored directly; the greedy result is
//! built by offering the valid patterns in canonical order (score
//! descending, size ascending, lexicographic) to a [`ResultSet`].

use alloc::vec::Vec;

use crate::graph::{LayerPair, VertexId};
use crate::pattern::{MiningParams, Pattern, ResultSet};
use crate::Error;

pub const DEFAULT_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Every valid pattern with positive score, in canonical order.
    pub all_cqcs: Vec<Pattern>,
    pub greedy_result: ResultSet,
}

pub fn enumerate_all(graph: &LayerPair, params: &MiningParams) -> Result<OracleResult, Error> {
    enumerate_all_limited(graph, params, DEFAULT_LIMIT)
}

pub fn enumerate_all_limited(
    graph: &LayerPair,
    params: &MiningParams,
    limit: usize,
) -> Result<OracleResult, Error> {
    let n = graph.vertex_count();
    if n > limit || n >= 63 {
        return Err(Error::TooManyVertices { n, limit });
    }
    let mut all_cqcs = Vec::new();
    let mut set = Vec::with_capacity(n);
    for mask in 1u64..(1u64 << n) {
        if (mask.count_ones() as usize) < params.min_size.max(2) {
            continue;
        }
        set.clear();
        set.extend((0..n).filter(|&i| mask >> i & 1 == 1).map(VertexId::from));
        let p = Pattern::new(graph, set.clone(), params)?;
        if p.is_interesting(params) {
            all_cqcs.push(p);
        }
    }
    all_cqcs.sort_by(|a, b| a.canonical_cmp(b));
    let mut greedy_result = ResultSet::new();
    for p in &all_cqcs {
        greedy_result.try_accept(graph, p.clone(), params.r);
    }
    Ok(OracleResult {
        all_cqcs,
        greedy_result,
    })
}
