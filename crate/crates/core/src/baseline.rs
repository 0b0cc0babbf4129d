//! Complement-graph strategy: find sets that are dense in one layer and
//! dense in the complement of the other, then score them as contrast
//! patterns on the original pair.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{Layer, LayerPair, VertexId};
use crate::pattern::{MiningParams, Pattern, ResultSet};
use crate::search::{Miner, Objective, Observer, Pruning, Stats};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaselineRun {
    pub result: ResultSet,
    /// Counters summed over both cross-graph runs.
    pub stats: Stats,
    /// Distinct dense sets found before scoring.
    pub dense_sets: usize,
}

#[derive(Default)]
struct Collect(BTreeSet<Vec<VertexId>>);

impl Observer for Collect {
    fn emit(&mut self, pattern: &Pattern) {
        self.0.insert(pattern.vertices.clone());
    }
}

pub fn mine_complement(graph: &LayerPair, params: &MiningParams, pruning: Pruning) -> BaselineRun {
    let mut found = Collect::default();
    let mut stats = Stats::default();
    // dense in layer one against the complement of layer two, then the reverse
    for sparse in [Layer::Second, Layer::First] {
        let pair = graph.complement(sparse);
        let run = Miner::new(&pair, params)
            .pruning(pruning)
            .objective(Objective::CrossGraph)
            .run_observed(&mut found);
        stats.nodes_visited += run.stats.nodes_visited;
        stats.expansions += run.stats.expansions;
        stats.subtrees_pruned_by_bound += run.stats.subtrees_pruned_by_bound;
        stats.candidates_pruned += run.stats.candidates_pruned;
        stats.max_queue_len = stats.max_queue_len.max(run.stats.max_queue_len);
    }
    let dense_sets = found.0.len();
    let mut scored: Vec<Pattern> = found
        .0
        .into_iter()
        .filter_map(|set| Pattern::new(graph, set, params).ok())
        .filter(|p| p.is_interesting(params))
        .collect();
    scored.sort_by(|a, b| a.canonical_cmp(b));
    stats.patterns_emitted = scored.len() as u64;
    let mut result = ResultSet::new();
    for p in scored {
        if result.try_accept(graph, p, params.r) {
            stats.patterns_accepted += 1;
        }
    }
    BaselineRun {
        result,
        stats,
        dense_sets,
    }
}
