#![allow(dead_code)]

use cqc_core::search::{Observer, SearchNode};
use cqc_core::{LayerPair, MiningParams, Pattern, Rational, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded random pair with per-layer edge probabilities drawn from a mix of
/// sparse and dense settings.
pub fn random_pair(seed: u64, n: usize) -> LayerPair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probs = [0.15, 0.3, 0.5, 0.7, 0.85];
    let p1 = probs[rng.gen_range(0..probs.len())];
    let p2 = probs[rng.gen_range(0..probs.len())];
    let mut e1 = Vec::new();
    let mut e2 = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p1) {
                e1.push((u, v));
            }
            if rng.gen_bool(p2) {
                e2.push((u, v));
            }
        }
    }
    LayerPair::from_indexed_edges(n, &e1, &e2)
}

/// Parameter mix cycled by instance index.
pub fn params_for(i: u64) -> MiningParams {
    let half = Rational::new(1, 2);
    match i % 5 {
        0 => MiningParams::default(),
        1 => MiningParams {
            min_size: 3,
            ..MiningParams::default()
        },
        2 => MiningParams {
            delta: Rational::new(2, 3),
            ..MiningParams::default()
        },
        3 => MiningParams {
            delta: Rational::from_integer(1),
            min_size: 3,
            ..MiningParams::default()
        },
        _ => MiningParams {
            delta: half,
            delta_prime: Rational::new(1, 5),
            r: Rational::new(1, 2),
            ..MiningParams::default()
        },
    }
}

#[derive(Default)]
pub struct Record {
    pub visited: Vec<Vec<VertexId>>,
    pub enqueued: Vec<SearchNode>,
    pub emitted: Vec<Pattern>,
}

impl Observer for Record {
    fn visit(&mut self, set: &[VertexId]) {
        self.visited.push(set.to_vec());
    }
    fn enqueue(&mut self, node: &SearchNode) {
        self.enqueued.push(node.clone());
    }
    fn emit(&mut self, pattern: &Pattern) {
        self.emitted.push(pattern.clone());
    }
}

/// All proper supersets of `members` inside `span`, as sorted vectors.
pub fn supersets_within(members: &[VertexId], span: &[VertexId]) -> Vec<Vec<VertexId>> {
    let extra: Vec<VertexId> = span
        .iter()
        .copied()
        .filter(|v| !members.contains(v))
        .collect();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << extra.len()) {
        let mut set: Vec<VertexId> = members.to_vec();
        set.extend(
            (0..extra.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| extra[i]),
        );
        set.sort_unstable();
        out.push(set);
    }
    out
}
