//! Synthetic benchmark pairs: two independent preferential-attachment
//! graphs, each with its own randomly placed dense blocks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{LayerPair, VertexId};
use crate::pattern::ceil_mul;
use crate::{Error, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthConfig {
    pub n: usize,
    /// Edges per layer produced by the attachment process, before embedding.
    pub target_edges: usize,
    /// Dense blocks per layer.
    pub n_embedded: usize,
    pub qc_size: usize,
    /// Minimum edge density of each block.
    pub qc_density: Rational,
    pub seed: u64,
}

impl SynthConfig {
    pub fn new(n: usize, target_edges: usize, seed: u64) -> Self {
        SynthConfig {
            n,
            target_edges,
            n_embedded: n.div_ceil(50),
            qc_size: 10,
            qc_density: Rational::new(3, 5),
            seed,
        }
    }

    /// Edge budget interpolated linearly between 110 vertices / 442 edges and
    /// 6672 vertices / 29464 edges.
    pub fn benchmark_scale(n: usize, seed: u64) -> Self {
        let (n0, e0, n1, e1) = (110i64, 442i64, 6672i64, 29464i64);
        let e = e0 + (e1 - e0) * (n as i64 - n0) / (n1 - n0);
        Self::new(n, e.max(0) as usize, seed)
    }

    fn validate(&self) -> Result<(), Error> {
        if self.n < 2 {
            return Err(Error::Infeasible("need at least two vertices"));
        }
        if self.qc_size < 2 || self.qc_size > self.n {
            return Err(Error::Infeasible("block size must lie in [2, n]"));
        }
        if self.target_edges > self.n * (self.n - 1) / 2 {
            return Err(Error::Infeasible("edge budget exceeds a complete graph"));
        }
        if self.target_edges < self.n - 1 {
            return Err(Error::Infeasible("edge budget below n - 1"));
        }
        if self.qc_density <= Rational::from_integer(0)
            || self.qc_density > Rational::from_integer(1)
        {
            return Err(Error::Infeasible("block density must lie in (0, 1]"));
        }
        Ok(())
    }
}

/// Which vertex sets received a dense block in which layer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroundTruth {
    pub embedded: [Vec<Vec<VertexId>>; 2],
}

pub fn generate(config: &SynthConfig) -> Result<(LayerPair, GroundTruth), Error> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut layers: [BTreeSet<(u32, u32)>; 2] = [BTreeSet::new(), BTreeSet::new()];
    let mut truth = GroundTruth::default();
    for (layer, edges) in layers.iter_mut().enumerate() {
        let mut perm: Vec<u32> = (0..config.n as u32).collect();
        perm.shuffle(&mut rng);
        for (u, v) in preferential_attachment(config.n, config.target_edges, &mut rng) {
            edges.insert(ordered(perm[u], perm[v]));
        }
        for _ in 0..config.n_embedded {
            let block = embed(edges, config, &mut rng);
            truth.embedded[layer].push(block);
        }
    }
    let to_usize = |s: &BTreeSet<(u32, u32)>| -> Vec<(usize, usize)> {
        s.iter().map(|&(u, v)| (u as usize, v as usize)).collect()
    };
    let pair =
        LayerPair::from_indexed_edges(config.n, &to_usize(&layers[0]), &to_usize(&layers[1]));
    Ok((pair, truth))
}

fn ordered(u: u32, v: u32) -> (u32, u32) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Grows a graph one vertex at a time, attaching each newcomer to existing
/// vertices with probability proportional to degree. The number of new
/// edges per step keeps the running total on the line to `budget`.
fn preferential_attachment(n: usize, budget: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let per_vertex = (budget / n).max(1);
    let seed_size = (per_vertex + 1).min(n);
    let mut edges = Vec::with_capacity(budget);
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * budget);
    for u in 0..seed_size {
        for v in (u + 1)..seed_size {
            if edges.len() < budget {
                edges.push((u, v));
                endpoints.push(u);
                endpoints.push(v);
            }
        }
    }
    let mut chosen = BTreeSet::new();
    for t in seed_size..n {
        let target = budget * (t + 1) / n;
        let remaining_vertices = n - t - 1;
        // leave at least one edge for each later vertex
        let room = budget.saturating_sub(edges.len() + remaining_vertices);
        let k = target
            .saturating_sub(edges.len())
            .clamp(1, t)
            .min(room.max(1));
        chosen.clear();
        let mut attempts = 0;
        while chosen.len() < k {
            let v = if endpoints.is_empty() || attempts > 16 * k {
                rng.gen_range(0..t)
            } else {
                endpoints[rng.gen_range(0..endpoints.len())]
            };
            chosen.insert(v);
            attempts += 1;
        }
        for &v in &chosen {
            edges.push((v, t));
            endpoints.push(v);
            endpoints.push(t);
        }
    }
    edges
}

/// Picks a random block and adds missing internal edges uniformly at random
/// until its edge density reaches the configured threshold.
fn embed(
    edges: &mut BTreeSet<(u32, u32)>,
    config: &SynthConfig,
    rng: &mut ChaCha8Rng,
) -> Vec<VertexId> {
    let mut block: Vec<u32> = index::sample(rng, config.n, config.qc_size)
        .into_iter()
        .map(|i| i as u32)
        .collect();
    block.sort_unstable();
    let pairs = config.qc_size * (config.qc_size - 1) / 2;
    let need = ceil_mul(config.qc_density, pairs);
    let mut missing = Vec::new();
    let mut present = 0;
    for (i, &u) in block.iter().enumerate() {
        for &v in &block[i + 1..] {
            if edges.contains(&(u, v)) {
                present += 1;
            } else {
                missing.push((u, v));
            }
        }
    }
    missing.shuffle(rng);
    for e in missing.into_iter().take(need.saturating_sub(present)) {
        edges.insert(e);
    }
    block.into_iter().map(VertexId).collect()
}
