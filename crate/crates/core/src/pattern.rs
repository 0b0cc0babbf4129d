//! Contrasting quasi-clique validity, scoring, redundancy and the greedy
//! non-redundant result set.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{intersection, Layer, LayerPair, VertexId};
use crate::{Error, Rational};

/// Thresholds shared by the miner, the oracle and the baseline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiningParams {
    /// Quasi-clique threshold: every member needs `⌈delta·(|O|-1)⌉` internal neighbours.
    pub delta: Rational,
    /// Contrast must be strictly above this value.
    pub delta_prime: Rational,
    /// Redundancy edge-overlap threshold.
    pub r: Rational,
    /// Patterns smaller than this score -1.
    pub min_size: usize,
    /// Patterns whose best layer density is below this score -1.
    pub base_gamma: Rational,
}

impl Default for MiningParams {
    fn default() -> Self {
        MiningParams {
            delta: Rational::new(1, 2),
            delta_prime: Rational::from_integer(0),
            r: Rational::new(1, 10),
            min_size: 4,
            base_gamma: Rational::new(1, 2),
        }
    }
}

impl MiningParams {
    pub fn validate(&self) -> Result<(), Error> {
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        if self.delta <= zero || self.delta > one {
            return Err(Error::InvalidParameter("delta must lie in (0, 1]"));
        }
        if self.delta_prime < zero || self.delta_prime >= one {
            return Err(Error::InvalidParameter("delta' must lie in [0, 1)"));
        }
        if self.r <= zero || self.r > one {
            return Err(Error::InvalidParameter("r must lie in (0, 1]"));
        }
        if self.min_size < 2 {
            return Err(Error::InvalidParameter("min_size must be at least 2"));
        }
        if self.base_gamma < zero || self.base_gamma > one {
            return Err(Error::InvalidParameter("base_gamma must lie in [0, 1]"));
        }
        Ok(())
    }

    /// Density every positively scored pattern reaches in at least one layer.
    pub fn effective_delta(&self) -> Rational {
        self.delta.max(self.base_gamma)
    }
}

/// `⌈ratio · k⌉` for a non-negative ratio.
#[inline]
pub fn ceil_mul(ratio: Rational, k: usize) -> usize {
    let num = *ratio.numer() * k as i64;
    let den = *ratio.denom();
    ((num + den - 1) / den) as usize
}

pub fn is_delta_quasi_clique(
    graph: &LayerPair,
    set: &[VertexId],
    layer: Layer,
    delta: Rational,
) -> Result<bool, Error> {
    if set.len() < 2 {
        return Err(Error::SetTooSmall(set.len()));
    }
    let need = ceil_mul(delta, set.len() - 1);
    Ok(set
        .iter()
        .all(|&v| graph.degree_within(v, set, layer) >= need))
}

/// `|α₁(S) − α₂(S)|`.
pub fn contrast(graph: &LayerPair, set: &[VertexId]) -> Result<Rational, Error> {
    let a1 = graph.alpha_density(set, Layer::First)?;
    let a2 = graph.alpha_density(set, Layer::Second)?;
    Ok(abs_diff(a1, a2))
}

fn abs_diff(a: Rational, b: Rational) -> Rational {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

pub fn is_cqc(graph: &LayerPair, set: &[VertexId], params: &MiningParams) -> Result<bool, Error> {
    let gamma = graph
        .gamma_density(set, Layer::First)?
        .max(graph.gamma_density(set, Layer::Second)?);
    Ok(gamma >= params.delta && contrast(graph, set)? > params.delta_prime)
}

pub fn interestingness(
    graph: &LayerPair,
    set: &[VertexId],
    params: &MiningParams,
) -> Result<Rational, Error> {
    Ok(Pattern::new(graph, set.to_vec(), params)?.interestingness)
}

/// A vertex set with its cached per-layer statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    /// Sorted, distinct.
    pub vertices: Vec<VertexId>,
    pub edges: [usize; 2],
    pub gamma: [Rational; 2],
    pub alpha: [Rational; 2],
    pub contrast: Rational,
    pub interestingness: Rational,
}

impl Pattern {
    pub fn new(
        graph: &LayerPair,
        mut vertices: Vec<VertexId>,
        params: &MiningParams,
    ) -> Result<Self, Error> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() < 2 {
            return Err(Error::SetTooSmall(vertices.len()));
        }
        let k = vertices.len();
        let mut edges = [0usize; 2];
        let mut gamma = [Rational::from_integer(0); 2];
        let mut alpha = [Rational::from_integer(0); 2];
        for layer in Layer::BOTH {
            let i = layer.index();
            let mut twice = 0;
            let mut min = usize::MAX;
            for &v in &vertices {
                let d = graph.degree_within(v, &vertices, layer);
                twice += d;
                min = min.min(d);
            }
            edges[i] = twice / 2;
            gamma[i] = Rational::new(min as i64, k as i64 - 1);
            alpha[i] = Rational::new(twice as i64, (k * (k - 1)) as i64);
        }
        let contrast = abs_diff(alpha[0], alpha[1]);
        let qualified = k >= params.min_size && gamma[0].max(gamma[1]) >= params.base_gamma;
        let interestingness = if qualified {
            contrast * Rational::from_integer(k as i64)
        } else {
            Rational::from_integer(-1)
        };
        Ok(Pattern {
            vertices,
            edges,
            gamma,
            alpha,
            contrast,
            interestingness,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn max_gamma(&self) -> Rational {
        self.gamma[0].max(self.gamma[1])
    }

    pub fn is_cqc(&self, params: &MiningParams) -> bool {
        self.max_gamma() >= params.delta && self.contrast > params.delta_prime
    }

    /// Member of the emission set: a valid pattern with positive score.
    pub fn is_interesting(&self, params: &MiningParams) -> bool {
        self.is_cqc(params) && self.interestingness > Rational::from_integer(0)
    }

    /// The layer in which the set is densest by γ (ties go to layer one).
    pub fn dense_layer(&self) -> Layer {
        if self.gamma[1] > self.gamma[0] {
            Layer::Second
        } else {
            Layer::First
        }
    }

    /// Canonical order: interestingness descending, then size ascending,
    /// then lexicographic vertex ids.
    pub fn canonical_cmp(&self, other: &Pattern) -> Ordering {
        other
            .interestingness
            .cmp(&self.interestingness)
            .then(self.vertices.len().cmp(&other.vertices.len()))
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

/// `o ⊲ p`: `o` differs from `p`, is no more interesting, and on average at
/// least a fraction `r` of its per-layer edges are also edges of `p`.
///
/// A layer in which `o` has no edges contributes a fraction of one.
pub fn is_redundant(graph: &LayerPair, o: &Pattern, p: &Pattern, r: Rational) -> bool {
    if o.vertices == p.vertices || o.interestingness > p.interestingness {
        return false;
    }
    let shared = intersection(&o.vertices, &p.vertices);
    let mut coverage = Rational::from_integer(0);
    for layer in Layer::BOTH {
        let own = o.edges[layer.index()];
        coverage += if own == 0 {
            Rational::from_integer(1)
        } else {
            Rational::new(graph.edges_within(&shared, layer) as i64, own as i64)
        };
    }
    coverage / 2 >= r
}

/// Accepted patterns in acceptance order; pairwise non-redundant.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResultSet {
    accepted: Vec<Pattern>,
}

impl ResultSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `pattern` unless it is redundant to, or made redundant by,
    /// an already accepted pattern.
    pub fn try_accept(&mut self, graph: &LayerPair, pattern: Pattern, r: Rational) -> bool {
        let clash = self
            .accepted
            .iter()
            .any(|p| is_redundant(graph, &pattern, p, r) || is_redundant(graph, p, &pattern, r));
        if clash {
            return false;
        }
        self.accepted.push(pattern);
        true
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.accepted
    }

    pub fn len(&self) -> usize {
        self.accepted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.accepted.is_empty()
    }

    pub fn into_patterns(self) -> Vec<Pattern> {
        self.accepted
    }

    pub fn total_interestingness(&self) -> Rational {
        self.accepted.iter().map(|p| p.interestingness).sum()
    }
}
