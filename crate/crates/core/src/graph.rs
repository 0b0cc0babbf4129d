//! Two-layer graph over a shared vertex universe.
//!
//! Both layers are simple undirected graphs stored as sorted CSR adjacency.
//! External labels are mapped to dense ids `0..n` in order of first
//! appearance (layer one first, then layer two).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Rational};

/// Dense vertex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    #[inline]
    fn from(v: usize) -> Self {
        VertexId(v as u32)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    First,
    Second,
}

impl Layer {
    pub const BOTH: [Layer; 2] = [Layer::First, Layer::Second];

    #[inline]
    pub fn index(self) -> usize {
        match self {
            Layer::First => 0,
            Layer::Second => 1,
        }
    }

    #[inline]
    pub fn other(self) -> Layer {
        match self {
            Layer::First => Layer::Second,
            Layer::Second => Layer::First,
        }
    }

    /// 1-based layer number as used in file names and output fields.
    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }
}

/// Sorted adjacency in compressed sparse row form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl Adjacency {
    fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            degree[u.index()] += 1;
            degree[v.index()] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            let last = *offsets.last().unwrap();
            offsets.push(last + d);
        }
        let mut fill = offsets.clone();
        let mut targets = vec![VertexId(0); offsets[n]];
        for &(u, v) in edges {
            targets[fill[u.index()]] = v;
            fill[u.index()] += 1;
            targets[fill[v.index()]] = u;
            fill[v.index()] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Adjacency { offsets, targets }
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v.index()]..self.offsets[v.index() + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v.index() + 1] - self.offsets[v.index()]
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            let u = VertexId::from(u);
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }
}

/// Counts of input irregularities dropped while building a [`LayerPair`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub self_loops: [usize; 2],
    pub duplicates: [usize; 2],
}

/// Two simple undirected graphs sharing one vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerPair {
    labels: Vec<String>,
    ids: BTreeMap<String, VertexId>,
    layers: [Adjacency; 2],
}

impl LayerPair {
    /// Builds a pair from two labelled edge lists. Self-loops are dropped and
    /// duplicate edges (in either orientation) collapse to one.
    pub fn from_labeled_edges<I, J, A, B>(edges1: I, edges2: J) -> (Self, LoadReport)
    where
        I: IntoIterator<Item = (A, B)>,
        J: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut labels = Vec::new();
        let mut ids = BTreeMap::new();
        let mut intern = |s: &str| -> VertexId {
            if let Some(&id) = ids.get(s) {
                return id;
            }
            let id = VertexId::from(labels.len());
            labels.push(String::from(s));
            ids.insert(String::from(s), id);
            id
        };
        let mut raw: [Vec<(VertexId, VertexId)>; 2] = [Vec::new(), Vec::new()];
        for (a, b) in edges1 {
            let (u, v) = (intern(a.as_ref()), intern(b.as_ref()));
            raw[0].push((u, v));
        }
        for (a, b) in edges2 {
            let (u, v) = (intern(a.as_ref()), intern(b.as_ref()));
            raw[1].push((u, v));
        }
        let n = labels.len();
        let mut report = LoadReport::default();
        let [r1, r2] = raw;
        let mut build = |layer: usize, edges: Vec<(VertexId, VertexId)>| {
            let (adj, loops, dups) = normalize(n, edges);
            report.self_loops[layer] = loops;
            report.duplicates[layer] = dups;
            adj
        };
        let a1 = build(0, r1);
        let a2 = build(1, r2);
        (
            LayerPair {
                labels,
                ids,
                layers: [a1, a2],
            },
            report,
        )
    }

    /// Builds a pair over `0..n` with labels `"0".."n-1"`.
    pub fn from_indexed_edges(
        n: usize,
        edges1: &[(usize, usize)],
        edges2: &[(usize, usize)],
    ) -> Self {
        let labels: Vec<String> = (0..n).map(|i| alloc::format!("{i}")).collect();
        let ids = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), VertexId::from(i)))
            .collect();
        let conv = |e: &[(usize, usize)]| {
            e.iter()
                .map(|&(u, v)| (VertexId::from(u), VertexId::from(v)))
                .collect::<Vec<_>>()
        };
        let (a1, _, _) = normalize(n, conv(edges1));
        let (a2, _, _) = normalize(n, conv(edges2));
        LayerPair {
            labels,
            ids,
            layers: [a1, a2],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId::from)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.ids.get(label).copied()
    }

    /// Resolves labels to a sorted id set; unknown labels yield `None`.
    pub fn ids_of<S: AsRef<str>>(&self, labels: &[S]) -> Option<Vec<VertexId>> {
        let mut out = labels
            .iter()
            .map(|l| self.id(l.as_ref()))
            .collect::<Option<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    #[inline]
    pub fn adjacency(&self, layer: Layer) -> &Adjacency {
        &self.layers[layer.index()]
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId, layer: Layer) -> &[VertexId] {
        self.layers[layer.index()].neighbors(v)
    }

    pub fn edge_count(&self, layer: Layer) -> usize {
        self.layers[layer.index()].edge_count()
    }

    pub fn edges(&self, layer: Layer) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.layers[layer.index()].edges()
    }

    /// `|N_layer(v) ∩ set|` for a sorted set.
    pub fn degree_within(&self, v: VertexId, set: &[VertexId], layer: Layer) -> usize {
        intersection_size(self.neighbors(v, layer), set)
    }

    /// Number of layer edges with both endpoints in the sorted set.
    pub fn edges_within(&self, set: &[VertexId], layer: Layer) -> usize {
        let twice: usize = set.iter().map(|&v| self.degree_within(v, set, layer)).sum();
        twice / 2
    }

    /// Number of layer edges joining two disjoint sorted sets.
    pub fn edges_between(
        &self,
        a: &[VertexId],
        b: &[VertexId],
        layer: Layer,
    ) -> Result<usize, Error> {
        if intersection_size(a, b) > 0 {
            return Err(Error::OverlappingSets);
        }
        Ok(a.iter().map(|&v| self.degree_within(v, b, layer)).sum())
    }

    /// Minimum internal degree over `|set| - 1`.
    pub fn gamma_density(&self, set: &[VertexId], layer: Layer) -> Result<Rational, Error> {
        if set.len() < 2 {
            return Err(Error::SetTooSmall(set.len()));
        }
        let min = set
            .iter()
            .map(|&v| self.degree_within(v, set, layer))
            .min()
            .unwrap_or(0);
        Ok(Rational::new(min as i64, set.len() as i64 - 1))
    }

    /// Fraction of the `|set|·(|set|-1)/2` possible internal edges present.
    pub fn alpha_density(&self, set: &[VertexId], layer: Layer) -> Result<Rational, Error> {
        if set.len() < 2 {
            return Err(Error::SetTooSmall(set.len()));
        }
        let k = set.len() as i64;
        Ok(Rational::new(
            2 * self.edges_within(set, layer) as i64,
            k * (k - 1),
        ))
    }

    /// Replaces one layer's edge set by its complement over the same vertices.
    pub fn complement(&self, layer: Layer) -> LayerPair {
        let n = self.vertex_count();
        let adj = self.adjacency(layer);
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2 - adj.edge_count());
        for u in 0..n {
            let nb = adj.neighbors(VertexId::from(u));
            let mut it = nb.iter().peekable();
            for v in (u + 1)..n {
                let v = VertexId::from(v);
                while it.peek().is_some_and(|&&w| w < v) {
                    it.next();
                }
                if it.peek() != Some(&&v) {
                    edges.push((VertexId::from(u), v));
                }
            }
        }
        let mut out = self.clone();
        out.layers[layer.index()] = Adjacency::from_edges(n, &edges);
        out
    }
}

fn normalize(n: usize, mut edges: Vec<(VertexId, VertexId)>) -> (Adjacency, usize, usize) {
    let before = edges.len();
    edges.retain(|&(u, v)| u != v);
    let loops = before - edges.len();
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    let with_dups = edges.len();
    edges.dedup();
    let dups = with_dups - edges.len();
    (Adjacency::from_edges(n, &edges), loops, dups)
}

/// Size of the intersection of two sorted slices.
pub fn intersection_size(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Sorted intersection of two sorted slices.
pub fn intersection(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
