//! Best-first traversal of the joint set enumeration tree.
//!
//! A subtree is a vertex set `O` together with one candidate set per layer.
//! Every vertex set in the subtree is `O` plus a non-empty subset of the
//! candidates, and a layer-`i` quasi-clique below `O` only uses candidates of
//! layer `i`. Expanding a subtree picks one candidate `u` and splits it into
//! the subtree at `O ∪ {u}` and the residual subtree at `O` without `u`, so
//! every vertex set is generated at most once.
//!
//! Subtrees are ordered by an upper bound on the interestingness of any
//! pattern strictly below them and patterns by their exact interestingness,
//! which makes the accepted patterns come out in non-increasing order.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{Layer, LayerPair, VertexId};
use crate::pattern::{ceil_mul, MiningParams, Pattern, ResultSet};
use crate::Rational;

/// Which pruning rules are active.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pruning {
    /// Degree and size based removal of candidates, driven by the members'
    /// needs as well as the candidate's own and iterated to a fixpoint. When
    /// off, each candidate gets a single check of its own degree only.
    pub candidates: bool,
    /// Discard subtrees whose interestingness bound is not positive.
    pub bound: bool,
    /// Keep only candidates within distance two of every member. Sound only
    /// for thresholds of at least one half and ignored otherwise.
    pub diameter: bool,
}

impl Default for Pruning {
    fn default() -> Self {
        Pruning {
            candidates: true,
            bound: true,
            diameter: true,
        }
    }
}

impl Pruning {
    /// Bound pruning and the full candidate filter off. The locality rule and
    /// the single per-candidate degree check stay on so that the search
    /// still terminates on graphs with hubs.
    pub fn disabled() -> Self {
        Pruning {
            candidates: false,
            bound: false,
            diameter: true,
        }
    }
}

/// What the traversal looks for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Objective {
    /// Sets dense in at least one layer with contrast between the layers.
    #[default]
    Contrast,
    /// Sets that are quasi-cliques in both layers at once. Emitted sets are
    /// reported to the observer only; the result set stays empty.
    CrossGraph,
}

/// Queue priority: an exact score or the unbounded root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Priority {
    Finite(Rational),
    Unbounded,
}

impl Priority {
    pub fn finite(self) -> Option<Rational> {
        match self {
            Priority::Finite(r) => Some(r),
            Priority::Unbounded => None,
        }
    }
}

/// A subtree of the enumeration tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchNode {
    /// Sorted members of `O`.
    pub members: Vec<VertexId>,
    /// Sorted candidates per layer, disjoint from `members`.
    pub candidates: [Vec<VertexId>; 2],
    /// Upper bound on the score of any pattern strictly inside the subtree.
    pub bound: Priority,
}

impl SearchNode {
    pub fn root(graph: &LayerPair) -> Self {
        let all: Vec<VertexId> = graph.vertices().collect();
        SearchNode {
            members: Vec::new(),
            candidates: [all.clone(), all],
            bound: Priority::Unbounded,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.candidates[0].is_empty() && self.candidates[1].is_empty()
    }

    /// `O ∪ cand₁ ∪ cand₂`, sorted.
    pub fn span(&self) -> Vec<VertexId> {
        let mut all: Vec<VertexId> = self
            .members
            .iter()
            .chain(self.candidates[0].iter())
            .chain(self.candidates[1].iter())
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// Counters for one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Distinct vertex sets generated, root included.
    pub nodes_visited: u64,
    /// Subtrees popped and split.
    pub expansions: u64,
    /// Patterns offered to the result set.
    pub patterns_emitted: u64,
    pub patterns_accepted: u64,
    /// Subtrees discarded because their bound was not positive.
    pub subtrees_pruned_by_bound: u64,
    /// Candidate removals by the degree and distance rules, summed over layers.
    pub candidates_pruned: u64,
    pub max_queue_len: u64,
}

/// Hooks into the traversal, used by tests and the baseline.
pub trait Observer {
    /// A vertex set was generated.
    fn visit(&mut self, _set: &[VertexId]) {}
    /// A subtree was pushed onto the queue.
    fn enqueue(&mut self, _node: &SearchNode) {}
    /// A valid pattern was found (before any redundancy check).
    fn emit(&mut self, _pattern: &Pattern) {}
}

impl Observer for () {}

/// Outcome of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    pub result: ResultSet,
    pub stats: Stats,
}

/// Mines with default pruning.
pub fn mine(graph: &LayerPair, params: &MiningParams) -> Run {
    Miner::new(graph, params).run()
}

pub fn mine_with(graph: &LayerPair, params: &MiningParams, pruning: Pruning) -> Run {
    Miner::new(graph, params).pruning(pruning).run()
}

enum Item {
    Subtree(SearchNode),
    Pattern(Pattern),
}

struct Entry {
    priority: Priority,
    item: Item,
    seq: u64,
}

impl Entry {
    fn vertices(&self) -> &[VertexId] {
        match &self.item {
            Item::Subtree(n) => &n.members,
            Item::Pattern(p) => &p.vertices,
        }
    }

    fn rank(&self) -> u8 {
        // At equal priority subtrees go first: a subtree whose bound equals a
        // queued pattern's score may still hold an equally scored pattern that
        // is smaller or lexicographically earlier.
        match self.item {
            Item::Subtree(_) => 1,
            Item::Pattern(_) => 0,
        }
    }
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    // Max-heap order: the greatest entry is popped first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.priority
            .cmp(&other.priority)
            .then(self.rank().cmp(&other.rank()))
            .then(other.vertices().len().cmp(&self.vertices().len()))
            .then_with(|| other.vertices().cmp(self.vertices()))
            .then(other.seq.cmp(&self.seq))
    }
}

/// Per-vertex scratch flags and counters, reset after every use.
struct Scratch {
    flag: Vec<u8>,
    count: [Vec<u32>; 2],
}

const IN_O: u8 = 1;
const IN_C: u8 = 2;
const MARK: u8 = 4;

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            flag: vec![0; n],
            count: [vec![0; n], vec![0; n]],
        }
    }

    fn set(&mut self, vs: &[VertexId], bit: u8) {
        for v in vs {
            self.flag[v.index()] |= bit;
        }
    }

    fn clear(&mut self, vs: &[VertexId], bit: u8) {
        for v in vs {
            self.flag[v.index()] &= !bit;
        }
    }

    /// Neighbours of `v` in `layer` carrying `IN_O` and `IN_C` respectively.
    #[inline]
    fn split_degree(&self, graph: &LayerPair, v: VertexId, layer: Layer) -> (usize, usize) {
        let (mut o, mut c) = (0, 0);
        for w in graph.neighbors(v, layer) {
            let f = self.flag[w.index()];
            o += (f & IN_O != 0) as usize;
            c += (f & IN_C != 0) as usize;
        }
        (o, c)
    }
}

/// Degree-based candidate filter for one layer.
///
/// Any vertex set `X = O ∪ Y`, `Y ⊆ C` non-empty, that is a `delta`
/// quasi-clique of at least `min_size` vertices needs every member to reach
/// `⌈delta·(|X|-1)⌉` neighbours inside `X`. Members of `O` can gain at most
/// `min(deg_C, t)` neighbours when `t = |Y|`, candidates at most
/// `min(deg_C, t-1)`. Both slacks are unimodal in `t`, so the admissible
/// sizes form an interval and a candidate survives iff its slack is
/// non-negative at its peak inside that interval. Iterated to a fixpoint.
fn prune_layer(
    graph: &LayerPair,
    scratch: &mut Scratch,
    members: &[VertexId],
    cand: &mut Vec<VertexId>,
    layer: Layer,
    delta: Rational,
    min_size: usize,
) -> usize {
    let k = members.len();
    let before = cand.len();
    scratch.set(members, IN_O);
    scratch.set(cand, IN_C);
    loop {
        if cand.is_empty() {
            break;
        }
        let need = |t: usize| ceil_mul(delta, k + t - 1) as i64;
        let mut lo = 1.max(min_size.saturating_sub(k));
        let mut hi = cand.len();
        for &u in members {
            if lo > hi {
                break;
            }
            let (a, b) = scratch.split_degree(graph, u, layer);
            let slack = |t: usize| (a + b.min(t)) as i64 - need(t);
            match feasible_interval(slack, b, lo, hi) {
                Some((l, h)) => {
                    lo = l;
                    hi = h;
                }
                None => {
                    lo = 1;
                    hi = 0;
                }
            }
        }
        if lo > hi {
            scratch.clear(cand, IN_C);
            cand.clear();
            break;
        }
        let before_pass = cand.len();
        let mut removed = Vec::new();
        cand.retain(|&v| {
            let (a, b) = scratch.split_degree(graph, v, layer);
            let t = (b + 1).clamp(lo, hi);
            let keep = (a + b.min(t - 1)) as i64 >= need(t);
            if !keep {
                removed.push(v);
            }
            keep
        });
        scratch.clear(&removed, IN_C);
        if cand.len() == before_pass {
            break;
        }
    }
    scratch.clear(members, IN_O);
    scratch.clear(cand, IN_C);
    before - cand.len()
}

/// Single pass of the candidate test alone: drops `v` when no extension size
/// lets `v` itself reach the degree threshold, ignoring what the members need.
fn basic_filter(
    graph: &LayerPair,
    scratch: &mut Scratch,
    members: &[VertexId],
    cand: &mut Vec<VertexId>,
    layer: Layer,
    delta: Rational,
    min_size: usize,
) {
    let k = members.len();
    let lo = 1.max(min_size.saturating_sub(k));
    let hi = cand.len();
    if lo > hi {
        cand.clear();
        return;
    }
    scratch.set(members, IN_O);
    scratch.set(cand, IN_C);
    let before: Vec<VertexId> = cand.clone();
    cand.retain(|&v| {
        let (a, b) = scratch.split_degree(graph, v, layer);
        let t = (b + 1).clamp(lo, hi);
        a + b.min(t - 1) >= ceil_mul(delta, k + t - 1)
    });
    scratch.clear(members, IN_O);
    scratch.clear(&before, IN_C);
}

/// Sub-interval of `[lo, hi]` where a unimodal `slack` (non-decreasing up to
/// `peak`, non-increasing after) is non-negative.
fn feasible_interval(
    slack: impl Fn(usize) -> i64,
    peak: usize,
    lo: usize,
    hi: usize,
) -> Option<(usize, usize)> {
    let p = peak.clamp(lo, hi);
    if slack(p) < 0 {
        return None;
    }
    // first t in [lo, p] with slack >= 0
    let (mut a, mut b) = (lo, p);
    while a < b {
        let mid = a + (b - a) / 2;
        if slack(mid) >= 0 {
            b = mid;
        } else {
            a = mid + 1;
        }
    }
    let left = a;
    // last t in [p, hi] with slack >= 0
    let (mut a, mut b) = (p, hi);
    while a < b {
        let mid = a + (b - a).div_ceil(2);
        if slack(mid) >= 0 {
            a = mid;
        } else {
            b = mid - 1;
        }
    }
    Some((left, a))
}

/// Keeps candidates at distance at most two from `u`.
fn within_two_hops(
    graph: &LayerPair,
    scratch: &mut Scratch,
    u: VertexId,
    cand: &mut Vec<VertexId>,
    layer: Layer,
) -> usize {
    let nb = graph.neighbors(u, layer);
    scratch.set(nb, MARK);
    let before = cand.len();
    cand.retain(|&v| {
        scratch.flag[v.index()] & MARK != 0
            || graph
                .neighbors(v, layer)
                .iter()
                .any(|w| scratch.flag[w.index()] & MARK != 0)
    });
    scratch.clear(nb, MARK);
    before - cand.len()
}

/// `|E_a(O)| − |E_b(O)| + Σ_{v∈C} max{0, deg_a^O(v) − deg_b^O(v) + ½·deg_a^C(v)}`
/// in half units (the returned integer is twice the value).
fn twice_edge_diff_bound(
    graph: &LayerPair,
    scratch: &mut Scratch,
    members: &[VertexId],
    cand: &[VertexId],
    a: Layer,
    b: Layer,
) -> i64 {
    scratch.set(members, IN_O);
    scratch.set(cand, IN_C);
    let mut total: i64 = 0;
    for &u in members {
        let (oa, _) = scratch.split_degree(graph, u, a);
        let (ob, _) = scratch.split_degree(graph, u, b);
        // each internal edge is seen from both endpoints
        total += oa as i64 - ob as i64;
    }
    for &v in cand {
        let (oa, ca) = scratch.split_degree(graph, v, a);
        let (ob, _) = scratch.split_degree(graph, v, b);
        total += (2 * oa as i64 - 2 * ob as i64 + ca as i64).max(0);
    }
    scratch.clear(members, IN_O);
    scratch.clear(cand, IN_C);
    total
}

/// `d_ij(O)` for the node: an upper bound on `|E_i(X)| − |E_j(X)|` over all
/// layer-`i` quasi-cliques `X` with `O ⊂ X ⊆ O ∪ cand_i`.
pub fn edge_diff_bound(graph: &LayerPair, node: &SearchNode, i: Layer, j: Layer) -> Rational {
    let mut scratch = Scratch::new(graph.vertex_count());
    Rational::new(
        twice_edge_diff_bound(
            graph,
            &mut scratch,
            &node.members,
            &node.candidates[i.index()],
            i,
            j,
        ),
        2,
    )
}

/// Upper bound on the score of any proper descendant of the node: `2/|O|`
/// times the largest edge-difference bound over both layers, in both
/// directions, taken over that layer's candidates. Unbounded at the root.
pub fn interestingness_bound(graph: &LayerPair, node: &SearchNode) -> Priority {
    let mut scratch = Scratch::new(graph.vertex_count());
    contrast_bound(graph, &mut scratch, &node.members, &node.candidates)
}

fn contrast_bound(
    graph: &LayerPair,
    scratch: &mut Scratch,
    members: &[VertexId],
    cand: &[Vec<VertexId>; 2],
) -> Priority {
    if members.is_empty() {
        return Priority::Unbounded;
    }
    // A descendant that is dense in layer i lies inside O ∪ cand_i, but its
    // edge surplus may sit in either layer, so both directions are bounded.
    let mut best = i64::MIN;
    for i in Layer::BOTH {
        let c = &cand[i.index()];
        best = best
            .max(twice_edge_diff_bound(
                graph,
                scratch,
                members,
                c,
                i,
                i.other(),
            ))
            .max(twice_edge_diff_bound(
                graph,
                scratch,
                members,
                c,
                i.other(),
                i,
            ));
    }
    // (2/|O|)·(best/2)
    Priority::Finite(Rational::new(best, members.len() as i64))
}

/// Restricts a node's candidate sets in place. Returns the number of removals.
pub fn prune_candidates(
    graph: &LayerPair,
    node: &mut SearchNode,
    params: &MiningParams,
    objective: Objective,
) -> usize {
    let mut scratch = Scratch::new(graph.vertex_count());
    prune_node(
        graph,
        &mut scratch,
        &node.members,
        &mut node.candidates,
        params,
        objective,
    )
}

fn prune_node(
    graph: &LayerPair,
    scratch: &mut Scratch,
    members: &[VertexId],
    cand: &mut [Vec<VertexId>; 2],
    params: &MiningParams,
    objective: Objective,
) -> usize {
    match objective {
        Objective::Contrast => {
            let delta = params.effective_delta();
            let mut removed = 0;
            for layer in Layer::BOTH {
                removed += prune_layer(
                    graph,
                    scratch,
                    members,
                    &mut cand[layer.index()],
                    layer,
                    delta,
                    params.min_size,
                );
            }
            removed
        }
        Objective::CrossGraph => {
            // one shared candidate set, filtered by both layers to a joint fixpoint
            let mut shared = crate::graph::intersection(&cand[0], &cand[1]);
            let mut removed = 0;
            loop {
                let r1 = prune_layer(
                    graph,
                    scratch,
                    members,
                    &mut shared,
                    Layer::First,
                    params.delta,
                    params.min_size,
                );
                let r2 = prune_layer(
                    graph,
                    scratch,
                    members,
                    &mut shared,
                    Layer::Second,
                    params.delta,
                    params.min_size,
                );
                removed += r1 + r2;
                if r2 == 0 {
                    break;
                }
            }
            cand[1] = shared.clone();
            cand[0] = shared;
            removed
        }
    }
}

/// Result of splitting a subtree on one candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub vertex: VertexId,
    /// `O ∪ {u}` when it is a valid pattern with positive score.
    pub pattern: Option<Pattern>,
    /// Subtree at `O ∪ {u}`.
    pub child: SearchNode,
    /// Subtree at `O` without the branch through `u`.
    pub residual: SearchNode,
}

/// Best-first miner over one layer pair.
pub struct Miner<'g> {
    graph: &'g LayerPair,
    params: MiningParams,
    pruning: Pruning,
    objective: Objective,
    scratch: Scratch,
}

impl<'g> Miner<'g> {
    pub fn new(graph: &'g LayerPair, params: &MiningParams) -> Self {
        Miner {
            graph,
            params: params.clone(),
            pruning: Pruning::default(),
            objective: Objective::Contrast,
            scratch: Scratch::new(graph.vertex_count()),
        }
    }

    pub fn pruning(mut self, pruning: Pruning) -> Self {
        self.pruning = pruning;
        self
    }

    pub fn objective(mut self, objective: Objective) -> Self {
        self.objective = objective;
        self
    }

    fn diameter_active(&self) -> bool {
        self.pruning.diameter && self.objective_delta() >= Rational::new(1, 2)
    }

    /// Vertex to branch on: highest summed degree into `O`, smallest id on ties.
    fn pick(&mut self, node: &SearchNode) -> Option<VertexId> {
        let g = self.graph;
        for layer in Layer::BOTH {
            let count = &mut self.scratch.count[layer.index()];
            for &w in &node.members {
                for x in g.neighbors(w, layer) {
                    count[x.index()] += 1;
                }
            }
        }
        let mut best: Option<(u32, VertexId)> = None;
        for list in &node.candidates {
            for &v in list {
                let s = self.scratch.count[0][v.index()] + self.scratch.count[1][v.index()];
                best = match best {
                    Some((bs, bv)) if bs > s || (bs == s && bv <= v) => Some((bs, bv)),
                    _ => Some((s, v)),
                };
            }
        }
        for layer in Layer::BOTH {
            let count = &mut self.scratch.count[layer.index()];
            for &w in &node.members {
                for x in g.neighbors(w, layer) {
                    count[x.index()] = 0;
                }
            }
        }
        best.map(|(_, v)| v)
    }

    fn settle(&mut self, members: &[VertexId], cand: &mut [Vec<VertexId>; 2], stats: &mut Stats) {
        if self.pruning.candidates {
            stats.candidates_pruned += prune_node(
                self.graph,
                &mut self.scratch,
                members,
                cand,
                &self.params,
                self.objective,
            ) as u64;
        } else {
            let g = self.graph;
            let (delta, min_size) = (self.objective_delta(), self.params.min_size);
            match self.objective {
                Objective::Contrast => {
                    for layer in Layer::BOTH {
                        basic_filter(
                            g,
                            &mut self.scratch,
                            members,
                            &mut cand[layer.index()],
                            layer,
                            delta,
                            min_size,
                        );
                    }
                }
                Objective::CrossGraph => {
                    let mut shared = crate::graph::intersection(&cand[0], &cand[1]);
                    for layer in Layer::BOTH {
                        basic_filter(
                            g,
                            &mut self.scratch,
                            members,
                            &mut shared,
                            layer,
                            delta,
                            min_size,
                        );
                    }
                    cand[1] = shared.clone();
                    cand[0] = shared;
                }
            }
        }
    }

    fn objective_delta(&self) -> Rational {
        match self.objective {
            Objective::Contrast => self.params.effective_delta(),
            Objective::CrossGraph => self.params.delta,
        }
    }

    fn bound(&mut self, members: &[VertexId], cand: &[Vec<VertexId>; 2]) -> Priority {
        match self.objective {
            Objective::Contrast => contrast_bound(self.graph, &mut self.scratch, members, cand),
            // no score bound for dense mining; larger reachable sets first
            Objective::CrossGraph => Priority::Finite(Rational::from_integer(
                (members.len() + cand[0].len()) as i64,
            )),
        }
    }

    /// Splits `node` on its best candidate. Candidate sets of both results
    /// are pruned and their bounds computed; `None` if `node` is exhausted.
    pub fn expand(&mut self, node: &SearchNode, stats: &mut Stats) -> Option<Expansion> {
        let u = self.pick(node)?;
        let mut members = node.members.clone();
        let at = members.binary_search(&u).unwrap_err();
        members.insert(at, u);

        let diameter = self.diameter_active();
        let mut child_cand: [Vec<VertexId>; 2] = [Vec::new(), Vec::new()];
        let mut residual_cand = node.candidates.clone();
        for layer in Layer::BOTH {
            let i = layer.index();
            if let Ok(pos) = residual_cand[i].binary_search(&u) {
                residual_cand[i].remove(pos);
                let mut c = residual_cand[i].clone();
                if diameter {
                    stats.candidates_pruned +=
                        within_two_hops(self.graph, &mut self.scratch, u, &mut c, layer) as u64;
                }
                child_cand[i] = c;
            }
        }
        if self.objective == Objective::CrossGraph {
            // a dense-in-both set needs u in both candidate sets
            if child_cand[0].is_empty() != child_cand[1].is_empty() {
                child_cand = [Vec::new(), Vec::new()];
            }
        }

        let pattern = if members.len() >= 2 {
            let p = Pattern::new(self.graph, members.clone(), &self.params)
                .expect("at least two members");
            let valid = match self.objective {
                Objective::Contrast => p.is_interesting(&self.params),
                Objective::CrossGraph => {
                    p.len() >= self.params.min_size
                        && p.gamma[0] >= self.params.delta
                        && p.gamma[1] >= self.params.delta
                }
            };
            valid.then_some(p)
        } else {
            None
        };

        self.settle(&members, &mut child_cand, stats);
        self.settle(&node.members, &mut residual_cand, stats);
        let child_bound = self.bound(&members, &child_cand);
        let residual_bound = self.bound(&node.members, &residual_cand);
        Some(Expansion {
            vertex: u,
            pattern,
            child: SearchNode {
                members,
                candidates: child_cand,
                bound: child_bound,
            },
            residual: SearchNode {
                members: node.members.clone(),
                candidates: residual_cand,
                bound: residual_bound,
            },
        })
    }

    pub fn run(self) -> Run {
        self.run_observed(&mut ())
    }

    pub fn run_observed<O: Observer + ?Sized>(mut self, observer: &mut O) -> Run {
        let graph = self.graph;
        let mut stats = Stats::default();
        let mut result = ResultSet::new();
        let mut heap = BinaryHeap::new();
        let mut seq = 0u64;

        let mut root = SearchNode::root(graph);
        self.settle(&[], &mut root.candidates, &mut stats);
        stats.nodes_visited = 1;
        observer.visit(&root.members);
        observer.enqueue(&root);
        heap.push(Entry {
            priority: root.bound,
            item: Item::Subtree(root),
            seq,
        });

        while let Some(entry) = heap.pop() {
            match entry.item {
                Item::Pattern(p) => {
                    if result.try_accept(graph, p, self.params.r) {
                        stats.patterns_accepted += 1;
                    }
                }
                Item::Subtree(node) => {
                    let Some(exp) = self.expand(&node, &mut stats) else {
                        continue;
                    };
                    stats.expansions += 1;
                    stats.nodes_visited += 1;
                    observer.visit(&exp.child.members);
                    if let Some(p) = exp.pattern {
                        stats.patterns_emitted += 1;
                        observer.emit(&p);
                        if self.objective == Objective::Contrast {
                            seq += 1;
                            heap.push(Entry {
                                priority: Priority::Finite(p.interestingness),
                                item: Item::Pattern(p),
                                seq,
                            });
                        }
                    }
                    for sub in [exp.child, exp.residual] {
                        if sub.is_exhausted() {
                            continue;
                        }
                        if self.pruning.bound
                            && self.objective == Objective::Contrast
                            && sub.bound <= Priority::Finite(Rational::from_integer(0))
                        {
                            stats.subtrees_pruned_by_bound += 1;
                            continue;
                        }
                        observer.enqueue(&sub);
                        seq += 1;
                        heap.push(Entry {
                            priority: sub.bound,
                            item: Item::Subtree(sub),
                            seq,
                        });
                    }
                    stats.max_queue_len = stats.max_queue_len.max(heap.len() as u64);
                }
            }
        }
        Run { result, stats }
    }
}
