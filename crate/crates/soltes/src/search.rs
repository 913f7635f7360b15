//! Isomorph-free enumeration of k-uniform hypergraphs by canonical
//! augmentation, plus the searches and audits built on it.
//!
//! Nodes of the search tree are canonical edge-mask lists. A node's
//! candidate children are its extensions by each absent k-subset; a child is
//! kept when (a) its canonical form was not already produced from this
//! parent and (b) deleting the numerically largest mask of that canonical
//! form and canonicalizing again reproduces the parent. Every isomorphism
//! class with m edges is therefore reached exactly once, from exactly one
//! parent class, and the whole traversal is a deterministic function of the
//! spec.
//!
//! Sharding: a serial prefix explores to a fixed small depth and collects
//! the frontier; each frontier subtree then gets an equal share of the
//! remaining node budget and subtrees are dealt round-robin to worker
//! threads. Results (including budget exhaustion) are identical for every
//! `partitions` value; only wall-clock time changes. Time limits are the one
//! best-effort, nondeterministic stopping mode.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canon_masks, mask_to_edge};
use crate::distance::Distance;
use crate::hypergraph::Hypergraph;
use crate::invariants::{distance_matrix, is_connected, is_soltes, wiener};

/// Largest Wiener index over connected 3-uniform hypergraphs of order 7,
/// attained by a unique isomorphism class. Usable as
/// `wiener_after_deletion_cap` when hunting order-7 witnesses. Re-derived
/// in the tests: every connected 3-uniform hypergraph of order n has a
/// connected spanning subhypergraph with at most n - 2 edges, and adding
/// edges never increases W, so an exhaustive m <= 5 sweep settles it.
pub const MAX_WIENER_3_UNIFORM_ORDER_7: u64 = 38;

/// Largest Wiener index over connected 3-uniform hypergraphs of order 8,
/// attained by a unique isomorphism class; the m <= 6 sweep in the tests
/// settles it.
pub const MAX_WIENER_3_UNIFORM_ORDER_8: u64 = 57;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search spec: {0}")]
    InvalidSpec(String),
}

fn default_true() -> bool {
    true
}

fn default_partitions() -> usize {
    1
}

/// What to enumerate and how hard to try. Deterministic given the spec: the
/// same spec yields the same result on any machine with any `partitions`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchSpec {
    /// Vertex count, at most 64.
    pub n: usize,
    /// Edge size, 2 <= k <= n.
    pub k: usize,
    /// Smallest edge count to report (classes below it are still traversed).
    #[serde(default)]
    pub m_min: usize,
    /// Largest edge count; the tree is not expanded beyond it.
    pub m_max: usize,
    /// Report only classes whose 2-section is connected.
    #[serde(default = "default_true")]
    pub require_connected: bool,
    /// Report only classes every single-vertex deletion of which stays
    /// connected.
    #[serde(default)]
    pub require_all_deletions_connected: bool,
    /// Report only classes with finite Wiener index inside [lo, hi]. Also
    /// prunes: once a connected node's W drops below lo it can never rise.
    #[serde(default)]
    pub wiener_bounds: Option<(u64, u64)>,
    /// Witness filter shortcut for [`search_soltes`]: reject candidates
    /// whose W(H) exceeds this before running the full deletion audit.
    #[serde(default)]
    pub wiener_after_deletion_cap: Option<u64>,
    /// Worker thread count for the subtree phase. Never changes the result.
    #[serde(default = "default_partitions")]
    pub partitions: usize,
    /// Max number of tree nodes to materialize, exactly enforced: a serial
    /// prefix spends from it first and each frontier subtree receives an
    /// equal share of the remainder (the division remainder goes unused).
    #[serde(default)]
    pub node_budget: Option<u64>,
    /// Best-effort wall-clock limit; the only nondeterministic stop.
    #[serde(default)]
    pub time_limit_ms: Option<u64>,
    /// Drop subtrees that can no longer become connected within m_max edges
    /// (each added edge can merge at most k-1 components). Sound; only
    /// consulted when `require_connected` is set.
    #[serde(default = "default_true")]
    pub prune_unconnectable: bool,
}

impl SearchSpec {
    /// Plain spec with the given shape and library defaults for the rest.
    pub fn uniform(n: usize, k: usize, m_max: usize) -> SearchSpec {
        SearchSpec {
            n,
            k,
            m_min: 0,
            m_max,
            require_connected: true,
            require_all_deletions_connected: false,
            wiener_bounds: None,
            wiener_after_deletion_cap: None,
            partitions: 1,
            node_budget: None,
            time_limit_ms: None,
            prune_unconnectable: true,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.k < 2 {
            return Err(SearchError::InvalidSpec(format!(
                "k must be >= 2, got {}",
                self.k
            )));
        }
        if self.k > self.n {
            return Err(SearchError::InvalidSpec(format!(
                "k = {} exceeds n = {}",
                self.k, self.n
            )));
        }
        if self.n > 64 {
            return Err(SearchError::InvalidSpec(format!(
                "n = {} exceeds the 64-vertex mask limit",
                self.n
            )));
        }
        let total = binomial(self.n, self.k);
        if (self.m_max as u128) > total {
            return Err(SearchError::InvalidSpec(format!(
                "m_max = {} exceeds C({}, {}) = {}",
                self.m_max, self.n, self.k, total
            )));
        }
        if self.m_min > self.m_max {
            return Err(SearchError::InvalidSpec(format!(
                "m_min = {} exceeds m_max = {}",
                self.m_min, self.m_max
            )));
        }
        if self.partitions == 0 {
            return Err(SearchError::InvalidSpec("partitions must be >= 1".into()));
        }
        Ok(())
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStatus {
    #[serde(rename = "COMPLETE")]
    Complete,
    #[serde(rename = "EXHAUSTED_BUDGET")]
    ExhaustedBudget,
    #[serde(rename = "TIME_LIMIT")]
    TimeLimit,
}

impl SearchStatus {
    fn severity(self) -> u8 {
        match self {
            SearchStatus::Complete => 0,
            SearchStatus::ExhaustedBudget => 1,
            SearchStatus::TimeLimit => 2,
        }
    }

    fn worse(self, other: SearchStatus) -> SearchStatus {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Tree nodes materialized (isomorphism classes, including those outside
    /// the reporting range). This is what the node budget meters.
    pub nodes_expanded: u64,
    /// Canonical-form computations performed.
    pub canon_calls: u64,
    /// Children discarded by the connectivity-reachability prune.
    pub pruned_unconnectable: u64,
    pub wall_ms: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes_expanded += other.nodes_expanded;
        self.canon_calls += other.canon_calls;
        self.pruned_unconnectable += other.pruned_unconnectable;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub spec: SearchSpec,
    /// Classes that satisfied the structural filters (m-range, connectivity,
    /// Wiener bounds), whether or not they passed the witness filter.
    pub classes_visited: u64,
    pub witnesses: Vec<Hypergraph>,
    pub status: SearchStatus,
    pub stats: SearchStats,
}

struct Engine<'f> {
    n: usize,
    k: usize,
    m_min: usize,
    m_max: usize,
    all_masks: Vec<u64>,
    require_connected: bool,
    require_all_deletions_connected: bool,
    wiener_bounds: Option<(u64, u64)>,
    prune_unconnectable: bool,
    deadline: Option<Instant>,
    filter: &'f (dyn Fn(&Hypergraph) -> bool + Sync),
}

#[derive(Default)]
struct Local {
    budget: Option<u64>,
    stats: SearchStats,
    classes: u64,
    witnesses: Vec<Hypergraph>,
}

impl Local {
    fn new(budget: Option<u64>) -> Local {
        Local {
            budget,
            ..Local::default()
        }
    }
}

/// Component count of the union over edge masks; uncovered vertices are
/// singleton components.
fn components_masks(n: usize, masks: &[u64]) -> usize {
    let mut rows = vec![0u64; n];
    for &m in masks {
        let mut bits = m;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            rows[v] |= m;
        }
    }
    let all: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut visited = 0u64;
    let mut comps = 0;
    while visited != all {
        let v = (!visited & all).trailing_zeros() as usize;
        comps += 1;
        let mut comp = 1u64 << v;
        loop {
            let mut next = 0u64;
            let mut bits = comp;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= rows[u];
            }
            next &= !comp & all;
            if next == 0 {
                break;
            }
            comp |= next;
        }
        visited |= comp;
    }
    comps
}

impl Engine<'_> {
    fn build(&self, masks: &[u64]) -> Hypergraph {
        let edges = masks.iter().map(|&m| mask_to_edge(m)).collect();
        Hypergraph::new(self.n, self.k, edges).expect("masks form a valid hypergraph")
    }

    /// Counts the node against budget and deadline, then reports it if it
    /// satisfies the structural filters.
    fn visit_node_core(&self, node: &[u64], local: &mut Local) -> Result<(), SearchStatus> {
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return Err(SearchStatus::TimeLimit);
            }
        }
        if let Some(b) = &mut local.budget {
            if *b == 0 {
                return Err(SearchStatus::ExhaustedBudget);
            }
            *b -= 1;
        }
        local.stats.nodes_expanded += 1;
        let m = node.len();
        if m < self.m_min || m > self.m_max {
            return Ok(());
        }
        if self.require_connected && components_masks(self.n, node) != 1 {
            return Ok(());
        }
        let h = self.build(node);
        if let Some((lo, hi)) = self.wiener_bounds {
            match wiener(&h) {
                Distance::Finite(w) if (lo..=hi).contains(&w) => {}
                _ => return Ok(()),
            }
        }
        if self.require_all_deletions_connected
            && !(0..h.n() as u32).all(|v| is_connected(&h.delete_vertex(v)))
        {
            return Ok(());
        }
        local.classes += 1;
        if (self.filter)(&h) {
            local.witnesses.push(h);
        }
        Ok(())
    }

    /// Canonical children of a canonical node, each appearing once, in a
    /// deterministic order.
    fn children(&self, node: &[u64], local: &mut Local) -> Vec<Vec<u64>> {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut out = Vec::new();
        for &e in &self.all_masks {
            if node.binary_search(&e).is_ok() {
                continue;
            }
            let mut child: Vec<u64> = Vec::with_capacity(node.len() + 1);
            child.extend_from_slice(node);
            child.push(e);
            child.sort_unstable();
            local.stats.canon_calls += 1;
            let ccanon = canon_masks(self.n, &child);
            if !seen.insert(ccanon.clone()) {
                continue;
            }
            // Parent test: strip the lex-greatest edge of the canonical
            // form; the child belongs to this parent iff that gives back
            // exactly this parent's canonical form.
            let reduced = &ccanon[..ccanon.len() - 1];
            local.stats.canon_calls += 1;
            let pcanon = canon_masks(self.n, reduced);
            if pcanon == node {
                out.push(ccanon);
            }
        }
        out
    }

    fn should_prune(&self, masks: &[u64]) -> bool {
        let m = masks.len();
        if self.prune_unconnectable && self.require_connected {
            let comps = components_masks(self.n, masks);
            if comps - 1 > (self.m_max - m) * (self.k - 1) {
                return true;
            }
        }
        if let Some((lo, _)) = self.wiener_bounds {
            if lo > 0 {
                // W only shrinks as edges are added, so a connected node
                // already below lo can never climb back into range.
                if let Distance::Finite(w) = wiener(&self.build(masks)) {
                    if w < lo {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn visit(&self, node: &[u64], local: &mut Local) -> Result<(), SearchStatus> {
        self.visit_node_core(node, local)?;
        if node.len() < self.m_max {
            for ch in self.children(node, local) {
                if self.should_prune(&ch) {
                    local.stats.pruned_unconnectable += 1;
                    continue;
                }
                self.visit(&ch, local)?;
            }
        }
        Ok(())
    }

    fn visit_prefix(
        &self,
        node: &[u64],
        frontier_depth: usize,
        local: &mut Local,
        frontier: &mut Vec<Vec<u64>>,
    ) -> Result<(), SearchStatus> {
        self.visit_node_core(node, local)?;
        if node.len() < self.m_max {
            for ch in self.children(node, local) {
                if self.should_prune(&ch) {
                    local.stats.pruned_unconnectable += 1;
                    continue;
                }
                if ch.len() == frontier_depth {
                    frontier.push(ch);
                } else {
                    self.visit_prefix(&ch, frontier_depth, local, frontier)?;
                }
            }
        }
        Ok(())
    }
}

fn run(
    spec: &SearchSpec,
    filter: &(dyn Fn(&Hypergraph) -> bool + Sync),
) -> Result<SearchResult, SearchError> {
    spec.validate()?;
    let start = Instant::now();
    let mut all_masks: Vec<u64> = subsets_of_size(spec.n, spec.k);
    all_masks.sort_unstable();
    let engine = Engine {
        n: spec.n,
        k: spec.k,
        m_min: spec.m_min,
        m_max: spec.m_max,
        all_masks,
        require_connected: spec.require_connected,
        require_all_deletions_connected: spec.require_all_deletions_connected,
        wiener_bounds: spec.wiener_bounds,
        prune_unconnectable: spec.prune_unconnectable,
        deadline: spec
            .time_limit_ms
            .map(|ms| start + Duration::from_millis(ms)),
        filter,
    };
    let frontier_depth = spec.m_max.min(3);
    let root: Vec<u64> = Vec::new();
    let mut prefix = Local::new(spec.node_budget);
    let mut frontier: Vec<Vec<u64>> = Vec::new();
    let mut status = SearchStatus::Complete;
    if frontier_depth == 0 {
        frontier.push(root);
    } else if let Err(stop) =
        engine.visit_prefix(&root, frontier_depth, &mut prefix, &mut frontier)
    {
        status = stop;
        frontier.clear();
    }
    let mut stats = std::mem::take(&mut prefix.stats);
    let mut classes = prefix.classes;
    let mut witnesses = std::mem::take(&mut prefix.witnesses);
    if !frontier.is_empty() {
        let per_subtree = prefix.budget.map(|b| b / frontier.len() as u64);
        let threads = spec.partitions.min(frontier.len()).max(1);
        let engine_ref = &engine;
        let frontier_ref = &frontier;
        let mut slots: Vec<Option<(Local, Option<SearchStatus>)>> =
            (0..frontier.len()).map(|_| None).collect();
        std::thread::scope(|sc| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    sc.spawn(move || {
                        let mut done = Vec::new();
                        let mut i = t;
                        while i < frontier_ref.len() {
                            let mut local = Local::new(per_subtree);
                            let stop = engine_ref.visit(&frontier_ref[i], &mut local).err();
                            done.push((i, local, stop));
                            i += threads;
                        }
                        done
                    })
                })
                .collect();
            for handle in handles {
                for (i, local, stop) in handle.join().expect("search worker panicked") {
                    slots[i] = Some((local, stop));
                }
            }
        });
        for slot in slots {
            let (local, stop) = slot.expect("every subtree ran");
            stats.absorb(&local.stats);
            classes += local.classes;
            witnesses.extend(local.witnesses);
            if let Some(stop) = stop {
                status = status.worse(stop);
            }
        }
    }
    stats.wall_ms = start.elapsed().as_millis() as u64;
    Ok(SearchResult {
        spec: spec.clone(),
        classes_visited: classes,
        witnesses,
        status,
        stats,
    })
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, u64, usize)> = vec![(0, 0, 0)];
    while let Some((next, mask, chosen)) = stack.pop() {
        if chosen == k {
            out.push(mask);
            continue;
        }
        if n - next < k - chosen {
            continue;
        }
        // Take or skip `next`; order here is irrelevant, the caller sorts.
        stack.push((next + 1, mask, chosen));
        stack.push((next + 1, mask | 1 << next, chosen + 1));
    }
    out
}

/// Runs the enumeration and hands every reported class to `visitor`. The
/// returned result has its `witnesses` drained (the visitor consumed them);
/// counts and stats are intact.
pub fn enumerate(
    spec: &SearchSpec,
    mut visitor: impl FnMut(&Hypergraph),
) -> Result<SearchResult, SearchError> {
    let mut result = run(spec, &|_| true)?;
    for h in result.witnesses.drain(..) {
        visitor(&h);
    }
    Ok(result)
}

/// Enumerates per the spec and keeps exactly the Šoltés classes as
/// witnesses. `wiener_after_deletion_cap` short-circuits candidates whose
/// Wiener index is already too large to matter.
pub fn search_soltes(spec: &SearchSpec) -> Result<SearchResult, SearchError> {
    let cap = spec.wiener_after_deletion_cap;
    let filter = move |h: &Hypergraph| {
        if let Some(cap) = cap {
            match wiener(h) {
                Distance::Finite(w) if w <= cap => {}
                _ => return false,
            }
        }
        is_soltes(h)
    };
    run(spec, &filter)
}

/// Distance-invariant bounds for connected 4-uniform hypergraphs on 8
/// vertices, checked per class. Returns a violation description, never
/// panics, so sweeps can report rather than abort.
///
/// The bounds: size >= 3 and diameter <= 3; n1 >= 15 with equality only at
/// size 3; diameter 2 forces W <= 41 with equality only at size 3; diameter
/// 3 forces W <= 44 with equality iff size 3; and size >= 4 forces one of
/// (diam <= 2, W <= 40), (diam 3, n3 = 1, W <= 41), (diam 3, n3 = 2,
/// 40 <= W <= 42).
pub fn audit_order8_4uniform(h: &Hypergraph) -> Result<(), String> {
    debug_assert!(h.n() == 8 && h.k() == 4);
    let dm = distance_matrix(h);
    if !dm.is_connected() {
        return Err(format!("audit requires a connected input: {:?}", h.edges()));
    }
    let m = h.m();
    let dd = dm.distribution();
    let (n1, n2, n3) = (dd.at(1), dd.at(2), dd.at(3));
    let w = dm.wiener().finite().expect("connected");
    let diam = dm.diameter().finite().expect("connected");
    let fail = |what: &str| {
        Err(format!(
            "{what}: m={m} diam={diam} n=({n1},{n2},{n3}) W={w} edges={:?}",
            h.edges()
        ))
    };
    // With diameter <= 3 on 28 pairs, W = 56 + n3 - n1 is forced; checking
    // it cross-validates the BFS itself.
    if diam <= 3 && w != 56 + n3 - n1 {
        return fail("distance accounting broken: W != 56 + n3 - n1");
    }
    if m < 3 {
        return fail("connected with fewer than 3 edges");
    }
    if diam > 3 {
        return fail("diameter exceeds 3");
    }
    if n1 < 15 {
        return fail("fewer than 15 adjacent pairs");
    }
    if n1 == 15 && m != 3 {
        return fail("n1 = 15 away from size 3");
    }
    if diam <= 2 {
        if w > 41 {
            return fail("diameter <= 2 with W > 41");
        }
        if w == 41 && m != 3 {
            return fail("W = 41 at diameter 2 away from size 3");
        }
    } else {
        if w > 44 {
            return fail("diameter 3 with W > 44");
        }
        if (w == 44) != (m == 3) {
            return fail("diameter 3: W = 44 must hold exactly at size 3");
        }
    }
    if m >= 4 {
        let ok = (diam <= 2 && w <= 40)
            || (diam == 3 && n3 == 1 && w <= 41)
            || (diam == 3 && n3 == 2 && (40..=42).contains(&w));
        if !ok {
            return fail("size >= 4 trichotomy");
        }
    }
    Ok(())
}

/// In 4-uniform hypergraphs of order 9, a vertex of degree 2 reaches at most
/// 6 others in one step, so its transmission is at least 16 - 6 = 10 (in
/// extended arithmetic when disconnected). Returns the number of degree-2
/// vertices checked.
pub fn audit_order9_degree2(h: &Hypergraph) -> Result<u64, String> {
    debug_assert!(h.n() == 9 && h.k() == 4);
    let dm = distance_matrix(h);
    let mut checked = 0;
    for v in 0..9u32 {
        if h.degree(v) == 2 {
            checked += 1;
            if dm.transmission(v) < Distance::Finite(10) {
                return Err(format!(
                    "degree-2 vertex {v} has transmission {} < 10: {:?}",
                    dm.transmission(v),
                    h.edges()
                ));
            }
        }
    }
    Ok(checked)
}

/// Outcome of [`lemma_suite`]: exhaustive small-size coverage, randomized
/// larger samples, and fixed spot checks, with any violations listed.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaSuiteReport {
    pub seed: u64,
    /// Connected 4-uniform order-8 classes of size <= 5, by size, all
    /// audited exhaustively.
    pub exhaustive_classes_by_size: BTreeMap<usize, u64>,
    /// Random connected order-8 samples audited (sizes 6..=24).
    pub random_samples: u64,
    /// Degree-2 transmission checks performed on random order-9 samples.
    pub degree2_transmission_checks: u64,
    pub spot_checks: Vec<String>,
    pub violations: Vec<String>,
}

impl LemmaSuiteReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for LemmaSuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed: {}", self.seed)?;
        write!(f, "exhaustive connected (n=8, k=4) classes by size:")?;
        for (m, c) in &self.exhaustive_classes_by_size {
            write!(f, " {m}:{c}")?;
        }
        writeln!(f)?;
        writeln!(f, "random connected order-8 samples: {}", self.random_samples)?;
        writeln!(
            f,
            "order-9 degree-2 transmission checks: {}",
            self.degree2_transmission_checks
        )?;
        for s in &self.spot_checks {
            writeln!(f, "spot check: {s}")?;
        }
        if self.violations.is_empty() {
            writeln!(f, "violations: none")?;
        } else {
            for v in &self.violations {
                writeln!(f, "VIOLATION: {v}")?;
            }
        }
        Ok(())
    }
}

fn sample_distinct_masks(rng: &mut ChaCha8Rng, pool: &[u64], m: usize) -> Vec<u64> {
    let mut idx: Vec<usize> = (0..pool.len()).collect();
    for i in 0..m {
        let j = rng.gen_range(i..idx.len());
        idx.swap(i, j);
    }
    idx[..m].iter().map(|&i| pool[i]).collect()
}

/// Audits the distance-invariant bounds: every connected 4-uniform order-8
/// class of size <= 5 exhaustively, `samples` random connected larger ones,
/// a tenth as many random order-9 degree-2 transmission checks, and the two
/// fixed diameter-3 three-edge configurations. Deterministic per seed.
pub fn lemma_suite(samples: u64, seed: u64) -> LemmaSuiteReport {
    let mut violations = Vec::new();
    let mut by_size = BTreeMap::new();
    let mut spec = SearchSpec::uniform(8, 4, 5);
    spec.partitions = 4;
    enumerate(&spec, |h| {
        *by_size.entry(h.m()).or_insert(0u64) += 1;
        if let Err(v) = audit_order8_4uniform(h) {
            violations.push(v);
        }
    })
    .expect("exhaustive spec is valid");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool8 = {
        let mut p = subsets_of_size(8, 4);
        p.sort_unstable();
        p
    };
    for _ in 0..samples {
        let m = rng.gen_range(6..=24);
        let h = loop {
            let masks = sample_distinct_masks(&mut rng, &pool8, m);
            let edges = masks.iter().map(|&mk| mask_to_edge(mk)).collect();
            let h = Hypergraph::new(8, 4, edges).expect("masks are valid edges");
            if is_connected(&h) {
                break h;
            }
        };
        if let Err(v) = audit_order8_4uniform(&h) {
            violations.push(v);
        }
    }

    let pool9 = {
        let mut p = subsets_of_size(9, 4);
        p.sort_unstable();
        p
    };
    let mut degree2_checks = 0;
    for _ in 0..samples / 10 {
        let m = rng.gen_range(3..=18);
        let masks = sample_distinct_masks(&mut rng, &pool9, m);
        let edges = masks.iter().map(|&mk| mask_to_edge(mk)).collect();
        let h = Hypergraph::new(9, 4, edges).expect("masks are valid edges");
        match audit_order9_degree2(&h) {
            Ok(c) => degree2_checks += c,
            Err(v) => violations.push(v),
        }
    }

    let mut spot_checks = Vec::new();
    for (name, third, expect) in [
        ("three edges, ends split 1|3", vec![0u32, 4, 5, 6], (15u64, 10u64, 3u64)),
        ("three edges, ends split 2|2", vec![0, 1, 4, 5], (16, 8, 4)),
    ] {
        let h = Hypergraph::new(
            8,
            4,
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], third],
        )
        .expect("static configuration");
        let dd = distance_matrix(&h).distribution();
        let got = (dd.at(1), dd.at(2), dd.at(3));
        let w = wiener(&h);
        if got == expect && w == Distance::Finite(44) {
            spot_checks.push(format!(
                "{name}: distances {}x1 {}x2 {}x3, W = 44",
                got.0, got.1, got.2
            ));
        } else {
            violations.push(format!(
                "{name}: expected {expect:?} with W = 44, got {got:?} with W = {w}"
            ));
        }
    }

    LemmaSuiteReport {
        seed,
        exhaustive_classes_by_size: by_size,
        random_samples: samples,
        degree2_transmission_checks: degree2_checks,
        spot_checks,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::constructions::cycle_graph;

    fn counts_by_m(spec: &SearchSpec) -> BTreeMap<usize, u64> {
        let mut counts = BTreeMap::new();
        enumerate(spec, |h| {
            *counts.entry(h.m()).or_insert(0u64) += 1;
        })
        .unwrap();
        counts
    }

    fn table(pairs: &[(usize, u64)]) -> BTreeMap<usize, u64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn small_class_counts_match_the_permutation_oracle() {
        // (n=4, k=3), all classes: one per edge count.
        let mut spec = SearchSpec::uniform(4, 3, 4);
        spec.require_connected = false;
        assert_eq!(
            counts_by_m(&spec),
            table(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)])
        );
        // (n=5, k=3), all classes, total 34.
        let mut spec = SearchSpec::uniform(5, 3, 10);
        spec.require_connected = false;
        let c = counts_by_m(&spec);
        assert_eq!(
            c,
            table(&[
                (0, 1),
                (1, 1),
                (2, 2),
                (3, 4),
                (4, 6),
                (5, 6),
                (6, 6),
                (7, 4),
                (8, 2),
                (9, 1),
                (10, 1)
            ])
        );
        // (n=5, k=2), connected classes per edge count, total 21.
        let spec = SearchSpec::uniform(5, 2, 10);
        assert_eq!(
            counts_by_m(&spec),
            table(&[(4, 3), (5, 5), (6, 5), (7, 4), (8, 2), (9, 1), (10, 1)])
        );
        // (n=2, k=2).
        let mut spec = SearchSpec::uniform(2, 2, 1);
        spec.require_connected = false;
        assert_eq!(counts_by_m(&spec), table(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn augmentation_agrees_with_direct_subset_canonicalization() {
        // Independent recount of connected (n=8, k=4) size-3 classes: take
        // every 3-subset of the 70 possible edges, keep the connected ones,
        // and bucket by canonical code.
        let pool = {
            let mut p = subsets_of_size(8, 4);
            p.sort_unstable();
            p
        };
        let mut codes = HashSet::new();
        for a in 0..pool.len() {
            for b in (a + 1)..pool.len() {
                for c in (b + 1)..pool.len() {
                    let masks = [pool[a], pool[b], pool[c]];
                    if components_masks(8, &masks) != 1 {
                        continue;
                    }
                    let edges = masks.iter().map(|&mk| mask_to_edge(mk)).collect();
                    let h = Hypergraph::new(8, 4, edges).unwrap();
                    codes.insert(canonical_code(&h));
                }
            }
        }
        let mut spec = SearchSpec::uniform(8, 4, 3);
        spec.m_min = 3;
        spec.partitions = 4;
        let r = enumerate(&spec, |_| {}).unwrap();
        assert_eq!(r.classes_visited, codes.len() as u64);
    }

    #[test]
    fn partitions_do_not_change_results() {
        let mut base = SearchSpec::uniform(5, 3, 6);
        base.require_connected = false;
        let one = enumerate(&base, |_| {}).unwrap();
        let mut sharded = base.clone();
        sharded.partitions = 4;
        let four = enumerate(&sharded, |_| {}).unwrap();
        assert_eq!(one.classes_visited, four.classes_visited);
        assert_eq!(one.stats.nodes_expanded, four.stats.nodes_expanded);
        assert_eq!(one.stats.canon_calls, four.stats.canon_calls);
        assert_eq!(one.status, SearchStatus::Complete);
        assert_eq!(four.status, SearchStatus::Complete);
    }

    #[test]
    fn budgets_are_exact_and_partition_independent() {
        // The whole (5, 3, m <= 6) tree has 26 nodes; a budget of 10 cuts
        // it off mid-flight the same way at every partition count.
        let mut spec = SearchSpec::uniform(5, 3, 6);
        spec.require_connected = false;
        spec.node_budget = Some(10);
        let a = enumerate(&spec, |_| {}).unwrap();
        assert_eq!(a.status, SearchStatus::ExhaustedBudget);
        assert!(a.stats.nodes_expanded <= 10);
        spec.partitions = 3;
        let b = enumerate(&spec, |_| {}).unwrap();
        assert_eq!(b.status, SearchStatus::ExhaustedBudget);
        assert_eq!(a.classes_visited, b.classes_visited);
        assert_eq!(a.stats.nodes_expanded, b.stats.nodes_expanded);

        spec.node_budget = Some(0);
        let z = enumerate(&spec, |_| {}).unwrap();
        assert_eq!(z.stats.nodes_expanded, 0);
        assert_eq!(z.status, SearchStatus::ExhaustedBudget);

        // A generous budget changes nothing: all 26 classes with m <= 6.
        spec.node_budget = Some(1_000_000);
        spec.partitions = 2;
        let full = enumerate(&spec, |_| {}).unwrap();
        assert_eq!(full.status, SearchStatus::Complete);
        assert_eq!(full.classes_visited, 26);
    }

    #[test]
    fn pruning_does_not_change_reported_classes() {
        // Connected graphs on 6 vertices with at most 5 edges are exactly
        // the 6 spanning trees; the reachability prune cuts work without
        // touching that count.
        let with = SearchSpec::uniform(6, 2, 5);
        let mut without = with.clone();
        without.prune_unconnectable = false;
        let mut census: BTreeMap<u64, u64> = BTreeMap::new();
        let a = enumerate(&with, |h| {
            *census
                .entry(wiener(h).finite().expect("connected"))
                .or_insert(0) += 1;
        })
        .unwrap();
        let b = enumerate(&without, |_| {}).unwrap();
        assert_eq!(a.classes_visited, 6);
        assert_eq!(b.classes_visited, 6);
        assert!(a.stats.nodes_expanded < b.stats.nodes_expanded);
        assert!(a.stats.pruned_unconnectable > 0);
        // Path 35, broom 32, spider(2,2,1) 31, double star 29,
        // spider(2,1,1,1) 28, star 25.
        let expect_census: BTreeMap<u64, u64> = [(25, 1), (28, 1), (29, 1), (31, 1), (32, 1), (35, 1)]
            .into_iter()
            .collect();
        assert_eq!(census, expect_census);
        // Wiener windows must agree with the census: in particular the
        // below-lower-bound subtree prune never costs an in-range class.
        for bounds in [(35, 35), (25, 25), (28, 29), (26, 34)] {
            let mut spec = with.clone();
            spec.wiener_bounds = Some(bounds);
            let w = enumerate(&spec, |_| {}).unwrap();
            let expect: u64 = census
                .iter()
                .filter(|(&wv, _)| (bounds.0..=bounds.1).contains(&wv))
                .map(|(_, c)| c)
                .sum();
            assert_eq!(w.classes_visited, expect, "bounds {bounds:?}");
        }
    }

    #[test]
    fn eleven_cycle_is_the_unique_small_graph_witness() {
        let mut spec = SearchSpec::uniform(11, 2, 11);
        spec.require_all_deletions_connected = true;
        spec.partitions = 8;
        let r = search_soltes(&spec).unwrap();
        assert_eq!(r.status, SearchStatus::Complete);
        assert_eq!(r.witnesses.len(), 1);
        let w = &r.witnesses[0];
        assert_eq!(
            canonical_code(w),
            canonical_code(&cycle_graph(11).unwrap())
        );
    }

    #[test]
    fn wiener_caps_are_exhaustive_maxima() {
        // The first edge covers 3 vertices and each further edge of a greedy
        // spanning subhypergraph covers at least one more, so every
        // connected class contains a connected spanning one with m <= n - 2,
        // and denser classes only have smaller W: sweeping m <= n - 2 is
        // exhaustive for the maximum.
        for (n, cap) in [
            (7, MAX_WIENER_3_UNIFORM_ORDER_7),
            (8, MAX_WIENER_3_UNIFORM_ORDER_8),
        ] {
            let mut spec = SearchSpec::uniform(n, 3, n - 2);
            spec.partitions = 4;
            let mut max = 0u64;
            let mut attained = 0u64;
            enumerate(&spec, |h| {
                let w = wiener(h).finite().expect("connected");
                if w > max {
                    max = w;
                    attained = 1;
                } else if w == max {
                    attained += 1;
                }
            })
            .unwrap();
            assert_eq!((max, attained), (cap, 1), "order {n}");
        }
    }

    #[test]
    fn lemma_suite_smoke() {
        let r = lemma_suite(2_000, 1);
        assert!(r.pass(), "violations: {:?}", r.violations);
        assert_eq!(r.random_samples, 2_000);
        assert!(r.degree2_transmission_checks > 0);
        let sizes: Vec<usize> = r.exhaustive_classes_by_size.keys().copied().collect();
        assert_eq!(sizes, vec![3, 4, 5]);
        assert_eq!(r.spot_checks.len(), 2);
    }

    #[test]
    fn spec_validation_and_serde() {
        assert!(SearchSpec::uniform(65, 2, 1).validate().is_err());
        assert!(SearchSpec::uniform(5, 1, 1).validate().is_err());
        assert!(SearchSpec::uniform(5, 6, 1).validate().is_err());
        assert!(SearchSpec::uniform(5, 2, 11).validate().is_err());
        let mut bad = SearchSpec::uniform(5, 2, 3);
        bad.m_min = 4;
        assert!(bad.validate().is_err());

        let js = r#"{"n":7,"k":3,"m_max":10}"#;
        let spec: SearchSpec = serde_json::from_str(js).unwrap();
        assert_eq!(spec.m_min, 0);
        assert!(spec.require_connected);
        assert!(!spec.require_all_deletions_connected);
        assert_eq!(spec.partitions, 1);
        assert!(spec.prune_unconnectable);
        assert!(serde_json::from_str::<SearchSpec>(r#"{"n":7,"k":3,"m_max":1,"bogus":1}"#).is_err());
        let round: SearchSpec =
            serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(round, spec);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(35, 10), 183_579_396);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(4, 5), 0);
    }
}
