//! Graphs with exact nonnegative rational edge weights (zero allowed), the
//! weighted analogues of the distance invariants, and the weighted Šoltés
//! families: the prism construction over an even cycle and the alternating
//! 0/1 cycle.
//!
//! All arithmetic is exact. Shortest paths are computed by scaling every
//! weight by the least common multiple of the denominators, running Dijkstra
//! over integers (a `u128` fast path, falling back to big integers when the
//! scaled total does not fit), and dividing once at the end.
//!
//! Text format (`.wg`): first content line `n m`, then m lines `u v w` with
//! w a rational like `3` or `193/66`. Blank lines and `#` comments ignored.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::invariants::InvariantError;

/// Exact rational scalar used for weights and weighted distances.
pub type Rational = BigRational;

#[derive(Debug, Error)]
pub enum WeightedError {
    #[error("edge {index} has negative weight")]
    NegativeWeight { index: usize },
    #[error("edge {index} is a loop")]
    LoopEdge { index: usize },
    #[error("edges {index} and its predecessor join the same pair")]
    DuplicatePair { index: usize },
    #[error("edge {index} contains vertex {v}, outside 0..{n}")]
    VertexOutOfRange { index: usize, v: u32, n: usize },
    #[error("cannot integerize: every weight is zero")]
    AllZero,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("weighted graph text: {0}")]
    Parse(String),
}

fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_from_string(s: &str) -> Result<Rational, String> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|e| format!("bad rational {s:?}: {e}"))?;
    Ok(r)
}

/// Serde adapter: rationals travel as strings like `"3"` or `"193/66"`.
mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        rational_from_string(&s).map_err(de::Error::custom)
    }
}

/// A weighted distance: exact rational, or `Infinite` for unreachable pairs.
/// `Infinite` compares greater than every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WDistance {
    Finite(Rational),
    Infinite,
}

impl WDistance {
    pub fn is_finite(&self) -> bool {
        matches!(self, WDistance::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            WDistance::Finite(r) => Some(r),
            WDistance::Infinite => None,
        }
    }
}

impl fmt::Display for WDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WDistance::Finite(r) => f.write_str(&rational_to_string(r)),
            WDistance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for WDistance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct WDistanceVisitor;

impl<'de> Visitor<'de> for WDistanceVisitor {
    type Value = WDistance;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a rational string like \"3\" or \"193/66\", or \"inf\"")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<WDistance, E> {
        if v == "inf" {
            return Ok(WDistance::Infinite);
        }
        let r = rational_from_string(v).map_err(E::custom)?;
        if r.is_negative() {
            return Err(E::custom("negative distance"));
        }
        Ok(WDistance::Finite(r))
    }
}

impl<'de> Deserialize<'de> for WDistance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<WDistance, D::Error> {
        d.deserialize_str(WDistanceVisitor)
    }
}

/// A signed rational change, or `Infinite` when either side was infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WDelta {
    Finite(Rational),
    Infinite,
}

impl WDelta {
    pub fn is_zero(&self) -> bool {
        matches!(self, WDelta::Finite(r) if r.is_zero())
    }
}

impl fmt::Display for WDelta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WDelta::Finite(r) => f.write_str(&rational_to_string(r)),
            WDelta::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for WDelta {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct WDeltaVisitor;

impl<'de> Visitor<'de> for WDeltaVisitor {
    type Value = WDelta;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a rational string, or \"inf\"")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<WDelta, E> {
        if v == "inf" {
            Ok(WDelta::Infinite)
        } else {
            rational_from_string(v).map(WDelta::Finite).map_err(E::custom)
        }
    }
}

impl<'de> Deserialize<'de> for WDelta {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<WDelta, D::Error> {
        d.deserialize_str(WDeltaVisitor)
    }
}

/// One weighted edge, stored with u < v.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub u: u32,
    pub v: u32,
    #[serde(with = "rational_string")]
    pub w: Rational,
}

#[derive(Deserialize)]
struct RawWeightedGraph {
    n: usize,
    edges: Vec<WeightedEdge>,
}

/// A simple graph with exact nonnegative rational edge weights.
///
/// Invariants: no loops, no repeated pairs, endpoints stored with u < v,
/// edge list sorted by (u, v).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWeightedGraph")]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<WeightedEdge>,
}

impl TryFrom<RawWeightedGraph> for WeightedGraph {
    type Error = WeightedError;
    fn try_from(raw: RawWeightedGraph) -> Result<Self, Self::Error> {
        WeightedGraph::new(
            raw.n,
            raw.edges.into_iter().map(|e| (e.u, e.v, e.w)),
        )
    }
}

impl WeightedGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (u32, u32, Rational)>,
    ) -> Result<WeightedGraph, WeightedError> {
        let mut norm: Vec<WeightedEdge> = Vec::new();
        for (index, (a, b, w)) in edges.into_iter().enumerate() {
            if a == b {
                return Err(WeightedError::LoopEdge { index });
            }
            for &x in [a, b].iter() {
                if x as usize >= n {
                    return Err(WeightedError::VertexOutOfRange { index, v: x, n });
                }
            }
            if w.is_negative() {
                return Err(WeightedError::NegativeWeight { index });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            norm.push(WeightedEdge { u, v, w });
        }
        norm.sort_by(|a, b| (a.u, a.v).cmp(&(b.u, b.v)));
        for (i, pair) in norm.windows(2).enumerate() {
            if (pair[0].u, pair[0].v) == (pair[1].u, pair[1].v) {
                return Err(WeightedError::DuplicatePair { index: i + 1 });
            }
        }
        Ok(WeightedGraph { n, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    /// Deletes v and its incident edges, shifting labels above v down by one.
    pub fn delete_vertex(&self, v: u32) -> WeightedGraph {
        assert!((v as usize) < self.n, "vertex {v} out of range");
        let shift = |u: u32| if u > v { u - 1 } else { u };
        let edges = self
            .edges
            .iter()
            .filter(|e| e.u != v && e.v != v)
            .map(|e| (shift(e.u), shift(e.v), e.w.clone()));
        WeightedGraph::new(self.n - 1, edges).expect("deletion preserves invariants")
    }

    /// Parses the `.wg` text format.
    pub fn from_wg_str(text: &str) -> Result<WeightedGraph, WeightedError> {
        let mut lines = text
            .lines()
            .map(|line| line.split('#').next().unwrap_or("").trim())
            .filter(|line| !line.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| WeightedError::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| WeightedError::Parse("bad n in header".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| WeightedError::Parse("bad m in header".into()))?;
        if it.next().is_some() {
            return Err(WeightedError::Parse("header has trailing tokens".into()));
        }
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| WeightedError::Parse(format!("expected {m} edges, got {i}")))?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(WeightedError::Parse(format!(
                    "edge line {i} needs `u v w`, got {line:?}"
                )));
            }
            let u: u32 = toks[0]
                .parse()
                .map_err(|_| WeightedError::Parse(format!("bad endpoint {:?}", toks[0])))?;
            let v: u32 = toks[1]
                .parse()
                .map_err(|_| WeightedError::Parse(format!("bad endpoint {:?}", toks[1])))?;
            let w = rational_from_string(toks[2]).map_err(WeightedError::Parse)?;
            edges.push((u, v, w));
        }
        if lines.next().is_some() {
            return Err(WeightedError::Parse("unexpected content after edges".into()));
        }
        WeightedGraph::new(n, edges)
    }

    /// Emits the `.wg` text format.
    pub fn to_wg_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, rational_to_string(&e.w));
        }
        out
    }

    fn adjacency_unweighted(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u as usize].push(e.v);
            adj[e.v as usize].push(e.u);
        }
        adj
    }

    /// Graph connectivity (zero-weight edges still connect).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency_unweighted();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v as usize] {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }
}

/// Edge weights scaled by the common denominator, ready for integer
/// Dijkstra. `Small` is the `u128` fast path; relax sums cannot overflow it
/// because every shortest path is bounded by the total weight, which is
/// checked to fit. `Big` handles adversarially huge inputs.
struct Scaled {
    n: usize,
    lcm: BigInt,
    adj: ScaledAdj,
}

enum ScaledAdj {
    Small(Vec<Vec<(u32, u128)>>),
    Big(Vec<Vec<(u32, BigUint)>>),
}

impl Scaled {
    fn build(g: &WeightedGraph) -> Scaled {
        let mut lcm = BigInt::one();
        for e in g.edges() {
            lcm = lcm.lcm(e.w.denom());
        }
        let scaled: Vec<BigUint> = g
            .edges()
            .iter()
            .map(|e| {
                (e.w.numer() * (&lcm / e.w.denom()))
                    .to_biguint()
                    .expect("weights are nonnegative")
            })
            .collect();
        let total: BigUint = scaled.iter().sum();
        let adj = if total.to_u128().is_some() {
            let mut adj = vec![Vec::new(); g.n()];
            for (e, w) in g.edges().iter().zip(&scaled) {
                let w = w.to_u128().expect("bounded by total");
                adj[e.u as usize].push((e.v, w));
                adj[e.v as usize].push((e.u, w));
            }
            ScaledAdj::Small(adj)
        } else {
            let mut adj = vec![Vec::new(); g.n()];
            for (e, w) in g.edges().iter().zip(&scaled) {
                adj[e.u as usize].push((e.v, w.clone()));
                adj[e.v as usize].push((e.u, w.clone()));
            }
            ScaledAdj::Big(adj)
        };
        Scaled {
            n: g.n(),
            lcm,
            adj,
        }
    }

    /// Scaled shortest-path distances from src, ignoring `skip` entirely.
    fn dist_from(&self, src: usize, skip: Option<usize>) -> Vec<Option<BigUint>> {
        debug_assert!(Some(src) != skip);
        match &self.adj {
            ScaledAdj::Small(adj) => {
                let mut dist: Vec<Option<u128>> = vec![None; self.n];
                let mut heap = BinaryHeap::new();
                dist[src] = Some(0);
                heap.push(Reverse((0u128, src as u32)));
                while let Some(Reverse((d, v))) = heap.pop() {
                    if dist[v as usize] != Some(d) {
                        continue;
                    }
                    for &(u, w) in &adj[v as usize] {
                        if Some(u as usize) == skip {
                            continue;
                        }
                        let nd = d + w;
                        if dist[u as usize].is_none_or(|cur| nd < cur) {
                            dist[u as usize] = Some(nd);
                            heap.push(Reverse((nd, u)));
                        }
                    }
                }
                dist.into_iter().map(|d| d.map(BigUint::from)).collect()
            }
            ScaledAdj::Big(adj) => {
                let mut dist: Vec<Option<BigUint>> = vec![None; self.n];
                let mut heap = BinaryHeap::new();
                dist[src] = Some(BigUint::zero());
                heap.push(Reverse((BigUint::zero(), src as u32)));
                while let Some(Reverse((d, v))) = heap.pop() {
                    if dist[v as usize].as_ref() != Some(&d) {
                        continue;
                    }
                    for (u, w) in &adj[v as usize] {
                        if Some(*u as usize) == skip {
                            continue;
                        }
                        let nd = &d + w;
                        if dist[*u as usize].as_ref().is_none_or(|cur| &nd < cur) {
                            dist[*u as usize] = Some(nd.clone());
                            heap.push(Reverse((nd, *u)));
                        }
                    }
                }
                dist
            }
        }
    }

    fn unscale(&self, d: &BigUint) -> Rational {
        Rational::new(BigInt::from(d.clone()), self.lcm.clone())
    }
}

/// Shortest-path distances from one vertex.
pub fn distances_w(g: &WeightedGraph, src: u32) -> Vec<WDistance> {
    assert!((src as usize) < g.n());
    let sc = Scaled::build(g);
    sc.dist_from(src as usize, None)
        .iter()
        .map(|d| match d {
            Some(d) => WDistance::Finite(sc.unscale(d)),
            None => WDistance::Infinite,
        })
        .collect()
}

/// Weighted Wiener index: sum of exact shortest-path distances over
/// unordered pairs.
pub fn wiener_w(g: &WeightedGraph) -> WDistance {
    let sc = Scaled::build(g);
    let mut total = BigUint::zero();
    for u in 0..g.n() {
        let row = sc.dist_from(u, None);
        for d in row.iter().skip(u + 1) {
            match d {
                Some(d) => total += d,
                None => return WDistance::Infinite,
            }
        }
    }
    WDistance::Finite(sc.unscale(&total))
}

/// Weighted transmission of v: sum of distances from v to all others.
pub fn transmission_w(g: &WeightedGraph, v: u32) -> WDistance {
    assert!((v as usize) < g.n());
    let sc = Scaled::build(g);
    let row = sc.dist_from(v as usize, None);
    let mut total = BigUint::zero();
    for (u, d) in row.iter().enumerate() {
        if u == v as usize {
            continue;
        }
        match d {
            Some(d) => total += d,
            None => return WDistance::Infinite,
        }
    }
    WDistance::Finite(sc.unscale(&total))
}

pub fn delete_vertex_w(g: &WeightedGraph, v: u32) -> WeightedGraph {
    g.delete_vertex(v)
}

/// Sum over pairs u < w (both != v) of d_{G-v}(u,w) - d_G(u,w). Requires G
/// connected; `Infinite` when the deletion disconnects the rest.
pub fn detour_sum_w(g: &WeightedGraph, v: u32) -> Result<WDelta, InvariantError> {
    assert!((v as usize) < g.n());
    if !g.is_connected() {
        return Err(InvariantError::NotConnected);
    }
    let sc = Scaled::build(g);
    Ok(detour_sum_scaled(g, v, &sc)
        .map(|d| WDelta::Finite(sc.unscale(&d)))
        .unwrap_or(WDelta::Infinite))
}

/// Scaled detour sum, `None` when G - v is disconnected. Assumes G connected.
fn detour_sum_scaled(g: &WeightedGraph, v: u32, sc: &Scaled) -> Option<BigUint> {
    let v = v as usize;
    let mut total = BigUint::zero();
    for u in 0..g.n() {
        if u == v {
            continue;
        }
        let before = sc.dist_from(u, None);
        let after = sc.dist_from(u, Some(v));
        for w in (u + 1)..g.n() {
            if w == v {
                continue;
            }
            let a = after[w].as_ref()?;
            let b = before[w].as_ref().expect("G is connected");
            total += a - b;
        }
    }
    Some(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WVertexReport {
    pub label: u32,
    pub sigma: WDistance,
    pub detour_sum: WDistance,
    pub wiener_after: WDistance,
    pub delta: WDelta,
}

/// Weighted analogue of [`crate::invariants::SoltesReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WSoltesReport {
    pub wiener: WDistance,
    pub vertices: Vec<WVertexReport>,
    pub verdict: bool,
}

/// Audits every single-vertex deletion of a weighted graph, exactly.
///
/// W(G - v) is recomputed from scratch with v excluded; when everything is
/// finite the identity W(G-v) + sigma(v) = W(G) + detour_sum(v) is asserted.
pub fn soltes_report_w(g: &WeightedGraph) -> WSoltesReport {
    let sc = Scaled::build(g);
    let n = g.n();
    let full: Vec<Vec<Option<BigUint>>> = (0..n).map(|u| sc.dist_from(u, None)).collect();
    let connected = n <= 1
        || full
            .iter()
            .all(|row| row.iter().all(|d| d.is_some()));
    let wiener_scaled: Option<BigUint> = if connected {
        let mut total = BigUint::zero();
        for (u, row) in full.iter().enumerate() {
            for d in row.iter().skip(u + 1) {
                total += d.as_ref().expect("connected");
            }
        }
        Some(total)
    } else {
        None
    };
    let wiener = match &wiener_scaled {
        Some(w) => WDistance::Finite(sc.unscale(w)),
        None => WDistance::Infinite,
    };
    let mut vertices = Vec::with_capacity(n);
    let mut verdict = wiener.is_finite() && n > 0;
    for v in 0..n {
        let sigma_scaled: Option<BigUint> = {
            let mut total = BigUint::zero();
            let mut ok = true;
            for (u, d) in full[v].iter().enumerate() {
                if u == v {
                    continue;
                }
                match d {
                    Some(d) => total += d,
                    None => ok = false,
                }
            }
            ok.then_some(total)
        };
        // One pass of skip-Dijkstras gives both W(G - v) and the detours.
        let mut after_ok = true;
        let mut wiener_after_scaled = BigUint::zero();
        let mut detour_scaled = BigUint::zero();
        for u in 0..n {
            if u == v || !after_ok {
                continue;
            }
            let after = sc.dist_from(u, Some(v));
            for w in (u + 1)..n {
                if w == v {
                    continue;
                }
                match &after[w] {
                    Some(a) => {
                        wiener_after_scaled += a;
                        if connected {
                            detour_scaled += a - full[u][w].as_ref().expect("connected");
                        }
                    }
                    None => {
                        after_ok = false;
                        break;
                    }
                }
            }
        }
        let wiener_after = if after_ok && n > 1 {
            WDistance::Finite(sc.unscale(&wiener_after_scaled))
        } else if n == 1 {
            WDistance::Finite(Rational::zero())
        } else {
            WDistance::Infinite
        };
        let detour = if connected && after_ok {
            WDistance::Finite(sc.unscale(&detour_scaled))
        } else {
            WDistance::Infinite
        };
        if let (Some(wb), Some(sg)) = (&wiener_scaled, &sigma_scaled) {
            if after_ok && connected {
                assert_eq!(
                    &wiener_after_scaled + sg,
                    wb + &detour_scaled,
                    "deletion identity violated at vertex {v}"
                );
            }
        }
        let delta = match (&wiener_after, &wiener) {
            (WDistance::Finite(a), WDistance::Finite(b)) => WDelta::Finite(a - b),
            _ => WDelta::Infinite,
        };
        if !(wiener_after.is_finite() && wiener_after == wiener) {
            verdict = false;
        }
        vertices.push(WVertexReport {
            label: v as u32,
            sigma: match sigma_scaled {
                Some(s) => WDistance::Finite(sc.unscale(&s)),
                None => WDistance::Infinite,
            },
            detour_sum: detour,
            wiener_after,
            delta,
        });
    }
    WSoltesReport {
        wiener,
        vertices,
        verdict,
    }
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rat_int(x: i64) -> Rational {
    Rational::from_integer(big(x))
}

/// Rung weight x(k) = (2k^2 - 6k + 16) / (k^2 - 9k + 12) of the Šoltés
/// prism; strictly between 2 and 3 for k > 20 and exactly 3 at k = 20.
pub fn prism_rung_weight(k: u64) -> Rational {
    let k = k as i64;
    Rational::new(big(2 * k * k - 6 * k + 16), big(k * k - 9 * k + 12))
}

/// Closed form for the Wiener index of the Šoltés prism: n^3/2 + n^2 x with
/// n = 2k the cycle length.
pub fn prism_wiener_closed_form(k: u64) -> Rational {
    let n = rat_int(2 * k as i64);
    let x = prism_rung_weight(k);
    &n * &n * &n / rat_int(2) + &n * &n * x
}

/// Closed form for every vertex's transmission in the Šoltés prism:
/// 2k^2 + 2kx.
pub fn prism_transmission_closed_form(k: u64) -> Rational {
    let k2 = rat_int(2 * k as i64);
    let x = prism_rung_weight(k);
    &k2 * rat_int(k as i64) + k2 * x
}

/// Closed form for every vertex's detour sum in the Šoltés prism:
/// 6k - 16 + x (k-3) (k-4). Detours arise only between same-rim pairs whose
/// shortest paths ran through the deleted vertex.
pub fn prism_detour_closed_form(k: u64) -> Rational {
    let k = k as i64;
    let x = prism_rung_weight(k as u64);
    rat_int(6 * k - 16) + x * rat_int(k - 3) * rat_int(k - 4)
}

/// The weighted prism over the cycle C_{2k} (4k vertices): two rim cycles
/// with unit weights joined by rungs of weight x(k). Šoltés for every
/// k >= 20. Vertices 0..2k are rim A in cycle order, 2k..4k rim B, with rung
/// i joining i and 2k + i.
pub fn prism_soltes(k: u64) -> Result<WeightedGraph, WeightedError> {
    if k < 20 {
        return Err(WeightedError::ParamOutOfRange(format!(
            "prism requires k >= 20, got {k}"
        )));
    }
    let len = (2 * k) as u32;
    let x = prism_rung_weight(k);
    let one = Rational::one();
    let mut edges = Vec::with_capacity(3 * len as usize);
    for i in 0..len {
        edges.push((i, (i + 1) % len, one.clone()));
        edges.push((len + i, len + (i + 1) % len, one.clone()));
        edges.push((i, len + i, x.clone()));
    }
    WeightedGraph::new((4 * k) as usize, edges)
}

/// The 10-cycle whose edge weights alternate 0, 1, 0, 1, ...: the smallest
/// known Šoltés weighted graph once zero weights are allowed.
pub fn cycle_alternating_01() -> WeightedGraph {
    let edges = (0..10u32).map(|i| {
        (
            i,
            (i + 1) % 10,
            Rational::from_integer(BigInt::from(i % 2)),
        )
    });
    WeightedGraph::new(10, edges).expect("static construction is valid")
}

/// Rescales all weights by one positive rational so they become integers
/// with overall gcd 1. Returns the new graph and the scale factor applied.
/// Shortest paths, and hence the Šoltés verdict, are invariant under the
/// rescaling. Errors with `AllZero` if there is no nonzero weight.
pub fn integerize(g: &WeightedGraph) -> Result<(WeightedGraph, Rational), WeightedError> {
    let mut lcm = BigInt::one();
    for e in g.edges() {
        lcm = lcm.lcm(e.w.denom());
    }
    let ints: Vec<BigInt> = g.edges().iter().map(|e| e.w.numer() * (&lcm / e.w.denom())).collect();
    let mut g0 = BigInt::zero();
    for i in &ints {
        g0 = g0.gcd(i);
    }
    if g0.is_zero() {
        return Err(WeightedError::AllZero);
    }
    let scale = Rational::new(lcm, g0);
    let edges = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v, &e.w * &scale));
    let out = WeightedGraph::new(g.n(), edges)?;
    Ok((out, scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(big(p), big(q))
    }

    #[test]
    fn rational_string_pins() {
        assert_eq!(rational_to_string(&rat(3, 1)), "3");
        assert_eq!(rational_to_string(&rat(193, 66)), "193/66");
        assert_eq!(rational_from_string("193/66").unwrap(), rat(193, 66));
        assert_eq!(rational_from_string("3").unwrap(), rat(3, 1));
    }

    #[test]
    fn validation() {
        assert!(matches!(
            WeightedGraph::new(3, [(0, 0, rat_int(1))]),
            Err(WeightedError::LoopEdge { .. })
        ));
        assert!(matches!(
            WeightedGraph::new(3, [(0, 1, rat(-1, 2))]),
            Err(WeightedError::NegativeWeight { .. })
        ));
        assert!(matches!(
            WeightedGraph::new(3, [(0, 1, rat_int(1)), (1, 0, rat_int(2))]),
            Err(WeightedError::DuplicatePair { .. })
        ));
        assert!(matches!(
            WeightedGraph::new(3, [(0, 5, rat_int(1))]),
            Err(WeightedError::VertexOutOfRange { v: 5, .. })
        ));
    }

    #[test]
    fn zero_weights_are_distances_zero() {
        let g = WeightedGraph::new(3, [(0, 1, rat_int(0)), (1, 2, rat_int(2))]).unwrap();
        let d = distances_w(&g, 0);
        assert_eq!(d[1], WDistance::Finite(rat_int(0)));
        assert_eq!(d[2], WDistance::Finite(rat_int(2)));
        assert_eq!(wiener_w(&g), WDistance::Finite(rat_int(4)));
        assert!(g.is_connected());
    }

    #[test]
    fn alternating_cycle_is_soltes() {
        let g = cycle_alternating_01();
        let r = soltes_report_w(&g);
        assert_eq!(r.wiener, WDistance::Finite(rat_int(60)));
        assert!(r.verdict);
        for row in &r.vertices {
            assert_eq!(row.sigma, WDistance::Finite(rat_int(12)));
            assert!(row.delta.is_zero());
        }
        // Weighted eccentricity is 2 from every vertex.
        for v in 0..10 {
            let ecc = distances_w(&g, v).into_iter().max().unwrap();
            assert_eq!(ecc, WDistance::Finite(rat_int(2)));
        }
    }

    #[test]
    fn prism_20_exact_values() {
        assert_eq!(prism_rung_weight(20), rat_int(3));
        let g = prism_soltes(20).unwrap();
        assert_eq!(g.n(), 80);
        assert_eq!(g.m(), 120);
        assert_eq!(wiener_w(&g), WDistance::Finite(rat_int(36800)));
        assert_eq!(transmission_w(&g, 0), WDistance::Finite(rat_int(920)));
        assert_eq!(
            detour_sum_w(&g, 0).unwrap(),
            WDelta::Finite(rat_int(920))
        );
        // Antipodal rim vertices sit a full half-cycle apart; the rungs are
        // too heavy to shortcut.
        let d = distances_w(&g, 0);
        assert_eq!(d[20], WDistance::Finite(rat_int(20)));
        assert!(prism_soltes(19).is_err());
    }

    #[test]
    fn prism_report_and_closed_forms() {
        for k in [20u64, 21, 33] {
            let g = prism_soltes(k).unwrap();
            let r = soltes_report_w(&g);
            assert!(r.verdict, "prism({k}) must be Šoltés");
            assert_eq!(
                r.wiener,
                WDistance::Finite(prism_wiener_closed_form(k)),
                "W closed form at k={k}"
            );
            let sigma = WDistance::Finite(prism_transmission_closed_form(k));
            let detour = WDistance::Finite(prism_detour_closed_form(k));
            for row in &r.vertices {
                assert_eq!(row.sigma, sigma);
                assert_eq!(row.detour_sum, detour);
            }
        }
        assert_eq!(prism_rung_weight(21), rat(193, 66));
        let g21 = prism_soltes(21).unwrap();
        assert_eq!(wiener_w(&g21), WDistance::Finite(rat(464226, 11)));
    }

    #[test]
    fn deletion_matches_skip_based_report() {
        let g = prism_soltes(20).unwrap();
        let r = soltes_report_w(&g);
        let d0 = delete_vertex_w(&g, 0);
        assert_eq!(wiener_w(&d0), r.vertices[0].wiener_after);
    }

    #[test]
    fn integerize_prism_21() {
        let g = prism_soltes(21).unwrap();
        let (gi, scale) = integerize(&g).unwrap();
        assert_eq!(scale, rat_int(66));
        let mut weights: Vec<Rational> = gi.edges().iter().map(|e| e.w.clone()).collect();
        weights.sort();
        weights.dedup();
        assert_eq!(weights, vec![rat_int(66), rat_int(193)]);
        assert!(soltes_report_w(&gi).verdict);
    }

    #[test]
    fn integerize_edge_cases() {
        let g = cycle_alternating_01();
        let (gi, scale) = integerize(&g).unwrap();
        assert_eq!(scale, rat_int(1));
        assert_eq!(gi, g);

        let zeros = WeightedGraph::new(2, [(0, 1, rat_int(0))]).unwrap();
        assert!(matches!(integerize(&zeros), Err(WeightedError::AllZero)));
    }

    #[test]
    fn huge_weights_take_the_big_path() {
        let huge = Rational::from_integer(BigInt::one() << 130);
        let g = WeightedGraph::new(
            3,
            [(0, 1, huge.clone()), (1, 2, rat_int(1))],
        )
        .unwrap();
        let d = distances_w(&g, 0);
        assert_eq!(
            d[2],
            WDistance::Finite(huge + rat_int(1))
        );
    }

    #[test]
    fn wg_round_trip() {
        let g = prism_soltes(21).unwrap();
        let text = g.to_wg_string();
        assert!(text.contains("193/66"));
        let back = WeightedGraph::from_wg_str(&text).unwrap();
        assert_eq!(back, g);

        let small = "3 2\n0 1 0\n1 2 5/3\n";
        let s = WeightedGraph::from_wg_str(small).unwrap();
        assert_eq!(s.n(), 3);
        assert_eq!(s.edges()[1].w, rat(5, 3));
        assert!(WeightedGraph::from_wg_str("3 2\n0 1 1\n").is_err());
        assert!(WeightedGraph::from_wg_str("3 1\n0 1 -2\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = cycle_alternating_01();
        let js = serde_json::to_string(&g).unwrap();
        let back: WeightedGraph = serde_json::from_str(&js).unwrap();
        assert_eq!(back, g);
        let r = soltes_report_w(&g);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["wiener"], serde_json::json!("60"));
        assert_eq!(v["verdict"], serde_json::json!(true));
        assert_eq!(v["vertices"][0]["delta"], serde_json::json!("0"));
    }

    #[test]
    fn disconnected_weighted() {
        let g = WeightedGraph::new(4, [(0, 1, rat_int(1)), (2, 3, rat_int(1))]).unwrap();
        assert_eq!(wiener_w(&g), WDistance::Infinite);
        assert!(!g.is_connected());
        assert!(matches!(
            detour_sum_w(&g, 0),
            Err(InvariantError::NotConnected)
        ));
        let r = soltes_report_w(&g);
        assert!(!r.verdict);
        assert_eq!(r.wiener, WDistance::Infinite);
    }
}
