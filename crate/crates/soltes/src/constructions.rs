//! The known Šoltés hypergraph families and reference non-examples.
//!
//! * [`knits`]: for every n >= 92, an n-vertex, n-edge, k-uniform hypergraph
//!   of diameter 1 whose every deletion leaves exactly n - 1 non-adjacent
//!   pairs, so W stays at C(n, 2).
//! * [`general_r`]: the r-parameterized generalization; r = 1 reproduces the
//!   knit family. The defining index ranges admit more than one reading, so
//!   the convention is an explicit argument; see [`Convention`].
//! * [`irregular54`]: a 54-vertex, 9-uniform, non-regular example with 27
//!   edges and Wiener index 2349.
//! * [`cycle_graph`]: plain cycles as 2-uniform hypergraphs (C11 is Šoltés,
//!   no other C_n with n <= 10 is).
//!
//! Weighted constructions (prisms, the alternating cycle) live in
//! [`crate::weighted`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::invariants::distance_matrix;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("convention {convention:?} yields edge {index} with {size} vertices, expected {k}")]
    BadConvention {
        convention: Convention,
        index: usize,
        size: usize,
        k: usize,
    },
    #[error("construction self-check failed: {0}")]
    SelfCheck(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// Which variant a constructed object came from, for JSON descriptors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "KNITS")]
    Knits,
    #[serde(rename = "GENERAL_R")]
    GeneralR,
    #[serde(rename = "IRREGULAR54")]
    Irregular54,
    #[serde(rename = "CYCLE")]
    Cycle,
    #[serde(rename = "PRISM")]
    Prism,
}

/// JSON descriptor of a construction call: the variant, the parameters that
/// were used (those that apply), and the derived order n and uniformity k
/// (for the prism, k is the prism parameter and n = 4k its order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub variant: Variant,
    pub s: Option<u64>,
    pub t: Option<u64>,
    pub r: Option<u64>,
    pub n: u64,
    pub k: u64,
    pub convention: Option<Convention>,
}

/// Parameters of the knit hypergraph on n vertices: the smallest s with
/// C(s, 2) >= n, the slack t = C(s, 2) - n, and the resulting uniformity
/// k = n - (t + 2s + 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnitsParams {
    pub s: u64,
    pub t: u64,
    pub k: u64,
}

/// Smallest n this module accepts for [`knits`]. The construction degrades
/// below this point (the covering argument needs k - 2 >= n / 2 with slack);
/// values 92..100 are valid but tighter than the headline family, and the
/// CLI warns about them.
pub const KNITS_MIN_N: u64 = 92;

pub fn knits_params(n: u64) -> Result<KnitsParams, ConstructionError> {
    if n < KNITS_MIN_N {
        return Err(ConstructionError::ParamOutOfRange(format!(
            "knits requires n >= {KNITS_MIN_N}, got {n}"
        )));
    }
    let mut s = 2u64;
    while s * (s - 1) / 2 < n {
        s += 1;
    }
    let t = s * (s - 1) / 2 - n;
    if t + 2 > s {
        return Err(ConstructionError::ParamOutOfRange(format!(
            "no knit parameters for n = {n}: slack t = {t} exceeds s - 2 = {}",
            s - 2
        )));
    }
    let k = n - (t + 2 * s + 1);
    Ok(KnitsParams { s, t, k })
}

/// The knit hypergraph on n vertices (n >= 92): n edges
/// e_i = {i, i + 2s + k - 1} union {i + s + 1, ..., i + s + k - 2} mod n.
///
/// Validates that every edge really has k distinct vertices and that
/// k - 2 >= n / 2 (which forces diameter 1) before returning.
pub fn knits(n: u64) -> Result<Hypergraph, ConstructionError> {
    let KnitsParams { s, t: _, k } = knits_params(n)?;
    if 2 * (k - 2) < n {
        return Err(ConstructionError::SelfCheck(format!(
            "knits({n}): k - 2 = {} is below n / 2",
            k - 2
        )));
    }
    let mut edges = Vec::with_capacity(n as usize);
    for i in 0..n {
        let mut e = BTreeSet::new();
        e.insert((i % n) as u32);
        e.insert(((i + 2 * s + k - 1) % n) as u32);
        for j in (i + s + 1)..(i + s + k - 1) {
            e.insert((j % n) as u32);
        }
        if e.len() as u64 != k {
            return Err(ConstructionError::SelfCheck(format!(
                "knits({n}): edge {i} has {} distinct vertices, expected {k}",
                e.len()
            )));
        }
        edges.push(e.into_iter().collect());
    }
    Ok(Hypergraph::new(n as usize, k as usize, edges)?)
}

/// Number of unordered vertex pairs of H - v at 2-section distance >= 2
/// (including unreachable pairs). For a knit hypergraph on n vertices this
/// is exactly n - 1 for every v, which pins W(H - v) to
/// C(n-1, 2) + (n-1) = C(n, 2).
pub fn knits_nonadjacency_count(h: &Hypergraph, v: u32) -> u64 {
    let dd = distance_matrix(&h.delete_vertex(v)).distribution();
    dd.total_pairs() - dd.at(1)
}

/// A reading of the index ranges defining [`general_r`] edges. The family
/// definition fixes the first block as the r values i-s-r, ..., i-s-1; the
/// conventions differ in where the middle run stops and where the third
/// block starts.
///
/// `InclusiveTrimMiddle` is the resolved reading: it is the unique one under
/// which r = 1 reproduces the knit edges verbatim and the r = 2 instances
/// keep the Šoltés property. `HalfOpenMiddle` stays k-uniform but shifts the
/// third block by one, which breaks deletion invariance; `FullyInclusive`
/// produces k+1 vertices per edge and is rejected outright.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convention {
    #[serde(rename = "INCLUSIVE_TRIM_MIDDLE")]
    InclusiveTrimMiddle,
    #[serde(rename = "HALF_OPEN_MIDDLE")]
    HalfOpenMiddle,
    #[serde(rename = "FULLY_INCLUSIVE")]
    FullyInclusive,
}

/// The convention under which the r-generalization both reduces to the knit
/// family at r = 1 and passes its deletion audits at r = 2.
pub const RESOLVED_CONVENTION: Convention = Convention::InclusiveTrimMiddle;

/// Derived (n, k) for [`general_r`]: n = C(s,2) - (2r-1) t - r^2 + 1 and
/// k = C(s,2) - 2rt - 2s - r^2.
pub fn general_r_params(s: u64, t: u64, r: u64) -> Result<(u64, u64), ConstructionError> {
    if r < 1 {
        return Err(ConstructionError::ParamOutOfRange("r must be >= 1".into()));
    }
    let c2 = |x: u64| x * (x.saturating_sub(1)) / 2;
    let tri = c2(r + 1);
    if s <= tri + t {
        return Err(ConstructionError::ParamOutOfRange(format!(
            "need t < s - C(r+1, 2): s = {s}, t = {t}, C(r+1,2) = {tri}"
        )));
    }
    let cs2 = c2(s) as i64;
    let (ti, ri) = (t as i64, r as i64);
    let n = cs2 - (2 * ri - 1) * ti - ri * ri + 1;
    let k = cs2 - 2 * ri * ti - 2 * s as i64 - ri * ri;
    if n < 2 || k < 2 || k > n {
        return Err(ConstructionError::ParamOutOfRange(format!(
            "degenerate derived size: n = {n}, k = {k}"
        )));
    }
    Ok((n as u64, k as u64))
}

/// The r-generalized knit hypergraph: n edges, each the union (mod n) of
///
/// * the r indices i-s-r, ..., i-s-1,
/// * a middle run starting at i,
/// * a third block of r indices displaced by s,
///
/// with the exact endpoints fixed by `convention`. Every edge must come out
/// with exactly k distinct vertices or the convention is rejected.
pub fn general_r(
    s: u64,
    t: u64,
    r: u64,
    convention: Convention,
) -> Result<Hypergraph, ConstructionError> {
    let (n, k) = general_r_params(s, t, r)?;
    let (ni, si, ri, ki) = (n as i64, s as i64, r as i64, k as i64);
    let mut edges = Vec::with_capacity(n as usize);
    for i in 0..ni {
        let mut e = BTreeSet::new();
        let push_range = |e: &mut BTreeSet<u32>, lo: i64, hi: i64| {
            for j in lo..hi {
                e.insert(j.rem_euclid(ni) as u32);
            }
        };
        push_range(&mut e, i - si - ri, i - si);
        match convention {
            Convention::InclusiveTrimMiddle => {
                push_range(&mut e, i, i + ki - 2 * ri);
                push_range(&mut e, i + ki - 2 * ri + si, i + ki - ri + si);
            }
            Convention::HalfOpenMiddle => {
                push_range(&mut e, i, i + ki - 2 * ri);
                push_range(&mut e, i + ki - 2 * ri + si + 1, i + ki - ri + si + 1);
            }
            Convention::FullyInclusive => {
                push_range(&mut e, i, i + ki - 2 * ri + 1);
                push_range(&mut e, i + ki - 2 * ri + si + 1, i + ki - ri + si + 1);
            }
        }
        if e.len() as u64 != k {
            return Err(ConstructionError::BadConvention {
                convention,
                index: i as usize,
                size: e.len(),
                k: k as usize,
            });
        }
        edges.push(e.into_iter().collect());
    }
    Ok(Hypergraph::new(n as usize, k as usize, edges)?)
}

/// A 9-uniform, 54-vertex Šoltés hypergraph that is not vertex-transitive:
/// 27 edges {a, a+1, a+2, a+3, a+4, a+5, a+7, a+16, a+18} mod 54 for even a.
/// Even-labeled vertices have degree 5, odd-labeled degree 4, yet every
/// deletion preserves W = 2349.
pub fn irregular54() -> Hypergraph {
    const OFFSETS: [u64; 9] = [0, 1, 2, 3, 4, 5, 7, 16, 18];
    let edges = (0..54u64)
        .step_by(2)
        .map(|a| OFFSETS.iter().map(|d| ((a + d) % 54) as u32).collect())
        .collect();
    Hypergraph::new(54, 9, edges).expect("static construction is valid")
}

/// The cycle C_n as a 2-uniform hypergraph, n >= 3.
pub fn cycle_graph(n: u64) -> Result<Hypergraph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::ParamOutOfRange(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges = (0..n)
        .map(|i| vec![i as u32, ((i + 1) % n) as u32])
        .collect();
    Ok(Hypergraph::new(n as usize, 2, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::Distance;
    use crate::invariants::{diameter, soltes_report, wiener};

    #[test]
    fn knits_parameter_table() {
        let cases = [
            (92, (15, 13, 48)),
            (100, (15, 5, 64)),
            (101, (15, 4, 66)),
            (105, (15, 0, 74)),
            (106, (16, 14, 59)),
            (120, (16, 0, 87)),
            (140, (18, 13, 90)),
        ];
        for (n, (s, t, k)) in cases {
            let p = knits_params(n).unwrap();
            assert_eq!((p.s, p.t, p.k), (s, t, k), "params for n = {n}");
        }
        assert!(knits_params(91).is_err());
    }

    #[test]
    fn knits_105_structure() {
        let h = knits(105).unwrap();
        assert_eq!((h.n(), h.k(), h.m()), (105, 74, 105));
        assert_eq!(diameter(&h), Distance::Finite(1));
        assert_eq!(wiener(&h), Distance::Finite(5460));
        // Every deletion leaves exactly n - 1 = 104 non-adjacent pairs, so
        // W(H - v) = C(104, 2) + 104 = 5460 = C(105, 2).
        assert_eq!(knits_nonadjacency_count(&h, 0), 104);
        assert_eq!(knits_nonadjacency_count(&h, 57), 104);
        assert_eq!(
            wiener(&h.delete_vertex(0)),
            Distance::Finite(5460)
        );
    }

    #[test]
    fn knits_92_is_soltes() {
        let h = knits(92).unwrap();
        let r = soltes_report(&h);
        assert_eq!(r.wiener, Distance::Finite(4186));
        assert!(r.verdict);
    }

    #[test]
    fn general_r_one_reproduces_knits() {
        let g = general_r(15, 0, 1, Convention::InclusiveTrimMiddle).unwrap();
        let k = knits(105).unwrap();
        assert_eq!(g, k);
        // The half-open reading is still 74-uniform but defines different
        // edges, which is why uniformity alone cannot resolve the convention.
        let alt = general_r(15, 0, 1, Convention::HalfOpenMiddle).unwrap();
        assert_eq!(alt.k(), 74);
        assert_ne!(alt, k);
        // The fully inclusive reading overshoots to k+1 vertices per edge.
        assert!(matches!(
            general_r(15, 0, 1, Convention::FullyInclusive),
            Err(ConstructionError::BadConvention { size: 75, k: 74, .. })
        ));
    }

    #[test]
    fn general_r_two_sizes() {
        let g0 = general_r(15, 0, 2, RESOLVED_CONVENTION).unwrap();
        assert_eq!((g0.n(), g0.k(), g0.m()), (102, 71, 102));
        let g5 = general_r(15, 5, 2, RESOLVED_CONVENTION).unwrap();
        assert_eq!((g5.n(), g5.k(), g5.m()), (87, 51, 87));
        assert!(general_r(15, 12, 2, RESOLVED_CONVENTION).is_err());
        assert!(general_r(3, 0, 2, RESOLVED_CONVENTION).is_err());
    }

    #[test]
    fn irregular54_structure() {
        let h = irregular54();
        assert_eq!((h.n(), h.k(), h.m()), (54, 9, 27));
        // Degrees alternate by parity: 5 for even labels, 4 for odd.
        for v in 0..54u32 {
            assert_eq!(h.degree(v), if v % 2 == 0 { 5 } else { 4 });
        }
        // Each edge holds 5 even and 4 odd vertices.
        for e in h.edges() {
            let even = e.iter().filter(|&&v| v % 2 == 0).count();
            assert_eq!(even, 5);
        }
        let ts = h.two_section();
        assert!(ts.is_adjacent(1, 18));
        assert!(!ts.is_adjacent(1, 19));
    }

    #[test]
    fn cycles() {
        assert!(cycle_graph(2).is_err());
        let c3 = cycle_graph(3).unwrap();
        assert_eq!(wiener(&c3), Distance::Finite(3));
        assert!(!soltes_report(&c3).verdict);
        let c11 = cycle_graph(11).unwrap();
        assert!(soltes_report(&c11).verdict);
    }

    #[test]
    fn descriptor_json_pins() {
        let p = ConstructionParams {
            variant: Variant::GeneralR,
            s: Some(15),
            t: Some(0),
            r: Some(2),
            n: 102,
            k: 71,
            convention: Some(Convention::InclusiveTrimMiddle),
        };
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(
            js,
            r#"{"variant":"GENERAL_R","s":15,"t":0,"r":2,"n":102,"k":71,"convention":"INCLUSIVE_TRIM_MIDDLE"}"#
        );
        let back: ConstructionParams = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        let p2 = ConstructionParams {
            variant: Variant::Irregular54,
            s: None,
            t: None,
            r: None,
            n: 54,
            k: 9,
            convention: None,
        };
        let js2 = serde_json::to_string(&p2).unwrap();
        assert!(js2.contains(r#""variant":"IRREGULAR54""#));
        assert!(js2.contains(r#""s":null"#));
    }
}
