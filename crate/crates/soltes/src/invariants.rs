//! Distance invariants of a hypergraph, all measured in its 2-section:
//! distance matrices by bit-parallel BFS, Wiener index, per-vertex
//! transmission, detour sums, and the per-vertex deletion report that decides
//! the Šoltés property.
//!
//! For a vertex v of a connected H with H - v connected, the deletion
//! identity ties everything together:
//!
//! ```text
//! W(H - v) = W(H) - sigma(v) + detour_sum(v)
//! ```
//!
//! where detour_sum(v) totals, over pairs not involving v, how much longer
//! their shortest paths get once v is gone. [`soltes_report`] recomputes
//! W(H - v) independently and fails hard if the identity breaks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::distance::{Delta, Distance};
use crate::hypergraph::{Hypergraph, TwoSection};

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("hypergraph is disconnected")]
    NotConnected,
}

/// All-pairs distances in the 2-section, row-major.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn from_two_section(ts: &TwoSection) -> DistanceMatrix {
        let n = ts.n();
        let words = ts.word_count();
        let mut d = vec![Distance::Infinite; n * n];
        let mut visited = vec![0u64; words];
        let mut frontier = vec![0u64; words];
        let mut next = vec![0u64; words];
        for src in 0..n {
            let row = &mut d[src * n..(src + 1) * n];
            visited.iter_mut().for_each(|w| *w = 0);
            frontier.iter_mut().for_each(|w| *w = 0);
            visited[src / 64] |= 1 << (src % 64);
            frontier[src / 64] |= 1 << (src % 64);
            row[src] = Distance::Finite(0);
            let mut level = 0u64;
            loop {
                level += 1;
                next.iter_mut().for_each(|w| *w = 0);
                for wi in 0..words {
                    let mut bits = frontier[wi];
                    while bits != 0 {
                        let v = wi * 64 + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        for (nw, &aw) in next.iter_mut().zip(ts.row(v)) {
                            *nw |= aw;
                        }
                    }
                }
                let mut any = false;
                for wi in 0..words {
                    next[wi] &= !visited[wi];
                    if next[wi] != 0 {
                        any = true;
                        visited[wi] |= next[wi];
                        let mut bits = next[wi];
                        while bits != 0 {
                            let v = wi * 64 + bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            row[v] = Distance::Finite(level);
                        }
                    }
                }
                if !any {
                    break;
                }
                std::mem::swap(&mut frontier, &mut next);
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: u32, v: u32) -> Distance {
        self.d[u as usize * self.n + v as usize]
    }

    /// Sum of distances over unordered pairs.
    pub fn wiener(&self) -> Distance {
        let mut total = Distance::Finite(0);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                total = total + self.d[u * self.n + v];
            }
        }
        total
    }

    /// Sum of distances from v to every other vertex.
    pub fn transmission(&self, v: u32) -> Distance {
        let row = &self.d[v as usize * self.n..(v as usize + 1) * self.n];
        let mut total = Distance::Finite(0);
        for (u, &dist) in row.iter().enumerate() {
            if u != v as usize {
                total = total + dist;
            }
        }
        total
    }

    pub fn eccentricity(&self, v: u32) -> Distance {
        let row = &self.d[v as usize * self.n..(v as usize + 1) * self.n];
        row.iter().copied().max().unwrap_or(Distance::Finite(0))
    }

    pub fn diameter(&self) -> Distance {
        self.d.iter().copied().max().unwrap_or(Distance::Finite(0))
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(|d| d.is_finite())
    }

    /// Histogram of pairwise distances (unordered pairs at distance >= 1).
    pub fn distribution(&self) -> DistanceDistribution {
        let mut counts = BTreeMap::new();
        let mut infinite = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                match self.d[u * self.n + v] {
                    Distance::Finite(x) => *counts.entry(x).or_insert(0) += 1,
                    Distance::Infinite => infinite += 1,
                }
            }
        }
        DistanceDistribution { counts, infinite }
    }
}

/// Counts of unordered vertex pairs by distance; `counts[i]` is the number
/// of pairs at finite distance i, `infinite` the unreachable pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceDistribution {
    pub counts: BTreeMap<u64, u64>,
    pub infinite: u64,
}

impl DistanceDistribution {
    /// Number of pairs at finite distance d.
    pub fn at(&self, d: u64) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    pub fn total_pairs(&self) -> u64 {
        self.counts.values().sum::<u64>() + self.infinite
    }
}

pub fn distance_matrix(h: &Hypergraph) -> DistanceMatrix {
    DistanceMatrix::from_two_section(&h.two_section())
}

/// Wiener index: sum of pairwise 2-section distances, `Infinite` when
/// disconnected (and n >= 2).
pub fn wiener(h: &Hypergraph) -> Distance {
    distance_matrix(h).wiener()
}

pub fn transmission(h: &Hypergraph, v: u32) -> Distance {
    distance_matrix(h).transmission(v)
}

pub fn diameter(h: &Hypergraph) -> Distance {
    distance_matrix(h).diameter()
}

pub fn distance_distribution(h: &Hypergraph) -> DistanceDistribution {
    distance_matrix(h).distribution()
}

pub fn is_connected(h: &Hypergraph) -> bool {
    if h.n() <= 1 {
        return true;
    }
    let ts = h.two_section();
    let words = ts.word_count();
    let mut visited = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    visited[0] |= 1;
    frontier[0] |= 1;
    loop {
        let mut next = vec![0u64; words];
        for wi in 0..words {
            let mut bits = frontier[wi];
            while bits != 0 {
                let v = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for (nw, &aw) in next.iter_mut().zip(ts.row(v)) {
                    *nw |= aw;
                }
            }
        }
        let mut any = false;
        for wi in 0..words {
            next[wi] &= !visited[wi];
            if next[wi] != 0 {
                any = true;
                visited[wi] |= next[wi];
            }
        }
        if !any {
            break;
        }
        frontier = next;
    }
    let mut count = 0usize;
    for w in &visited {
        count += w.count_ones() as usize;
    }
    count == h.n()
}

/// Sum over pairs u < w (both != v) of d_{H-v}(u,w) - d_H(u,w).
///
/// Requires H connected (`Err(NotConnected)` otherwise). Returns `Infinite`
/// when deleting v disconnects the rest; every term is then dominated by the
/// separated pairs.
pub fn detour_sum(h: &Hypergraph, v: u32) -> Result<Distance, InvariantError> {
    let dm = distance_matrix(h);
    if !dm.is_connected() {
        return Err(InvariantError::NotConnected);
    }
    Ok(detour_sum_with(h, v, &dm))
}

fn detour_sum_with(h: &Hypergraph, v: u32, dm: &DistanceMatrix) -> Distance {
    let hd = h.delete_vertex(v);
    let dmd = distance_matrix(&hd);
    if !dmd.is_connected() {
        return Distance::Infinite;
    }
    let mut total = 0u64;
    let old = |u: u32| if u >= v { u + 1 } else { u };
    for u in 0..hd.n() as u32 {
        for w in (u + 1)..hd.n() as u32 {
            let after = dmd.get(u, w).finite().expect("connected after deletion");
            let before = dm.get(old(u), old(w)).finite().expect("connected");
            total += after - before;
        }
    }
    Distance::Finite(total)
}

/// One row of a [`SoltesReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub label: u32,
    pub sigma: Distance,
    pub detour_sum: Distance,
    pub wiener_after: Distance,
    pub delta: Delta,
}

/// Per-vertex deletion audit. `verdict` is true iff every deletion keeps the
/// graph connected and leaves the Wiener index exactly unchanged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoltesReport {
    pub wiener: Distance,
    pub vertices: Vec<VertexReport>,
    pub verdict: bool,
}

/// Audits every single-vertex deletion.
///
/// W(H - v) comes from a fresh BFS on the deleted hypergraph; when all
/// quantities are finite the deletion identity and the handshake identity
/// (sum of transmissions = 2 W) are asserted, so a violation aborts rather
/// than producing a report that lies.
pub fn soltes_report(h: &Hypergraph) -> SoltesReport {
    let dm = distance_matrix(h);
    let w = dm.wiener();
    let connected = dm.is_connected();
    if connected && h.n() >= 1 {
        let sigma_total: Distance = (0..h.n() as u32).map(|v| dm.transmission(v)).sum();
        let doubled = w + w;
        assert_eq!(
            sigma_total, doubled,
            "handshake identity violated: sum sigma != 2 W"
        );
    }
    let mut vertices = Vec::with_capacity(h.n());
    let mut verdict = w.is_finite() && h.n() > 0;
    for v in 0..h.n() as u32 {
        let sigma = dm.transmission(v);
        let hd = h.delete_vertex(v);
        let wiener_after = distance_matrix(&hd).wiener();
        let detour = if connected {
            detour_sum_with(h, v, &dm)
        } else {
            Distance::Infinite
        };
        if let (Distance::Finite(wb), Distance::Finite(sg), Distance::Finite(dt), Distance::Finite(wa)) =
            (w, sigma, detour, wiener_after)
        {
            // W(H-v) + sigma(v) = W(H) + detour_sum(v), rearranged to stay
            // in unsigned arithmetic.
            assert_eq!(
                wa + sg,
                wb + dt,
                "deletion identity violated at vertex {v}"
            );
        }
        let delta = wiener_after.delta_from(w);
        if !(wiener_after.is_finite() && wiener_after == w) {
            verdict = false;
        }
        vertices.push(VertexReport {
            label: v,
            sigma,
            detour_sum: detour,
            wiener_after,
            delta,
        });
    }
    SoltesReport {
        wiener: w,
        vertices,
        verdict,
    }
}

/// Fast verdict-only version of [`soltes_report`]: bails out at the first
/// vertex whose deletion changes the Wiener index.
pub fn is_soltes(h: &Hypergraph) -> bool {
    if h.n() == 0 {
        return false;
    }
    let dm = distance_matrix(h);
    let w = dm.wiener();
    if !w.is_finite() {
        return false;
    }
    for v in 0..h.n() as u32 {
        let hd = h.delete_vertex(v);
        if distance_matrix(&hd).wiener() != w {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, k: usize, edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(n, k, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn cycle(n: usize) -> Hypergraph {
        let edges = (0..n as u32)
            .map(|i| vec![i, (i + 1) % n as u32])
            .collect();
        Hypergraph::new(n, 2, edges).unwrap()
    }

    #[test]
    fn single_edge_is_a_clique() {
        let g = h(4, 4, &[&[0, 1, 2, 3]]);
        let dm = distance_matrix(&g);
        assert_eq!(dm.wiener(), Distance::Finite(6));
        assert_eq!(dm.diameter(), Distance::Finite(1));
        assert_eq!(dm.transmission(0), Distance::Finite(3));
        let dd = dm.distribution();
        assert_eq!(dd.at(1), 6);
        assert_eq!(dd.infinite, 0);
    }

    #[test]
    fn disconnected_distances() {
        let g = h(6, 3, &[&[0, 1, 2], &[3, 4, 5]]);
        let dm = distance_matrix(&g);
        assert_eq!(dm.get(0, 3), Distance::Infinite);
        assert_eq!(dm.wiener(), Distance::Infinite);
        assert!(!dm.is_connected());
        assert!(!is_connected(&g));
        assert_eq!(dm.distribution().infinite, 9);
        assert!(matches!(detour_sum(&g, 0), Err(InvariantError::NotConnected)));
    }

    #[test]
    fn path_shaped_overlap() {
        // Two triples sharing one vertex: distances 1 within, 2 across.
        let g = h(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        let dm = distance_matrix(&g);
        assert_eq!(dm.get(0, 4), Distance::Finite(2));
        assert_eq!(dm.get(0, 2), Distance::Finite(1));
        assert_eq!(dm.wiener(), Distance::Finite(14));
        // Deleting any vertex here takes a whole edge with it and strands
        // someone: the cut vertex 2 splits the two cliques, and deleting a
        // clique-interior vertex isolates that clique's other non-cut
        // members' partner. Every detour sum is infinite.
        for v in 0..5 {
            assert_eq!(detour_sum(&g, v).unwrap(), Distance::Infinite);
        }
        // In C4, deleting a vertex leaves P3 with all pairwise distances
        // unchanged, so the detour sum is zero.
        assert_eq!(detour_sum(&cycle(4), 0).unwrap(), Distance::Finite(0));
    }

    #[test]
    fn cycle_verdicts() {
        // C11 is Šoltés (W = 165 both before and after any deletion); C10
        // is not (125 drops to 120).
        let r11 = soltes_report(&cycle(11));
        assert_eq!(r11.wiener, Distance::Finite(165));
        assert!(r11.verdict);
        assert!(r11.vertices.iter().all(|v| v.delta.is_zero()));
        assert!(is_soltes(&cycle(11)));

        let r10 = soltes_report(&cycle(10));
        assert_eq!(r10.wiener, Distance::Finite(125));
        assert_eq!(r10.vertices[0].wiener_after, Distance::Finite(120));
        assert_eq!(r10.vertices[0].delta, Delta::Finite(-5));
        assert!(!r10.verdict);
        assert!(!is_soltes(&cycle(10)));
    }

    #[test]
    fn three_edge_diameter_three_splits() {
        // The two ways three 4-edges on 8 vertices can split the two
        // diameter-3 "ends": both land on W = 44.
        let split13 = h(8, 4, &[&[0, 1, 2, 3], &[4, 5, 6, 7], &[0, 4, 5, 6]]);
        let dd = distance_distribution(&split13);
        assert_eq!((dd.at(1), dd.at(2), dd.at(3)), (15, 10, 3));
        assert_eq!(wiener(&split13), Distance::Finite(44));

        let split22 = h(8, 4, &[&[0, 1, 2, 3], &[4, 5, 6, 7], &[0, 1, 4, 5]]);
        let dd = distance_distribution(&split22);
        assert_eq!((dd.at(1), dd.at(2), dd.at(3)), (16, 8, 4));
        assert_eq!(wiener(&split22), Distance::Finite(44));
    }

    #[test]
    fn report_json_shape() {
        let r = soltes_report(&cycle(4));
        let v = serde_json::to_value(&r).unwrap();
        assert!(v.get("wiener").is_some());
        assert!(v.get("verdict").is_some());
        let row = &v["vertices"][0];
        for key in ["label", "sigma", "detour_sum", "wiener_after", "delta"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
        let text = serde_json::to_string(&r).unwrap();
        let back: SoltesReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn deletion_identity_spot_check() {
        let g = h(7, 3, &[&[0, 1, 2], &[1, 2, 3], &[3, 4, 5], &[4, 5, 6]]);
        let r = soltes_report(&g);
        let w = r.wiener.finite().unwrap();
        for row in &r.vertices {
            if let (Some(sg), Some(dt), Some(wa)) = (
                row.sigma.finite(),
                row.detour_sum.finite(),
                row.wiener_after.finite(),
            ) {
                assert_eq!(wa + sg, w + dt);
            }
        }
    }
}
