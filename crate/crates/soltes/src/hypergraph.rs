//! k-uniform hypergraphs on vertex set `{0, .., n-1}`.
//!
//! Invariants enforced at construction: every edge has exactly k distinct
//! in-range vertices stored ascending, k >= 2, the edge list is sorted
//! lexicographically, and no edge repeats. All operations preserve them.
//!
//! Text format (`.hg`): first content line `n m`, then m lines each listing
//! one edge's vertices in ascending order, space-separated. Blank lines and
//! `#` comments are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),
    #[error("edge {index} has {distinct} distinct vertices, expected {k}")]
    EdgeWrongSize {
        index: usize,
        distinct: usize,
        k: usize,
    },
    #[error("edge {index} contains vertex {v}, outside 0..{n}")]
    VertexOutOfRange { index: usize, v: u32, n: usize },
    #[error("duplicate edge at position {0} of the sorted edge list")]
    DuplicateEdge(usize),
    #[error("relabeling is not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("hypergraph text: {0}")]
    Parse(String),
}

/// Raw mirror used only to funnel deserialization through validation.
#[derive(Deserialize)]
struct RawHypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<u32>>,
}

/// A k-uniform hypergraph. Immutable once built; operations return new
/// values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<u32>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = HypergraphError;
    fn try_from(raw: RawHypergraph) -> Result<Self, Self::Error> {
        Hypergraph::new(raw.n, raw.k, raw.edges)
    }
}

impl Hypergraph {
    /// Builds and validates. Edges may arrive in any internal order; they are
    /// normalized (vertices ascending, edge list sorted).
    pub fn new(n: usize, k: usize, edges: Vec<Vec<u32>>) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::UniformityTooSmall(k));
        }
        let mut norm = edges;
        for (index, e) in norm.iter_mut().enumerate() {
            e.sort_unstable();
            let mut distinct = e.len();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    distinct -= 1;
                }
            }
            if e.len() != k || distinct != k {
                return Err(HypergraphError::EdgeWrongSize { index, distinct, k });
            }
            for &v in e.iter() {
                if v as usize >= n {
                    return Err(HypergraphError::VertexOutOfRange { index, v, n });
                }
            }
        }
        norm.sort_unstable();
        for (i, w) in norm.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(HypergraphError::DuplicateEdge(i + 1));
            }
        }
        Ok(Hypergraph { n, k, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges, each ascending, list sorted lexicographically.
    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// Number of edges containing v.
    pub fn degree(&self, v: u32) -> usize {
        assert!((v as usize) < self.n, "vertex {v} out of range");
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    /// Number of edges containing both u and v.
    pub fn pair_degree(&self, u: u32, v: u32) -> usize {
        assert!((u as usize) < self.n && (v as usize) < self.n);
        self.edges
            .iter()
            .filter(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
            .count()
    }

    /// Deletes v together with every edge containing it, then closes the gap
    /// in the labels: any vertex u > v becomes u - 1.
    pub fn delete_vertex(&self, v: u32) -> Hypergraph {
        assert!((v as usize) < self.n, "vertex {v} out of range");
        let edges = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&v).is_err())
            .map(|e| e.iter().map(|&u| if u > v { u - 1 } else { u }).collect())
            .collect();
        Hypergraph::new(self.n - 1, self.k, edges)
            .expect("deletion preserves hypergraph invariants")
    }

    /// Applies a permutation of the vertex labels: vertex v becomes perm[v].
    pub fn relabel(&self, perm: &[u32]) -> Result<Hypergraph, HypergraphError> {
        if perm.len() != self.n {
            return Err(HypergraphError::BadPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if (p as usize) >= self.n || seen[p as usize] {
                return Err(HypergraphError::BadPermutation(self.n));
            }
            seen[p as usize] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&u| perm[u as usize]).collect())
            .collect();
        Hypergraph::new(self.n, self.k, edges)
    }

    /// The 2-section: u ~ v iff some edge contains both.
    pub fn two_section(&self) -> TwoSection {
        let mut ts = TwoSection::empty(self.n);
        let words = ts.words;
        let mut mask = vec![0u64; words];
        for e in &self.edges {
            for w in mask.iter_mut() {
                *w = 0;
            }
            for &v in e {
                mask[v as usize / 64] |= 1 << (v as usize % 64);
            }
            for &v in e {
                let row = &mut ts.bits[v as usize * words..(v as usize + 1) * words];
                for (r, &m) in row.iter_mut().zip(mask.iter()) {
                    *r |= m;
                }
            }
        }
        for v in 0..self.n {
            ts.bits[v * words + v / 64] &= !(1u64 << (v % 64));
        }
        ts
    }

    /// Parses the `.hg` text format.
    pub fn from_hg_str(text: &str) -> Result<Hypergraph, HypergraphError> {
        let mut lines = content_lines(text);
        let header = lines
            .next()
            .ok_or_else(|| HypergraphError::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), "n")?;
        let m: usize = parse_field(it.next(), "m")?;
        if it.next().is_some() {
            return Err(HypergraphError::Parse(format!(
                "header has trailing tokens: {header:?}"
            )));
        }
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| HypergraphError::Parse(format!("expected {m} edges, got {i}")))?;
            let edge: Vec<u32> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>().map_err(|_| {
                        HypergraphError::Parse(format!("bad vertex {tok:?} in edge {i}"))
                    })
                })
                .collect::<Result<_, _>>()?;
            edges.push(edge);
        }
        if let Some(extra) = lines.next() {
            return Err(HypergraphError::Parse(format!(
                "unexpected content after {m} edges: {extra:?}"
            )));
        }
        let k = edges.first().map_or(2, Vec::len);
        Hypergraph::new(n, k, edges)
    }

    /// Emits the `.hg` text format.
    pub fn to_hg_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for e in &self.edges {
            let mut first = true;
            for v in e {
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
                first = false;
            }
            out.push('\n');
        }
        out
    }

    /// Vertices that appear in at least one edge, ascending.
    pub fn covered_vertices(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.edges.iter().flatten().copied().collect();
        set.into_iter().collect()
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty())
}

fn parse_field(tok: Option<&str>, name: &str) -> Result<usize, HypergraphError> {
    tok.ok_or_else(|| HypergraphError::Parse(format!("missing {name} in header")))?
        .parse()
        .map_err(|_| HypergraphError::Parse(format!("bad {name} in header")))
}

/// Adjacency of the 2-section as bit rows; row v has bit u set iff u ~ v.
#[derive(Clone, Debug)]
pub struct TwoSection {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl TwoSection {
    fn empty(n: usize) -> TwoSection {
        let words = n.div_ceil(64).max(1);
        TwoSection {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a 2-section-shaped adjacency directly from an ordinary edge
    /// list (pairs), used by weighted-graph support code and tests.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (u32, u32)>) -> TwoSection {
        let mut ts = TwoSection::empty(n);
        for (u, v) in pairs {
            assert!((u as usize) < n && (v as usize) < n && u != v);
            ts.set(u as usize, v as usize);
            ts.set(v as usize, u as usize);
        }
        ts
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn word_count(&self) -> usize {
        self.words
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn is_adjacent(&self, u: u32, v: u32) -> bool {
        let (u, v) = (u as usize, v as usize);
        assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Degree of v in the 2-section.
    pub fn neighbor_count(&self, v: u32) -> usize {
        self.row(v as usize).iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, k: usize, edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(n, k, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(
            Hypergraph::new(3, 1, vec![vec![0]]),
            Err(HypergraphError::UniformityTooSmall(1))
        ));
        assert!(matches!(
            Hypergraph::new(3, 2, vec![vec![0, 0]]),
            Err(HypergraphError::EdgeWrongSize { distinct: 1, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 2, vec![vec![0, 3]]),
            Err(HypergraphError::VertexOutOfRange { v: 3, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 2, vec![vec![1, 0], vec![0, 1]]),
            Err(HypergraphError::DuplicateEdge(_))
        ));
        // Normalization: edges sort internally and across the list.
        let g = h(4, 2, &[&[3, 2], &[1, 0]]);
        assert_eq!(g.edges(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn degrees_and_two_section() {
        let g = h(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(g.degree(2), 2);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.pair_degree(0, 2), 1);
        assert_eq!(g.pair_degree(0, 3), 0);
        let ts = g.two_section();
        assert!(ts.is_adjacent(2, 3));
        assert!(ts.is_adjacent(0, 1));
        assert!(!ts.is_adjacent(0, 3));
        assert!(!ts.is_adjacent(0, 0));
        assert_eq!(ts.neighbor_count(2), 4);
        assert_eq!(ts.neighbor_count(0), 2);
    }

    #[test]
    fn deletion_reindexes() {
        let g = h(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        // Deleting 2 kills both edges.
        let d2 = g.delete_vertex(2);
        assert_eq!(d2.n(), 4);
        assert_eq!(d2.m(), 0);
        // Deleting 1 keeps {2,3,4}, which shifts down to {1,2,3}.
        let d1 = g.delete_vertex(1);
        assert_eq!(d1.n(), 4);
        assert_eq!(d1.edges(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn relabeling() {
        let g = h(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        let r = g.relabel(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(r.edges(), &[vec![0, 1, 2], vec![2, 3, 4]]);
        assert!(g.relabel(&[0, 0, 2, 3, 4]).is_err());
        assert!(g.relabel(&[0, 1, 2]).is_err());
    }

    #[test]
    fn hg_round_trip() {
        let g = h(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        let text = g.to_hg_string();
        assert_eq!(text, "5 2\n0 1 2\n2 3 4\n");
        let back = Hypergraph::from_hg_str(&text).unwrap();
        assert_eq!(back, g);

        let commented = "# a hypergraph\n5 2\n0 1 2  # first\n\n2 3 4\n";
        assert_eq!(Hypergraph::from_hg_str(commented).unwrap(), g);

        assert!(Hypergraph::from_hg_str("").is_err());
        assert!(Hypergraph::from_hg_str("5 2\n0 1 2\n").is_err());
        assert!(Hypergraph::from_hg_str("5 1\n0 1 2\n2 3 4\n").is_err());
        // Edgeless graphs parse (k defaults to 2).
        let empty = Hypergraph::from_hg_str("4 0\n").unwrap();
        assert_eq!(empty.n(), 4);
        assert_eq!(empty.m(), 0);
    }

    #[test]
    fn json_round_trip_validates() {
        let g = h(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        let js = serde_json::to_string(&g).unwrap();
        assert_eq!(js, r#"{"n":5,"k":3,"edges":[[0,1,2],[2,3,4]]}"#);
        let back: Hypergraph = serde_json::from_str(&js).unwrap();
        assert_eq!(back, g);
        let bad = r#"{"n":5,"k":3,"edges":[[0,1,2],[0,1,2]]}"#;
        assert!(serde_json::from_str::<Hypergraph>(bad).is_err());
    }

    #[test]
    fn covered_vertices_lists_support() {
        let g = h(6, 2, &[&[4, 5], &[0, 4]]);
        assert_eq!(g.covered_vertices(), vec![0, 4, 5]);
    }
}
