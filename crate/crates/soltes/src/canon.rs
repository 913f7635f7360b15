//! Canonical labeling of hypergraphs by individualization-refinement.
//!
//! The canonical form is the relabeling of the covered vertices (those in at
//! least one edge) that lexicographically minimizes the sorted edge list;
//! uncovered vertices are interchangeable and take the trailing labels in
//! ascending original order. Two hypergraphs on the same vertex count are
//! isomorphic iff their canonical codes are equal.
//!
//! Refinement alternates edge signatures (sorted member colors) and vertex
//! signatures (own color plus sorted incident edge ranks) to a fixpoint;
//! when a color class with several vertices remains, each of its members is
//! individualized in turn and the minimum over all resulting leaves wins.
//! No hashing is involved, so codes are stable across runs and platforms.
//!
//! The search tree can grow factorially on highly symmetric inputs (large
//! vertex-transitive structures); this module is meant for the small objects
//! the enumeration touches, not for canonicalizing 100-vertex circulants.

use crate::hypergraph::Hypergraph;

/// Stable, comparable fingerprint of an isomorphism class (on a fixed
/// vertex count).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Canonical relabeling of `edges` over vertex set 0..n, expressed on
/// compact labels 0..c-1 where c is the number of covered vertices. The
/// result is a sorted edge list, minimal among all relabelings.
pub fn canonical_edges(n: usize, edges: &[Vec<u32>]) -> Vec<Vec<u32>> {
    canonical_core(n, edges).0
}

/// The canonical representative of the isomorphism class of h: `h` relabeled
/// so that its edge list is the canonical one and isolated vertices come
/// last in original order. Idempotent.
pub fn canonical_form(h: &Hypergraph) -> Hypergraph {
    let (_, perm) = canonical_core(h.n(), h.edges());
    h.relabel(&perm).expect("canonical relabeling is a permutation")
}

/// Code = vertex count plus canonical edge list, byte-encoded.
pub fn canonical_code(h: &Hypergraph) -> CanonicalCode {
    let (edges, _) = canonical_core(h.n(), h.edges());
    let mut bytes = Vec::with_capacity(8 + edges.len() * (1 + h.k()) * 4);
    bytes.extend_from_slice(&(h.n() as u32).to_le_bytes());
    bytes.extend_from_slice(&(edges.len() as u32).to_le_bytes());
    for e in &edges {
        bytes.extend_from_slice(&(e.len() as u32).to_le_bytes());
        for &v in e {
            bytes.extend_from_slice(&v.to_le_bytes());
        }
    }
    CanonicalCode(bytes)
}

/// Canonical form of an edge set given as bit masks (n <= 64), returned as
/// ascending masks. Used by the enumeration engine.
pub(crate) fn canon_masks(n: usize, masks: &[u64]) -> Vec<u64> {
    debug_assert!(n <= 64);
    let edges: Vec<Vec<u32>> = masks.iter().map(|&m| mask_to_edge(m)).collect();
    let canon = canonical_edges(n, &edges);
    let mut out: Vec<u64> = canon.iter().map(|e| edge_to_mask(e)).collect();
    out.sort_unstable();
    out
}

pub(crate) fn mask_to_edge(mut m: u64) -> Vec<u32> {
    let mut e = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        e.push(m.trailing_zeros());
        m &= m - 1;
    }
    e
}

pub(crate) fn edge_to_mask(e: &[u32]) -> u64 {
    e.iter().fold(0u64, |acc, &v| acc | 1 << v)
}

/// Returns (canonical edges on compact labels, full canonical permutation
/// over 0..n with perm[v] = new label of v).
fn canonical_core(n: usize, edges: &[Vec<u32>]) -> (Vec<Vec<u32>>, Vec<u32>) {
    if edges.is_empty() {
        return (Vec::new(), (0..n as u32).collect());
    }
    let mut covered: Vec<u32> = edges.iter().flatten().copied().collect();
    covered.sort_unstable();
    covered.dedup();
    let c = covered.len();
    let mut compact = vec![u32::MAX; n];
    for (i, &v) in covered.iter().enumerate() {
        compact[v as usize] = i as u32;
    }
    let cedges: Vec<Vec<u32>> = edges
        .iter()
        .map(|e| {
            let mut ce: Vec<u32> = e.iter().map(|&v| compact[v as usize]).collect();
            ce.sort_unstable();
            ce
        })
        .collect();
    let mut incidence = vec![Vec::new(); c];
    for (ei, e) in cedges.iter().enumerate() {
        for &v in e {
            incidence[v as usize].push(ei as u32);
        }
    }
    let mut ir = Ir {
        c,
        edges: &cedges,
        incidence,
        best: None,
    };
    ir.search(vec![0; c]);
    let (best_edges, best_perm) = ir.best.expect("at least one leaf");
    // Extend the compact permutation to all of 0..n: covered vertex v takes
    // its canonical label, isolated vertices fill c.. in ascending order.
    let mut perm = vec![u32::MAX; n];
    for (i, &v) in covered.iter().enumerate() {
        perm[v as usize] = best_perm[i];
    }
    let mut next = c as u32;
    for p in perm.iter_mut() {
        if *p == u32::MAX {
            *p = next;
            next += 1;
        }
    }
    (best_edges, perm)
}

struct Ir<'a> {
    c: usize,
    edges: &'a [Vec<u32>],
    incidence: Vec<Vec<u32>>,
    /// Minimal relabeled edge list seen so far, with the coloring that
    /// produced it.
    best: Option<(Vec<Vec<u32>>, Vec<u32>)>,
}

impl Ir<'_> {
    fn search(&mut self, colors: Vec<u32>) {
        let colors = self.refine(colors);
        match self.target_cell(&colors) {
            None => self.leaf(&colors),
            Some(cell) => {
                for &v in &cell {
                    self.search(individualize(&colors, v));
                }
            }
        }
    }

    /// Refines to a fixpoint: edge ranks from sorted member colors, then
    /// vertex ranks from (own color, sorted incident edge ranks).
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut ncolors = colors.iter().copied().max().unwrap_or(0) as usize + 1;
        loop {
            let mut esig: Vec<(Vec<u32>, u32)> = self
                .edges
                .iter()
                .enumerate()
                .map(|(idx, e)| {
                    let mut sig: Vec<u32> =
                        e.iter().map(|&v| colors[v as usize]).collect();
                    sig.sort_unstable();
                    (sig, idx as u32)
                })
                .collect();
            esig.sort_unstable();
            let mut erank = vec![0u32; self.edges.len()];
            let mut rank = 0u32;
            for i in 0..esig.len() {
                if i > 0 && esig[i].0 != esig[i - 1].0 {
                    rank += 1;
                }
                erank[esig[i].1 as usize] = rank;
            }
            let mut vsig: Vec<(u32, Vec<u32>, u32)> = (0..self.c)
                .map(|v| {
                    let mut inc: Vec<u32> = self.incidence[v]
                        .iter()
                        .map(|&ei| erank[ei as usize])
                        .collect();
                    inc.sort_unstable();
                    (colors[v], inc, v as u32)
                })
                .collect();
            vsig.sort_unstable();
            let mut newc = vec![0u32; self.c];
            rank = 0;
            for i in 0..vsig.len() {
                if i > 0 && (vsig[i].0, &vsig[i].1) != (vsig[i - 1].0, &vsig[i - 1].1) {
                    rank += 1;
                }
                newc[vsig[i].2 as usize] = rank;
            }
            let newn = rank as usize + 1;
            if newn == ncolors {
                return newc;
            }
            ncolors = newn;
            colors = newc;
        }
    }

    /// The smallest color class with at least two members, ascending; `None`
    /// when the coloring is discrete.
    fn target_cell(&self, colors: &[u32]) -> Option<Vec<u32>> {
        let ncolors = colors.iter().copied().max().unwrap_or(0) as usize + 1;
        let mut count = vec![0u32; ncolors];
        for &cl in colors {
            count[cl as usize] += 1;
        }
        let target = (0..ncolors).find(|&cl| count[cl] >= 2)? as u32;
        Some(
            (0..self.c as u32)
                .filter(|&v| colors[v as usize] == target)
                .collect(),
        )
    }

    fn leaf(&mut self, colors: &[u32]) {
        let mut relabeled: Vec<Vec<u32>> = self
            .edges
            .iter()
            .map(|e| {
                let mut ne: Vec<u32> = e.iter().map(|&v| colors[v as usize]).collect();
                ne.sort_unstable();
                ne
            })
            .collect();
        relabeled.sort_unstable();
        match &self.best {
            Some((best, _)) if *best <= relabeled => {}
            _ => self.best = Some((relabeled, colors.to_vec())),
        }
    }
}

/// Splits v off into a new color class just below its old one, then
/// renormalizes colors to ranks.
fn individualize(colors: &[u32], v: u32) -> Vec<u32> {
    let mut doubled: Vec<u32> = colors.iter().map(|&cl| cl * 2 + 1).collect();
    doubled[v as usize] = colors[v as usize] * 2;
    let mut values: Vec<u32> = doubled.clone();
    values.sort_unstable();
    values.dedup();
    doubled
        .into_iter()
        .map(|x| values.binary_search(&x).unwrap() as u32)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, k: usize, edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(n, k, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn intersection_size_is_what_codes_see() {
        // Two triples sharing one vertex, in two different labelings.
        let a = h(5, 3, &[&[0, 1, 2], &[2, 3, 4]]);
        let b = h(5, 3, &[&[0, 1, 4], &[2, 3, 4]]);
        assert_eq!(canonical_code(&a), canonical_code(&b));
        // Sharing two vertices is a different class.
        let c = h(5, 3, &[&[0, 1, 2], &[1, 2, 3]]);
        assert_ne!(canonical_code(&a), canonical_code(&c));
    }

    #[test]
    fn relabeling_never_changes_the_code() {
        let g = h(6, 3, &[&[0, 1, 2], &[1, 2, 3], &[3, 4, 5]]);
        let code = canonical_code(&g);
        for perm in [
            vec![5, 4, 3, 2, 1, 0],
            vec![2, 0, 1, 5, 3, 4],
            vec![1, 2, 3, 4, 5, 0],
        ] {
            let r = g.relabel(&perm).unwrap();
            assert_eq!(canonical_code(&r), code);
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_isomorphic() {
        let g = h(7, 3, &[&[0, 2, 4], &[1, 2, 6], &[3, 5, 6]]);
        let f = canonical_form(&g);
        assert_eq!(canonical_code(&f), canonical_code(&g));
        assert_eq!(canonical_form(&f), f);
        assert_eq!(f.edges().to_vec(), canonical_edges(g.n(), g.edges()));
    }

    #[test]
    fn codes_depend_on_vertex_count_and_structure() {
        let p3 = h(3, 2, &[&[0, 1], &[1, 2]]);
        let k3 = h(3, 2, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_ne!(canonical_code(&p3), canonical_code(&k3));
        // Same edges, more isolated vertices: different class.
        let p3_padded = h(4, 2, &[&[0, 1], &[1, 2]]);
        assert_ne!(canonical_code(&p3), canonical_code(&p3_padded));
        // Isolated vertices are interchangeable.
        let a = h(4, 2, &[&[0, 1]]);
        let b = h(4, 2, &[&[2, 3]]);
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn empty_edge_sets() {
        let e1 = Hypergraph::new(4, 2, vec![]).unwrap();
        let e2 = Hypergraph::new(5, 2, vec![]).unwrap();
        assert_ne!(canonical_code(&e1), canonical_code(&e2));
        assert_eq!(canonical_form(&e1), e1);
        assert!(canonical_edges(4, &[]).is_empty());
    }

    #[test]
    fn mask_round_trip() {
        assert_eq!(mask_to_edge(0b10110), vec![1, 2, 4]);
        assert_eq!(edge_to_mask(&[1, 2, 4]), 0b10110);
        let masks = [0b0111u64, 0b1110];
        let canon = canon_masks(4, &masks);
        let relabeled = [0b1011u64, 0b1101];
        assert_eq!(canon, canon_masks(4, &relabeled));
    }
}
