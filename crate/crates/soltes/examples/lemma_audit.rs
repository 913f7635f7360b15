//! Randomized plus exhaustive audit of the distance-invariant bounds that
//! drive the nonexistence arguments for small uniform Šoltés hypergraphs.
//!
//! The suite checks every connected 4-uniform class on 8 vertices with at
//! most 5 edges, then a stream of seeded random samples at larger sizes,
//! then degree-2 transmission bounds on order 9. A violation of any bound
//! would be a counterexample to the supporting lemmas; the suite reports it
//! instead of panicking.
//!
//! ```bash
//! cargo run --example lemma_audit [samples] [seed]
//! ```

use soltes::search::{audit_order8_4uniform, lemma_suite};
use soltes::Hypergraph;

fn main() {
    let mut args = std::env::args().skip(1);
    let samples: u64 = args
        .next()
        .map(|a| a.parse().expect("samples must be an integer"))
        .unwrap_or(5000);
    let seed: u64 = args
        .next()
        .map(|a| a.parse().expect("seed must be an integer"))
        .unwrap_or(42);

    // A single class first, to show what one audit looks like. Three edges
    // through 8 vertices, diameter 3, W = 44: right on the boundary that
    // only size 3 may touch.
    let h = Hypergraph::new(
        8,
        4,
        vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5], vec![4, 5, 6, 7]],
    )
    .expect("valid edges");
    match audit_order8_4uniform(&h) {
        Ok(()) => println!("single-class audit: all bounds hold"),
        Err(violation) => panic!("bound violated: {violation}"),
    }

    let report = lemma_suite(samples, seed);
    println!("\n{report}");
    assert!(report.pass(), "violations: {:?}", report.violations);
    println!("lemma suite: no violations");
}
