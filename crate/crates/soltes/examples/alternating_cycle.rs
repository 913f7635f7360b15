//! Zero weights change the game: C_10 with weights 0, 1, 0, 1, ...
//!
//! Among unweighted graphs, C_11 is the only known Šoltés graph. Allowing
//! weight-0 edges shrinks the record to 10 vertices: the alternating cycle
//! has W = 60 and every deletion keeps it there. For contrast this also
//! audits the unweighted cycles and watches C_10 fail.

use soltes::constructions::cycle_graph;
use soltes::weighted::{cycle_alternating_01, soltes_report_w, WDistance};
use soltes::{soltes_report, Distance};

fn main() {
    let g = cycle_alternating_01();
    let report = soltes_report_w(&g);
    println!("alternating C_10: W = {}", report.wiener);
    assert_eq!(
        report.wiener,
        WDistance::Finite(soltes::weighted::Rational::from_integer(60.into()))
    );
    for vr in &report.vertices {
        // Transmission-regular despite the alternating weights: every
        // vertex sees the same multiset of distances.
        println!(
            "  v = {}  sigma = {}  W(G - v) = {}",
            vr.label, vr.sigma, vr.wiener_after
        );
    }
    assert!(report.verdict);
    println!("verdict: Šoltés on 10 vertices (with zero weights)\n");

    // The unweighted story for comparison.
    for n in [10u64, 11] {
        let c = cycle_graph(n).expect("n >= 3");
        let r = soltes_report(&c);
        println!("unweighted C_{n}: W = {}, Šoltés = {}", r.wiener, r.verdict);
        if !r.verdict {
            let vr = &r.vertices[0];
            println!(
                "  deleting a vertex: {} -> {} (delta {})",
                r.wiener, vr.wiener_after, vr.delta
            );
        }
    }
    assert!(!soltes::is_soltes(&cycle_graph(10).expect("valid")));
    assert_eq!(
        soltes_report(&cycle_graph(11).expect("valid")).wiener,
        Distance::Finite(165)
    );
}
