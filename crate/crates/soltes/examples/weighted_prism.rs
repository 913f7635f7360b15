//! The weighted prism: a Šoltés graph on 4k vertices for every k >= 20.
//!
//! Two unit-weight rim cycles C_{2k} joined by rungs of weight
//! x(k) = (2k^2 - 6k + 16) / (k^2 - 9k + 12), an exact rational strictly
//! between 2 and 3 for k > 20 (and exactly 3 at k = 20). All arithmetic is
//! exact; no floats anywhere.

use soltes::weighted::{
    integerize, prism_detour_closed_form, prism_rung_weight, prism_soltes,
    prism_transmission_closed_form, prism_wiener_closed_form, soltes_report_w, wiener_w,
    WDistance,
};

fn main() {
    for k in [20u64, 21, 25] {
        let x = prism_rung_weight(k);
        let g = prism_soltes(k).expect("k >= 20");
        println!("k = {k}: n = {}, m = {}, rung weight x = {x}", g.n(), g.m());

        let w = wiener_w(&g);
        let closed = prism_wiener_closed_form(k);
        println!("  W = {w} (closed form {closed})");
        assert_eq!(w, WDistance::Finite(closed));

        // Vertex-transitive, so one transmission and one detour sum suffice
        // to predict the whole report; the audit recomputes all of them.
        let report = soltes_report_w(&g);
        let sigma = prism_transmission_closed_form(k);
        let detour = prism_detour_closed_form(k);
        for vr in &report.vertices {
            assert_eq!(vr.sigma, WDistance::Finite(sigma.clone()));
            assert_eq!(vr.detour_sum, WDistance::Finite(detour.clone()));
        }
        // sigma == detour is the whole reason these are Šoltés: the identity
        // W(G - v) = W(G) + detour(v) - sigma(v) then collapses.
        assert_eq!(sigma, detour);
        println!("  sigma(v) = detour(v) = {sigma} for all {} vertices", g.n());
        assert!(report.verdict);
    }

    // Rational weights are a convenience, not a necessity: clearing
    // denominators preserves shortest paths and thus the verdict.
    let g = prism_soltes(21).expect("k >= 20");
    let (gi, scale) = integerize(&g).expect("has nonzero weights");
    println!("k = 21 integerized with scale {scale}: W = {}", wiener_w(&gi));
    assert!(soltes_report_w(&gi).verdict);
}
