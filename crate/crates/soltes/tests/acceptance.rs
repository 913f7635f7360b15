//! The acceptance battery: one test per claim the library stakes, each
//! printing a single PASS/FAIL line. Run with `--nocapture` to see them.
//! These are the same checks `soltes verify-paper` executes, at full volume.

use soltes::verify::{
    check_cycles, check_general_r, check_irregular54, check_knits_family, check_lemma_suite,
    check_remark_examples, check_small_searches, check_structural_identities,
    check_weighted_prisms, CheckOutcome, VerifyOptions,
};

fn report(c: CheckOutcome) {
    println!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
    assert!(c.pass, "{}: {}", c.name, c.detail);
}

fn full() -> VerifyOptions {
    VerifyOptions::default()
}

#[test]
fn acceptance_c1_irregular_54_vertex_witness() {
    report(check_irregular54());
}

#[test]
fn acceptance_c2_knits_family_every_order_92_to_140() {
    report(check_knits_family(&full()));
}

#[test]
fn acceptance_c3_weighted_prisms_k_20_to_40() {
    report(check_weighted_prisms(&full()));
}

#[test]
fn acceptance_c4_sporadic_weighted_examples() {
    report(check_remark_examples());
}

#[test]
fn acceptance_c5_eleven_cycle_and_shorter_cycles() {
    report(check_cycles());
}

#[test]
fn acceptance_c6_exhaustive_searches_come_back_empty() {
    report(check_small_searches(&full()));
}

#[test]
fn acceptance_c7_lemma_suite_zero_violations() {
    report(check_lemma_suite(&full()));
}

#[test]
fn acceptance_c8_structural_identities_and_engine_oracle() {
    report(check_structural_identities(&full()));
}

#[test]
fn acceptance_c9_general_r_convention_resolution() {
    report(check_general_r());
}
