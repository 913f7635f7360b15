//! The full verification battery, as run by `soltes verify-paper`.
//!
//! Nine independent checks cover the constructions, the closed forms, the
//! exhaustive searches, the lemma audits, and the structural identities the
//! invariant code promises (handshake, deletion identity, relabeling
//! invariance, agreement with a brute-force permutation oracle). This runs
//! the quick profile; drop `quick` for the full one the test suite uses.

use std::time::Instant;

use soltes::verify::{run_all, VerifyOptions};

fn main() {
    let opts = VerifyOptions {
        quick: true,
        seed: 42,
        partitions: 4,
    };

    let started = Instant::now();
    let outcomes = run_all(&opts);
    let mut failed = 0;
    for o in &outcomes {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} {}: {}", o.name, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!(
        "\n{} checks, {} failed, {:.1}s",
        outcomes.len(),
        failed,
        started.elapsed().as_secs_f64()
    );
    assert_eq!(failed, 0);
}
