//! The acceptance suite: one test per criterion, each printing a
//! machine-readable pass/fail line. Run with `cargo test --test acceptance`
//! (add `-- --nocapture` to see the lines for passing criteria too).

use std::time::Instant;

use tanglekit::verify::{self, CheckOutcome};

fn report(criterion: &str, outcome: &CheckOutcome) {
    let verdict = if outcome.passed { "pass" } else { "fail" };
    println!("ACCEPT {criterion} {} {verdict} checked={}", outcome.name, outcome.checked);
    for failure in &outcome.failures {
        println!("  VIOLATION {failure}");
    }
    assert!(outcome.passed, "{criterion} failed: {:?}", outcome.failures);
}

#[test]
fn criterion_01_gridcut_exhaustive() {
    let start = Instant::now();
    for (r, max_order) in [(2, 1), (3, 2)] {
        let outcome = verify::check_gridcut(r, max_order, 16, 1);
        report("criterion-1", &outcome);
        assert!(outcome.checked > 0);
    }
    assert!(start.elapsed().as_secs() < 60, "W_2/W_3 gridcut exceeded 60 s");

    let start = Instant::now();
    let outcome = verify::check_gridcut(4, 3, 16, 1);
    report("criterion-1", &outcome);
    assert!(start.elapsed().as_secs() < 600, "W_4 gridcut exceeded 10 min");
}

#[test]
fn criterion_02_tangle_axioms() {
    report("criterion-2", &verify::check_tangle_axioms(16, 1));
}

#[test]
fn criterion_03_induced_separations_randomized() {
    let outcome = verify::check_induced_separations(1000);
    assert_eq!(outcome.checked, 1000);
    report("criterion-3", &outcome);
}

#[test]
fn criterion_04_extended_tangle_exhaustive() {
    report("criterion-4", &verify::check_extended_tangle(16, 1));
}

#[test]
fn criterion_05_menger_oracle_equivalence() {
    let outcome = verify::check_menger_oracle(200, 16);
    assert_eq!(outcome.checked, 200);
    report("criterion-5", &outcome);
}

#[test]
fn criterion_06_vortex_machinery() {
    report("criterion-6", &verify::check_vortex_machinery());
}

#[test]
fn criterion_07_surface() {
    report("criterion-7", &verify::check_surface(10_000_000));
}

#[test]
fn criterion_08_euler_machinery() {
    report("criterion-8", &verify::check_euler_machinery());
}

#[test]
fn criterion_09_constants() {
    report("criterion-9", &verify::check_constants());
}

#[test]
fn criterion_10_near_embedding_end_to_end() {
    let start = Instant::now();
    report("criterion-10", &verify::check_near_embedding(1));
    assert!(start.elapsed().as_secs() < 300, "near-embedding suite exceeded 5 min");
}

#[test]
fn criterion_11_hypothesis_arithmetic() {
    report("criterion-11", &verify::check_hypotheses_fixtures());
}
