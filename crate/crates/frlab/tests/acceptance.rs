//! Acceptance suite: one test per criterion of the built-in reproduction
//! suite, printing a pass/fail line each (visible with `--nocapture`).
//! `frlab verify` runs the same checks from the CLI.

use frlab::verify::{run, CRITERIA};

fn check(id: usize) {
    let outcome = run(id);
    println!(
        "criterion {:>2} [{}]: {} — {}",
        outcome.id,
        outcome.name,
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.detail
    );
    assert!(
        outcome.passed,
        "criterion {} ({}) failed: {}",
        outcome.id, outcome.name, outcome.detail
    );
}

#[test]
fn criterion_01_k4_worked_example() {
    check(1);
}

#[test]
fn criterion_02_k8_worked_example() {
    check(2);
}

#[test]
fn criterion_03_variance_quadratic_identity() {
    check(3);
}

#[test]
fn criterion_04_cycle_optima() {
    check(4);
}

#[test]
fn criterion_05_union_closed_forms() {
    check(5);
}

#[test]
fn criterion_06_averaging_bound_mean() {
    check(6);
}

#[test]
fn criterion_07_supermagic_search_slow() {
    check(7);
}

#[test]
fn criterion_08_k4r_bounds() {
    check(8);
}

#[test]
fn criterion_09_fr_bounds_certificates() {
    check(9);
}

#[test]
fn criterion_10_dress_roundtrip() {
    check(10);
}

#[test]
fn criterion_11_workload_convergence() {
    check(11);
}

#[test]
fn criteria_table_is_complete() {
    assert_eq!(CRITERIA.len(), 11);
}
