//! The acceptance gate: every verification criterion runs at its exact
//! threshold and prints one PASS/FAIL line.

use kcatalan::oracle::DEFAULT_PATH_CAP;
use kcatalan::suites::acceptance_criteria;

#[test]
fn acceptance() {
    let outcomes = acceptance_criteria(DEFAULT_PATH_CAP);
    let mut failures = 0;
    for (i, outcome) in outcomes.iter().enumerate() {
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{tag} [{:02}] {}: {}", i + 1, outcome.name, outcome.detail);
        if !outcome.passed {
            failures += 1;
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
