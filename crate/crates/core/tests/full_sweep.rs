//! Sweep every registered statement over its default instance family and
//! demand zero FAIL verdicts: the statements are proved, so a FAIL can only
//! mean an implementation bug.

use sgring::harness::{run_statements, SweepConfig, Verdict};

#[test]
fn full_sweep_has_no_failures() {
    let cfg = SweepConfig {
        genus_max: 8,
        ideals_per_semigroup: 30,
        ..Default::default()
    };
    let reports = run_statements("*", &cfg).expect("sweep must run to completion");
    assert!(
        reports.len() > 200,
        "suspiciously small sweep: {}",
        reports.len()
    );

    let failures: Vec<_> = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Fail)
        .collect();
    assert!(
        failures.is_empty(),
        "FAIL verdicts in sweep:\n{}",
        failures
            .iter()
            .map(|r| format!("{} {}", r.statement_id, r.instance))
            .collect::<Vec<_>>()
            .join("\n")
    );

    // Sanity: a healthy share of instances actually pass; skips come from
    // statements whose preconditions a random ideal often misses (principal,
    // or trace equal to R).
    let passes = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Pass)
        .count();
    assert!(
        passes * 5 > reports.len() * 2,
        "only {passes} of {} reports passed",
        reports.len()
    );
}

#[test]
fn sweep_is_deterministic() {
    let cfg = SweepConfig {
        genus_max: 4,
        ideals_per_semigroup: 5,
        ..Default::default()
    };
    let a = run_statements("prop-*", &cfg).unwrap();
    let b = run_statements("prop-*", &cfg).unwrap();
    let render = |rs: &[sgring::harness::CheckReport]| {
        rs.iter()
            .map(|r| serde_json::to_string(r).unwrap())
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(render(&a), render(&b));
}
