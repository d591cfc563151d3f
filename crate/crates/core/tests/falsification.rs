//! Falsification sweep: one thousand fuzzed instances across the
//! verifier family, all with satisfied hypotheses. A single "no witness
//! found" report anywhere fails the sweep.

use kkm_core::fuzz::run_suite;

#[test]
fn one_thousand_instances_produce_witnesses() {
    let plan = [
        ("kkm", 150usize, 11u64),
        ("gkkm", 150, 12),
        ("gsperner", 200, 13),
        ("tucker", 150, 14),
        ("degbound", 150, 15),
        ("polytope", 100, 16),
        ("bloch", 100, 17),
    ];
    let mut total = 0usize;
    for (suite, count, seed) in plan {
        let report = run_suite(suite, count, seed).unwrap();
        assert!(
            report.ok(),
            "suite {suite} raised alarms: {:?}",
            report.failures
        );
        total += report.passed;
    }
    assert_eq!(total, 1000);
    println!("falsification sweep: 1000 instances, no alarm");
}
