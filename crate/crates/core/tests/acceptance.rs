//! The acceptance suite: runs every criterion's checks and prints one
//! pass/fail line per criterion. All comparisons are exact; there are no
//! tolerances to tune.

use netmods::checks::{run_suite, ACCEPTANCE};

#[test]
fn acceptance_criteria() {
    let mut failures = Vec::new();
    for (criterion, suite) in ACCEPTANCE {
        let reports = run_suite(suite).expect("acceptance suites are registered");
        let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
        if failed.is_empty() {
            println!("PASS  criterion {criterion}");
            for report in &reports {
                println!("      - {}: {}", report.name, report.detail);
            }
        } else {
            println!("FAIL  criterion {criterion}");
            for report in failed {
                println!("      - {}: {}", report.name, report.detail);
                failures.push(format!("{criterion}: {}: {}", report.name, report.detail));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "acceptance criteria failed:\n{}",
        failures.join("\n")
    );
}
