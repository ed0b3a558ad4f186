//! Run catalog statements through their verifiers and print the reports.
//!
//! ```bash
//! cargo run --release --example verify_statements
//! ```

use addspec::spectrum::verify::{verify_statement, Status, STATEMENT_IDS};
use addspec::spectrum::ScanOptions;

fn main() {
    let options = ScanOptions::default();

    println!("catalog: {}", STATEMENT_IDS.join(", "));
    println!();

    // A cross-section of the catalog at desk scale. Each verifier picks its
    // own N grid from s; the ones marked errata re-derive the known-bad
    // regions of two published prediction formulas and confirm every mismatch
    // lies inside them.
    let runs = [
        ("thm3.1", 1..=8),  // maximum r-value and its unique attainer
        ("thm3.4", 1..=8),  // minimizer sets in the crowded regime
        ("prop4.5", 2..=10), // sum-free sets of maximum size are structured
        ("thm4.6", 4..=8),  // the r = 1 sets at N = 2s - 1
        ("prop5.2", 3..=8), // prediction formula with a known-bad region
        ("thm5.9", 3..=9),  // full spectrum trichotomy in N
    ];
    for (id, s_range) in runs {
        let report = verify_statement(id, s_range, None, &options).unwrap();
        let status = match report.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Errata => "errata",
        };
        println!(
            "{:8} [{}] {status}, checked {}",
            report.statement_id, report.parameter_range, report.checked
        );
        for example in report.counterexamples.iter().take(3) {
            println!(
                "    {}: expected {}; got {}",
                example.parameters, example.expected, example.actual
            );
        }
        if report.counterexamples.len() > 3 {
            println!("    ... {} more", report.counterexamples.len() - 3);
        }
        assert!(report.passed());
    }

    // Narrow the N range: same statement, one column of the grid.
    let report = verify_statement("thm3.1", 4..=4, Some(6..=6), &options).unwrap();
    println!(
        "\nnarrowed {} [{}]: checked {} subsets",
        report.statement_id, report.parameter_range, report.checked
    );

    // Unknown ids are rejected with the full catalog in the message.
    let error = verify_statement("thm9.9", 2..=4, None, &options).unwrap_err();
    println!("\nunknown id: {error}");
}
