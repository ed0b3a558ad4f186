//! Are the spectrum gaps *exactly* the candidate ladder? Exhaustive check
//! over the crowded grid up to a chosen size.
//!
//! ```bash
//! cargo run --release --example conjecture_scan
//! ```

use addspec::formulas::exception_candidates;
use addspec::spectrum::verify::conjecture_scan;
use addspec::spectrum::{enumerate_spectrum, ScanOptions};

fn main() {
    let options = ScanOptions::default();

    // The claim: for s >= 4 and s + 2 <= N <= 2s - 2, the unattained values
    // of [f, g] are precisely f + 1, f + 3, ... (the first few odd offsets).
    // Proved one-directional (every gap is a candidate); exactness is open.
    let s_max = 10;
    let report = conjecture_scan(s_max, &options).unwrap();
    println!(
        "conjecture over [{}]: {:?}, {} subsets checked, {} counterexamples",
        report.parameter_range,
        report.status,
        report.checked,
        report.counterexamples.len()
    );
    assert!(report.passed());

    // The same comparison by hand for one s, cell by cell.
    let s = 7;
    println!("\ncell-by-cell at s = {s}:");
    for n in s + 2..=2 * s - 2 {
        let result = enumerate_spectrum(s, n, &options).unwrap();
        let predicted = exception_candidates(u64::from(s), u64::from(n));
        let observed: Vec<u64> = result.exceptions.iter().copied().collect();
        let verdict = if observed == predicted { "match" } else { "MISMATCH" };
        println!("  N={n}: observed {observed:?} predicted {predicted:?} -> {verdict}");
    }

    // Below the grid there is nothing to check.
    let error = conjecture_scan(3, &options).unwrap_err();
    println!("\ns_max below the grid: {error}");
}
