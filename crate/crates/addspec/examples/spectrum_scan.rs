//! Exhaustive spectra: which `r`-values do `s`-subsets of `[1, N]` attain?
//!
//! ```bash
//! cargo run --release --example spectrum_scan
//! ```

use addspec::formulas::{exception_candidates, max_r_value, min_r_value};
use addspec::spectrum::{enumerate_spectrum, sets_with_r, ScanOptions};

fn main() {
    let options = ScanOptions::default();

    // R(s, N) for a band of interval lengths at fixed s. The attained set
    // only ever grows with N; gaps appear in the middle band s+2 <= N <= 2s-2.
    let s = 6;
    println!("spectra for s = {s}:");
    for n in s..=2 * s {
        let result = enumerate_spectrum(s, n, &options).unwrap();
        let gaps: Vec<u64> = result.exceptions.iter().copied().collect();
        println!(
            "  R({s},{n:2}) f={:2} g={:2} attained {:?} missing {gaps:?}",
            result.f,
            result.g,
            result.attained.iter().collect::<Vec<_>>(),
        );
        assert_eq!(result.f, min_r_value(u64::from(s), u64::from(n)).unwrap());
        assert_eq!(result.g, max_r_value(u64::from(s)));
    }

    // Every gap falls among the predicted candidate values.
    println!("\ngap versus candidate values for s = {s}:");
    for n in s + 2..=2 * s - 2 {
        let result = enumerate_spectrum(s, n, &options).unwrap();
        let candidates = exception_candidates(u64::from(s), u64::from(n));
        println!(
            "  N={n}: missing {:?} candidates {candidates:?}",
            result.exceptions.iter().collect::<Vec<_>>()
        );
        assert!(result.exceptions.iter().all(|r| candidates.contains(r)));
    }

    // Extremal witnesses, with exact counts even when the list is truncated.
    let result = enumerate_spectrum(5, 10, &options).unwrap();
    println!("\nR(5,10): {} subsets scanned", result.scanned);
    println!(
        "  r={} attained by {} sets, first: {:?}",
        result.f, result.min_count, result.min_sets[0]
    );
    println!(
        "  r={} attained by {} sets, first: {:?}",
        result.g, result.max_count, result.max_sets[0]
    );

    // Target one r-value directly.
    let ones = sets_with_r(4, 7, 1, 10, &options).unwrap();
    println!("\nall 4-subsets of [1,7] with r = 1 ({} total):", ones.total);
    for set in &ones.sets {
        println!("  {set:?}");
    }

    // Identical output for any worker count.
    let serial = enumerate_spectrum(8, 16, &ScanOptions::serial()).unwrap();
    let parallel = enumerate_spectrum(8, 16, &ScanOptions::serial().with_workers(8)).unwrap();
    assert_eq!(serial, parallel);
    println!("\nR(8,16) identical with 1 and 8 workers ({} subsets)", serial.scanned);
}
