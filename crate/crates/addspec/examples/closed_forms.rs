//! Closed-form r-values for structured sets, cross-checked against direct
//! counting.
//!
//! ```bash
//! cargo run --example closed_forms
//! ```

use addspec::formulas::{
    ap_r, exception_candidates, interval_minus_point_r, interval_plus_point_r, interval_r,
    max_r_value, min_r_value,
};
use addspec::set::IntSet;

fn main() {
    // Intervals: [i, i+s-1] has r = T(s-i) where T is the triangle number.
    let interval = IntSet::interval(2, 6, 64).unwrap();
    println!("interval [2,6]: formula {} direct {}", interval_r(2, 5), interval.r_value());

    // Arithmetic progressions: nonzero only when the difference divides the
    // first term.
    let ap = IntSet::of(&[2, 4, 6, 8]);
    println!("AP 2,4,6,8:     formula {} direct {}", ap_r(2, 2, 4), ap.r_value());
    println!("AP 3,5,7,9:     formula {} direct {}", ap_r(3, 2, 4), IntSet::of(&[3, 5, 7, 9]).r_value());

    // An interval with one point attached above...
    let attached = IntSet::of(&[1, 2, 3, 4, 6]);
    println!(
        "[1,4] + {{6}}:    formula {} direct {}",
        interval_plus_point_r(4, 6).unwrap(),
        attached.r_value()
    );

    // ...or one point deleted inside.
    let punctured = IntSet::of(&[2, 4, 5, 6]);
    println!(
        "[2,6] - {{3}}:    formula {} direct {}",
        interval_minus_point_r(2, 5, 3).unwrap(),
        punctured.r_value()
    );

    // Out-of-domain parameters are errors, not silent zeros.
    println!("bad domain: {}", interval_plus_point_r(4, 3).unwrap_err());

    // Extremes of the spectrum R(s, N): the maximum never depends on N; the
    // minimum leaves zero once s-sets no longer fit above N/2.
    for (s, n) in [(5, 10), (5, 9), (5, 8), (5, 7), (5, 6), (5, 5)] {
        println!(
            "s={s} N={n}: f={} g={}",
            min_r_value(s, n).unwrap(),
            max_r_value(s)
        );
    }

    // In the crowded middle regime some values of [f, g] are unattainable;
    // these are the candidate positions.
    for (s, n) in [(4, 6), (5, 7), (6, 8), (6, 9), (8, 12)] {
        println!("candidates s={s} N={n}: {:?}", exception_candidates(s, n));
    }
}
