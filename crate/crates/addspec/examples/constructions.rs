//! Realize named set families from text specs and compare each predicted
//! r-value with a direct count — including the parameter regions where the
//! published predictions are known to be wrong.
//!
//! ```bash
//! cargo run --example constructions
//! ```

use addspec::constructions::{maximizer_sets, minimizer_sets, realize, theorem46_sets};

fn main() {
    let specs = [
        "interval:i=2,s=5",
        "ap:x=2,a=2,s=4",
        "interval_plus_point:s=4,x=6",
        "interval_minus_point:i=2,s=5,x=3",
        "family52:s=5,a=3,x=3",
        "family53:s=5,a=3,x=2",
        "family57:s=5,a=2,x=3",
        // Known-bad region: the family52 formula overcounts when a = 2.
        "family52:s=5,a=2,x=2",
    ];
    for text in specs {
        let spec = text.parse().unwrap();
        let prediction = realize(&spec).unwrap();
        let actual = prediction.set.r_value();
        let verdict = match (prediction.predicted_r == actual, prediction.in_validated_range) {
            (true, _) => "ok",
            (false, false) => "MISMATCH (outside validated range)",
            (false, true) => "MISMATCH (unexpected!)",
        };
        println!(
            "{text:38} -> {:?} predicted={} actual={actual} {verdict}",
            prediction.set, prediction.predicted_r
        );
    }

    // The r-maximizers are exactly the dilated initial intervals x·[1..s].
    println!("\nmaximizers for s=3, N=9: {:?}", maximizer_sets(3, 9));

    // In the crowded regime the minimum is attained by the top interval,
    // joined by the odd numbers exactly at 2s = N + 1.
    println!("minimizers for s=4, N=7: {:?}", minimizer_sets(4, 7).unwrap());
    println!("minimizers for s=4, N=6: {:?}", minimizer_sets(4, 6).unwrap());

    // The only two catalog shapes with r = 1 at N = 2s - 1.
    println!("r=1 shapes for s=6: {:?}", theorem46_sets(6).unwrap());
}
