//! Difference sets, gap vectors, and the structure of sum-free sets.
//!
//! ```bash
//! cargo run --example difference_vectors
//! ```

use addspec::diffvec::{
    classify_zero_closed, difference_profile, difference_vector, lemma41_holds,
};
use addspec::set::IntSet;

fn main() {
    let set = IntSet::of(&[1, 3, 4, 5, 7]);
    let profile = difference_profile(&set).unwrap();
    println!("set {set:?}");
    println!("  positive differences: {:?}", profile.positive_differences);
    println!("  consecutive gaps:     {:?}", profile.first_diff_vector);
    for i in 1..set.len() {
        println!("  D({i}) = {:?}", difference_vector(&set, i).unwrap());
    }

    // How fast can the union of difference vectors grow? With slack k, the
    // first j of them cover at most j + k values.
    let slow = IntSet::of(&[7, 9, 10, 11, 12]);
    for k in 0..=2 {
        println!(
            "slack {k} bound for {slow:?}: {}",
            lemma41_holds(&slow, k).unwrap()
        );
    }

    // Sum-free sets with few distinct differences have rigid shapes.
    let examples = [
        IntSet::of(&[1, 3, 5, 7]),       // plain progression
        IntSet::of(&[7, 9, 10, 11, 12]), // progression with an inner term deleted
        IntSet::of(&[9, 11, 12, 13, 15]),// second and second-last deleted
        IntSet::of(&[2, 3, 7, 8]),       // the sporadic 4-term shape
        IntSet::of(&[1, 2, 4]),          // not sum-free at all
        IntSet::of(&[1, 4, 9, 11]),      // too many differences to classify
    ];
    for set in examples {
        match classify_zero_closed(&set) {
            Ok(class) => println!("{set:?} -> {class:?}"),
            Err(error) => println!("{set:?} -> unclassifiable: {error}"),
        }
    }
}
