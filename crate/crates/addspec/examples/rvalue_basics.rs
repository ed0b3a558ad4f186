//! Build sets a few different ways and count their internal sums.
//!
//! ```bash
//! cargo run --example rvalue_basics
//! ```

use addspec::set::{IntSet, RMethod};

fn main() {
    // r(S) counts ordered pairs (x, y) from S whose sum lands back in S.
    // {1,2} has exactly one: 1 + 1 = 2.
    let tiny = IntSet::of(&[1, 2]);
    println!("r({tiny:?}) = {}", tiny.r_value());

    // Four ways to build the same thing.
    let by_literal = IntSet::of(&[2, 4, 6, 8]);
    let by_text: IntSet = "2,4,6,8".parse().unwrap();
    let by_members = IntSet::from_members(64, [2, 4, 6, 8]).unwrap();
    let by_interval = IntSet::interval(2, 8, 64).unwrap().without(3).without(5).without(7);
    assert_eq!(by_literal, by_text);
    assert_eq!(by_literal, by_members);
    assert_eq!(by_literal, by_interval);

    // All four counting methods give the same number; the shift-sum kernel
    // is the one the enumerators use.
    let set = IntSet::of(&[1, 3, 4, 5, 7]);
    for method in [
        RMethod::PairSum,
        RMethod::PairDifference,
        RMethod::ShiftSum,
        RMethod::DifferenceSum,
    ] {
        println!("{method:?}: r({set:?}) = {}", set.r_value_by(method));
    }

    // Sum-free means r = 0.
    for candidate in [IntSet::of(&[4, 5, 6, 7]), IntSet::of(&[1, 2, 4]), IntSet::of(&[2, 3, 7, 8])] {
        println!(
            "{candidate:?} is {}",
            if candidate.is_sum_free() { "sum-free" } else { "not sum-free" }
        );
    }

    // Sets order colexicographically: compare from the largest element down.
    let mut sets = vec![
        IntSet::of(&[5, 6, 7, 8]),
        IntSet::of(&[1, 3, 5, 7]),
        IntSet::of(&[2, 3, 7, 8]),
        IntSet::of(&[4, 5, 6, 7]),
    ];
    sets.sort();
    println!("colex order: {sets:?}");
}
