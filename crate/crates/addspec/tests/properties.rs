//! Randomized invariants, each holding for *every* set, not just the
//! worked examples: agreement of the four counting methods, monotonicity
//! and dilation behavior of `r`, difference-set characterizations, and
//! exactness of the combinatorial ranking machinery.

use std::collections::BTreeSet;

use proptest::prelude::*;

use addspec::diffvec::{difference_profile, difference_vector, lemma41_holds};
use addspec::formulas::{ap_r, interval_minus_point_r, max_r_value};
use addspec::set::{IntSet, RMethod};
use addspec::spectrum::{
    binomial, enumerate_spectrum, next_combination, rank_colex, unrank_colex, ScanOptions,
};

fn member_sets(cap: u32, max_len: usize) -> impl Strategy<Value = IntSet> {
    prop::collection::btree_set(1..=cap, 1..=max_len)
        .prop_map(move |members| IntSet::from_members(cap, members).unwrap())
}

proptest! {
    #[test]
    fn counting_methods_agree(set in member_sets(128, 14)) {
        let reference = set.r_value_by(RMethod::PairSum);
        for method in [RMethod::PairDifference, RMethod::ShiftSum, RMethod::DifferenceSum] {
            prop_assert_eq!(set.r_value_by(method), reference);
        }
        prop_assert_eq!(set.r_value(), reference);
    }

    #[test]
    fn adding_an_element_never_lowers_r(set in member_sets(63, 10), extra in 1u32..=64) {
        let bigger = IntSet::from_members(64, set.members().chain([extra])).unwrap();
        prop_assert!(bigger.r_value() >= set.r_value());
    }

    #[test]
    fn r_is_dilation_invariant(set in member_sets(32, 10), k in 1u32..=4) {
        let dilated = IntSet::from_members(128, set.members().map(|m| m * k)).unwrap();
        prop_assert_eq!(dilated.r_value(), set.r_value());
    }

    #[test]
    fn r_respects_the_triangle_bound(set in member_sets(128, 14)) {
        prop_assert!(set.r_value() <= max_r_value(set.len() as u64));
    }

    #[test]
    fn subsets_of_sum_free_sets_are_sum_free(set in member_sets(64, 12), keep in any::<u128>()) {
        if set.is_sum_free() {
            let sub = IntSet::from_mask(set.mask() & keep, 64).unwrap();
            prop_assert!(sub.is_sum_free());
        }
    }

    /// r(S) = 0 exactly when S avoids its own positive differences.
    #[test]
    fn sum_free_iff_disjoint_from_differences(set in member_sets(64, 12)) {
        prop_assume!(set.len() >= 2);
        let differences = difference_profile(&set).unwrap().positive_differences;
        let disjoint = set.mask() & differences.mask() == 0;
        prop_assert_eq!(set.is_sum_free(), disjoint);
    }

    /// The slack bound holds exactly for k at least the worst prefix excess
    /// max_j(|D(1) ∪ … ∪ D(j)| - j), recomputed here from scratch.
    #[test]
    fn difference_slack_threshold_is_exact(set in member_sets(64, 10)) {
        let s = set.len() as usize;
        prop_assume!(s >= 2);
        let mut union: BTreeSet<u32> = BTreeSet::new();
        let mut worst: i64 = i64::MIN;
        for j in 1..=(s - 1) {
            union.extend(difference_vector(&set, j as u32).unwrap());
            worst = worst.max(union.len() as i64 - j as i64);
        }
        let threshold = worst.max(0) as u32;
        prop_assert!(lemma41_holds(&set, threshold).unwrap());
        if threshold > 0 {
            prop_assert!(!lemma41_holds(&set, threshold - 1).unwrap());
        }
    }

    #[test]
    fn rank_and_unrank_are_inverse(n in 1u32..=24, k in 1u32..=12, seed in any::<u64>()) {
        prop_assume!(k <= n);
        let total = binomial(n, k).unwrap();
        let rank = u128::from(seed) % total;
        let mask = unrank_colex(n, k, rank);
        prop_assert_eq!(mask.count_ones(), k);
        prop_assert!(mask < 1u128 << n);
        prop_assert_eq!(rank_colex(mask), rank);
        if rank + 1 < total {
            prop_assert_eq!(next_combination(mask), unrank_colex(n, k, rank + 1));
        }
    }

    #[test]
    fn spectra_nest_as_the_interval_grows(s in 2u32..=4, n in 4u32..=9) {
        prop_assume!(s <= n);
        let options = ScanOptions::serial();
        let smaller = enumerate_spectrum(s, n, &options).unwrap();
        let larger = enumerate_spectrum(s, n + 1, &options).unwrap();
        prop_assert!(smaller.attained.is_subset(&larger.attained));
    }

    #[test]
    fn display_and_serde_round_trip(set in member_sets(128, 12)) {
        let text = set.to_string();
        let parsed = IntSet::parse(&text, 128).unwrap();
        prop_assert_eq!(parsed, set);

        let json = serde_json::to_string(&set).unwrap();
        let back: IntSet = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, set);
    }

    /// Closed forms hold on arbitrary in-range parameters, not just the
    /// frozen examples.
    #[test]
    fn interval_minus_point_matches_oracle(i in 1u64..=30, s in 2u64..=12, offset in 0u64..12) {
        let x = i + (offset % s);
        let set = IntSet::from_members(
            64,
            (i..i + s).filter(|&m| m != x).map(|m| m as u32),
        ).unwrap();
        prop_assert_eq!(
            interval_minus_point_r(i, s, x).unwrap(),
            set.r_value_by(RMethod::PairSum)
        );
    }

    #[test]
    fn ap_formula_matches_oracle(x in 1u64..=20, a in 1u64..=6, s in 1u64..=10) {
        prop_assume!(x + (s - 1) * a <= 128);
        let set = IntSet::from_members(
            128,
            (0..s).map(|t| (x + t * a) as u32),
        ).unwrap();
        prop_assert_eq!(ap_r(x, a, s), set.r_value_by(RMethod::PairSum));
    }
}
