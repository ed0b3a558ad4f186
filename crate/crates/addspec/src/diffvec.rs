//! Difference vectors and the structure of sum-free (`r = 0`) sets.
//!
//! For `S = {x_1 < x_2 < ... < x_s}` the `i`-th difference vector is
//! `D_S(i) = (x_{1+i} - x_1, ..., x_s - x_{s-i})`. The union of the entries of
//! `D_S(1), ..., D_S(j)` grows by at least one value per step, and sets whose
//! positive difference set `(S - S)⁺` stays small (`s - 1` or `s` values) have
//! rigid shapes: they are arithmetic progressions or near-progressions, which
//! [`classify_zero_closed`] recognises by pattern-matching the gap word
//! `D_S(1)`.

use serde::Serialize;
use thiserror::Error;

use crate::set::IntSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffVecError {
    #[error("need at least 2 elements, got {size}")]
    TooFewElements { size: u32 },
    #[error("difference vector index {index} outside [1, {max}]")]
    IndexOutOfRange { index: u32, max: u32 },
    #[error("slack {k} outside [0, {max}] for this set")]
    SlackOutOfRange { k: u32, max: u32 },
    #[error("sum-free set {set:?} has {size} positive differences on {set_size} elements; no classification applies above {set_size}")]
    DifferenceSetTooLarge { set: IntSet, size: u32, set_size: u32 },
    #[error("sum-free set {set:?} matches no known gap pattern")]
    UnmatchedPattern { set: IntSet },
}

/// The first difference vector together with the full positive difference set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceProfile {
    pub base: IntSet,
    /// `(S - S)⁺`: every `x - y` with `x, y` in `S` and `x > y`.
    pub positive_differences: IntSet,
    /// Consecutive gaps `x_{j+1} - x_j`, length `|S| - 1`.
    pub first_diff_vector: Vec<u32>,
}

/// Gaps and difference set of `S`; requires at least two elements.
pub fn difference_profile(set: &IntSet) -> Result<DifferenceProfile, DiffVecError> {
    if set.len() < 2 {
        return Err(DiffVecError::TooFewElements { size: set.len() });
    }
    // (S - S)⁺ is the union of the downward translates S - y over members y,
    // restricted to positive values — which the right shift does by itself.
    let mask = set.mask();
    let mut differences = 0u128;
    for y in set.members() {
        differences |= mask >> y;
    }
    let positive_differences =
        IntSet::from_mask(differences, set.capacity()).expect("differences fit the same range");
    let members = set.to_vec();
    let first_diff_vector = members.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(DifferenceProfile {
        base: *set,
        positive_differences,
        first_diff_vector,
    })
}

/// `D_S(i)`: differences at index distance `i`, computed straight from the
/// sorted member list. A redundant check against the sums of consecutive gaps
/// guards the indexing.
pub fn difference_vector(set: &IntSet, i: u32) -> Result<Vec<u32>, DiffVecError> {
    let s = set.len();
    if s < 2 {
        return Err(DiffVecError::TooFewElements { size: s });
    }
    if i == 0 || i > s - 1 {
        return Err(DiffVecError::IndexOutOfRange { index: i, max: s - 1 });
    }
    let members = set.to_vec();
    let i = i as usize;
    let vector: Vec<u32> = (0..members.len() - i)
        .map(|j| members[j + i] - members[j])
        .collect();
    debug_assert_eq!(
        vector,
        (0..members.len() - i)
            .map(|j| (j..j + i).map(|t| members[t + 1] - members[t]).sum::<u32>())
            .collect::<Vec<_>>(),
        "entry must equal the sum of the consecutive gaps it spans"
    );
    Ok(vector)
}

/// Does `|D_S(1) ∪ ... ∪ D_S(j)| <= j + k` hold for every `j <= s - 1`?
///
/// With `k = max(S) - min(S) - (s - 1)` this always holds; smaller `k` holds
/// only for sets whose differences accumulate slowly.
pub fn lemma41_holds(set: &IntSet, k: u32) -> Result<bool, DiffVecError> {
    let s = set.len();
    if s < 2 {
        return Err(DiffVecError::TooFewElements { size: s });
    }
    let spread = set.max_element().unwrap() - set.min_element().unwrap();
    if k > spread {
        return Err(DiffVecError::SlackOutOfRange { k, max: spread });
    }
    let mut seen = 0u128;
    for j in 1..=s - 1 {
        for value in difference_vector(set, j).expect("j in range") {
            seen |= 1u128 << (value - 1);
        }
        if seen.count_ones() > j + k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shape of a sum-free set with a small difference set.
///
/// `x` is always the first term of the underlying progression, `a` its common
/// difference. For [`ZeroClosedClass::APMinusInnerTerm`] the progression has
/// `s + 1` terms and `deleted_index` (in `1..=s-1`) names which inner term is
/// missing; for [`ZeroClosedClass::APMinusSecondAndSecondLast`] it has `s + 2`
/// terms with the second and second-to-last removed. The sporadic four-element
/// shape is `{x, x + a, x + a + b, x + 2a + b}` with `a != b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroClosedClass {
    NotZeroClosed,
    SmallSetUnclassified,
    ArithmeticProgression { x: u32, a: u32 },
    APMinusInnerTerm { x: u32, a: u32, deleted_index: u32 },
    APMinusSecondAndSecondLast { x: u32, a: u32 },
    Sporadic4Term { x: u32, a: u32, b: u32 },
}

/// Classify a set by the shape of its gap word when its difference set is
/// small.
///
/// Sets with `r(S) > 0` report [`ZeroClosedClass::NotZeroClosed`]; up to three
/// elements nothing structural is claimed. Otherwise `|(S - S)⁺|` must be
/// `s - 1` (an arithmetic progression) or `s` (a punctured progression or the
/// sporadic four-element shape); anything else is an error — a genuinely
/// unmatched pattern at `|(S - S)⁺| = s` would contradict the classification
/// this module implements.
pub fn classify_zero_closed(set: &IntSet) -> Result<ZeroClosedClass, DiffVecError> {
    if set.r_value() != 0 {
        return Ok(ZeroClosedClass::NotZeroClosed);
    }
    let s = set.len();
    if s <= 3 {
        return Ok(ZeroClosedClass::SmallSetUnclassified);
    }
    let profile = difference_profile(set).expect("s >= 4");
    let gaps = &profile.first_diff_vector;
    let x = set.min_element().expect("non-empty");
    let diff_count = profile.positive_differences.len();

    if diff_count == s - 1 {
        let a = gaps[0];
        if gaps.iter().all(|&g| g == a) {
            return Ok(ZeroClosedClass::ArithmeticProgression { x, a });
        }
        return Err(DiffVecError::UnmatchedPattern { set: *set });
    }
    if diff_count > s {
        return Err(DiffVecError::DifferenceSetTooLarge {
            set: *set,
            size: diff_count,
            set_size: s,
        });
    }

    // diff_count == s: gap word over at most two symbols {a, 2a}, or the
    // sporadic (a, b, a). A double gap at position p means term p of the
    // underlying progression is the deleted one.
    if let Some(class) = match_single_double_gap(x, gaps) {
        return Ok(class);
    }
    if let Some(class) = match_double_gaps_at_both_ends(x, gaps) {
        return Ok(class);
    }
    if s == 4 && gaps[0] == gaps[2] && gaps[0] != gaps[1] {
        return Ok(ZeroClosedClass::Sporadic4Term {
            x,
            a: gaps[0],
            b: gaps[1],
        });
    }
    Err(DiffVecError::UnmatchedPattern { set: *set })
}

fn match_single_double_gap(x: u32, gaps: &[u32]) -> Option<ZeroClosedClass> {
    // Exactly one gap of 2a among gaps of a, at any position.
    let a = gaps.iter().copied().min()?;
    let doubles = gaps.iter().filter(|&&g| g == 2 * a).count();
    let singles = gaps.iter().filter(|&&g| g == a).count();
    if a >= 1 && doubles == 1 && singles == gaps.len() - 1 {
        let position = gaps.iter().position(|&g| g == 2 * a)? as u32;
        Some(ZeroClosedClass::APMinusInnerTerm {
            x,
            a,
            deleted_index: position + 1,
        })
    } else {
        None
    }
}

fn match_double_gaps_at_both_ends(x: u32, gaps: &[u32]) -> Option<ZeroClosedClass> {
    // Gap word (2a, a, ..., a, 2a).
    let first = *gaps.first()?;
    let last = *gaps.last()?;
    if first != last || first % 2 != 0 || gaps.len() < 3 {
        return None;
    }
    let a = first / 2;
    if gaps[1..gaps.len() - 1].iter().all(|&g| g == a) {
        Some(ZeroClosedClass::APMinusSecondAndSecondLast { x, a })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_of_known_set() {
        let profile = difference_profile(&IntSet::of(&[1, 3, 4, 5, 7])).unwrap();
        assert_eq!(profile.positive_differences, IntSet::of(&[1, 2, 3, 4, 6]));
        assert_eq!(profile.first_diff_vector, vec![2, 1, 1, 2]);
        assert!(difference_profile(&IntSet::of(&[5])).is_err());
    }

    #[test]
    fn difference_vectors_of_known_set() {
        let set = IntSet::of(&[1, 3, 4, 5, 7]);
        assert_eq!(difference_vector(&set, 1).unwrap(), vec![2, 1, 1, 2]);
        assert_eq!(difference_vector(&set, 2).unwrap(), vec![3, 2, 3]);
        assert_eq!(difference_vector(&set, 4).unwrap(), vec![6]);
        assert!(difference_vector(&set, 0).is_err());
        assert!(difference_vector(&set, 5).is_err());
    }

    #[test]
    fn slow_difference_accumulation() {
        let set = IntSet::of(&[7, 9, 10, 11, 12]);
        assert_eq!(
            difference_profile(&set).unwrap().positive_differences,
            IntSet::of(&[1, 2, 3, 4, 5])
        );
        assert!(lemma41_holds(&set, 1).unwrap());
        assert!(!lemma41_holds(&set, 0).unwrap());
        assert!(lemma41_holds(&IntSet::of(&[2, 4, 6, 8]), 0).unwrap());
        assert!(lemma41_holds(&set, 5).unwrap());
        assert!(lemma41_holds(&set, 6).is_err());
    }

    #[test]
    fn classify_progression_shapes() {
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[1, 3, 5, 7])).unwrap(),
            ZeroClosedClass::ArithmeticProgression { x: 1, a: 2 }
        );
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[4, 5, 6, 7])).unwrap(),
            ZeroClosedClass::ArithmeticProgression { x: 4, a: 1 }
        );
        // [7, 12] with 8 deleted: double gap right after the first term.
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[7, 9, 10, 11, 12])).unwrap(),
            ZeroClosedClass::APMinusInnerTerm { x: 7, a: 1, deleted_index: 1 }
        );
        // [9, 15] minus second and second-last: {9, 11, 12, 13, 15}.
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[9, 11, 12, 13, 15])).unwrap(),
            ZeroClosedClass::APMinusSecondAndSecondLast { x: 9, a: 1 }
        );
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[2, 3, 7, 8])).unwrap(),
            ZeroClosedClass::Sporadic4Term { x: 2, a: 1, b: 4 }
        );
    }

    #[test]
    fn classify_edge_tags() {
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[1, 2, 4])).unwrap(),
            ZeroClosedClass::NotZeroClosed
        );
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[1, 3, 5])).unwrap(),
            ZeroClosedClass::SmallSetUnclassified
        );
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[])).unwrap(),
            ZeroClosedClass::SmallSetUnclassified
        );
        // {1, 4, 9, 11}: sum-free but with 6 distinct positive differences.
        assert!(matches!(
            classify_zero_closed(&IntSet::of(&[1, 4, 9, 11])),
            Err(DiffVecError::DifferenceSetTooLarge { .. })
        ));
    }

    #[test]
    fn sporadic_shape_with_wide_gaps() {
        // {1, 4, 6, 9} = {x, x+a, x+a+b, x+2a+b} with a = 3, b = 2.
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[1, 4, 6, 9])).unwrap(),
            ZeroClosedClass::Sporadic4Term { x: 1, a: 3, b: 2 }
        );
    }

    #[test]
    fn double_gap_at_either_end_is_an_inner_deletion() {
        // [8, 13] \ {9} and [8, 13] \ {12}: the deleted term is the first or
        // last *inner* term of the 6-term progression. (All sums exceed 13,
        // so both sets really are 0-closed.)
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[8, 10, 11, 12, 13])).unwrap(),
            ZeroClosedClass::APMinusInnerTerm { x: 8, a: 1, deleted_index: 1 }
        );
        assert_eq!(
            classify_zero_closed(&IntSet::of(&[8, 9, 10, 11, 13])).unwrap(),
            ZeroClosedClass::APMinusInnerTerm { x: 8, a: 1, deleted_index: 4 }
        );
    }
}
