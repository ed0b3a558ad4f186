//! Combination counting and colexicographic iteration over fixed-size
//! subsets, represented as bit masks (bit `k` = element `k + 1`).
//!
//! Colexicographic order on sets coincides with numeric order on masks, so
//! "next subset" is the classic same-popcount successor and ranks come from
//! the combinatorial number system: `rank{c_1 < ... < c_k} = sum C(c_i, i)`
//! over 0-based bit positions. That gives workers O(1) seeking into any
//! enumeration interval.

use std::ops::Range;

/// `C(n, k)`, exactly; `None` if the value overflows `u128`. For the ground
/// sets this crate supports (`n <= 128`) the value always fits.
pub fn binomial(n: u32, k: u32) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=u128::from(k) {
        // result * m / i, split so the transient product stays representable:
        // i divides result * m, hence i also divides (result % i) * m.
        let m = u128::from(n) - u128::from(k) + i;
        result = (result / i).checked_mul(m)?.checked_add(result % i * m / i)?;
    }
    Some(result)
}

/// Colexicographic rank of a subset mask among all subsets of its size.
pub fn rank_colex(mask: u128) -> u128 {
    let mut rank: u128 = 0;
    let mut rest = mask;
    let mut index = 0u32;
    while rest != 0 {
        index += 1;
        let position = rest.trailing_zeros();
        rank += binomial(position, index).expect("rank fits u128");
        rest &= rest - 1;
    }
    rank
}

/// Inverse of [`rank_colex`] for `k`-subsets of an `n`-element ground set.
pub fn unrank_colex(n: u32, k: u32, mut rank: u128) -> u128 {
    debug_assert!(binomial(n, k).map_or(true, |total| rank < total));
    let mut mask = 0u128;
    let mut upper = n;
    for i in (1..=k).rev() {
        // Largest position c with C(c, i) <= remaining rank.
        let mut c = upper - 1;
        loop {
            let below = binomial(c, i).expect("within range");
            if below <= rank {
                rank -= below;
                mask |= 1u128 << c;
                upper = c;
                break;
            }
            c -= 1;
        }
    }
    mask
}

/// Next mask with the same popcount in increasing numeric order
/// (= colexicographic successor). Must not be called on the last combination.
pub fn next_combination(mask: u128) -> u128 {
    debug_assert!(mask != 0);
    let lowest = mask & mask.wrapping_neg();
    let carried = mask + lowest;
    carried | (((mask ^ carried) / lowest) >> 2)
}

/// Split `[0, total)` into `workers` contiguous intervals whose lengths
/// differ by at most one, in order.
pub fn partition_ranks(total: u64, workers: usize) -> Vec<Range<u64>> {
    assert!(workers >= 1, "need at least one worker");
    let workers = workers as u64;
    let base = total / workers;
    let extra = total % workers;
    let mut ranges = Vec::with_capacity(workers as usize);
    let mut start = 0;
    for index in 0..workers {
        let len = base + u64::from(index < extra);
        ranges.push(start..start + len);
        start += len;
    }
    debug_assert_eq!(start, total);
    ranges
}
