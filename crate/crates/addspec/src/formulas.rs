//! Closed forms for `r(S)` on structured families, and the extremal values of
//! the spectrum.
//!
//! Everything here is exact integer arithmetic; the half-integer boundary
//! conditions are expressed by doubling (`2x <= i + s - 1` rather than
//! `x <= (i + s - 1) / 2`), so no rounding decision ever depends on floats.

use std::fmt;

use thiserror::Error;

/// A formula was evaluated outside its structural domain (for instance a
/// punctured interval where the punctured point is not in the interval).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct FormulaDomainError {
    pub formula: &'static str,
    pub parameters: Vec<(&'static str, u64)>,
    pub constraint: &'static str,
}

impl fmt::Display for FormulaDomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: requires {} (got ", self.formula, self.constraint)?;
        for (index, (name, value)) in self.parameters.iter().enumerate() {
            if index > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name}={value}")?;
        }
        write!(f, ")")
    }
}

fn triangle(k: u64) -> u64 {
    k * (k + 1) / 2
}

/// `r([i, i + s - 1])`: the interval of size `s` starting at `i` has
/// `(s - i)(s - i + 1) / 2` closing pairs when `1 <= i <= s - 1`, none when
/// `i >= s` (the interval is then sum-free).
pub fn interval_r(i: u64, s: u64) -> u64 {
    debug_assert!(i >= 1 && s >= 1);
    if i < s {
        triangle(s - i)
    } else {
        0
    }
}

/// `r({x, x + a, ..., x + (s - 1)a})`: zero unless `a` divides `x`; writing
/// `x = ga`, the count matches the interval starting at `g`.
pub fn ap_r(x: u64, a: u64, s: u64) -> u64 {
    debug_assert!(x >= 1 && a >= 1 && s >= 1);
    if x % a != 0 {
        return 0;
    }
    let g = x / a;
    if g < s {
        triangle(s - g)
    } else {
        0
    }
}

/// `r([1, s] ∪ {x})` for an attached point `x > s`.
///
/// The base interval contributes `s(s - 1)/2`; the extra point adds
/// `2s + 1 - x` pairs while it is still reachable (`x <= 2s`) and nothing
/// beyond that.
pub fn interval_plus_point_r(s: u64, x: u64) -> Result<u64, FormulaDomainError> {
    if s == 0 || x <= s {
        return Err(FormulaDomainError {
            formula: "interval_plus_point_r",
            parameters: vec![("s", s), ("x", x)],
            constraint: "x >= s + 1",
        });
    }
    let base = s * (s - 1) / 2;
    if x <= 2 * s {
        Ok(base + (2 * s + 1 - x))
    } else {
        Ok(base)
    }
}

/// `r([i, i + s - 1] \ {x})` for a point `x` inside the interval.
///
/// Starting from the full interval's count, deleting `x` removes the pairs
/// where `x` is the sum (`max(x - 2i + 1, 0)` of them) and where `x` is a
/// summand (`max(2(s - x), 0)`, corrected by one when `(x, x)` was both).
pub fn interval_minus_point_r(i: u64, s: u64, x: u64) -> Result<u64, FormulaDomainError> {
    if i == 0 || s == 0 || x < i || x > i + s - 1 {
        return Err(FormulaDomainError {
            formula: "interval_minus_point_r",
            parameters: vec![("i", i), ("s", s), ("x", x)],
            constraint: "i <= x <= i + s - 1",
        });
    }
    if i >= s {
        return Ok(0);
    }
    let base = triangle(s - i) as i64;
    let x = x as i64;
    let (i, s) = (i as i64, s as i64);
    let lost_as_sum = (x - 2 * i + 1).max(0);
    let lost_as_summand = (2 * (s - x)).max(0);
    let double_counted = if 2 * x <= i + s - 1 { 1 } else { 0 };
    let r = base - lost_as_sum - lost_as_summand + double_counted;
    debug_assert!(r >= 0);
    Ok(r as u64)
}

/// `g(s)`: the largest value `r` attains on any `s`-element set, `s(s - 1)/2`.
pub fn max_r_value(s: u64) -> u64 {
    triangle(s.saturating_sub(1))
}

/// `f(s, N)`: the smallest value `r` attains on `s`-element subsets of
/// `[1, N]`. Zero when a sum-free `s`-set fits (`2s <= N + 1`), otherwise
/// `(2s - N)(2s - N - 1) / 2`.
pub fn min_r_value(s: u64, n: u64) -> Result<u64, FormulaDomainError> {
    if s == 0 || s > n {
        return Err(FormulaDomainError {
            formula: "min_r_value",
            parameters: vec![("s", s), ("N", n)],
            constraint: "1 <= s <= N",
        });
    }
    if 2 * s <= n + 1 {
        Ok(0)
    } else {
        let d = 2 * s - n;
        Ok(d * (d - 1) / 2)
    }
}

/// Candidate unattained values in `[f, g]` for `s`-subsets of `[1, N]`.
///
/// In the crowded regime `s + 2 <= N <= 2s - 2` the only values that can be
/// skipped are `f + 1, f + 3, f + 5, ...` — the first
/// `min(s - ceil(N/2), floor((N - s)/2))` odd offsets above the minimum.
/// Outside that regime the spectrum is a full interval and this is empty.
pub fn exception_candidates(s: u64, n: u64) -> Vec<u64> {
    if s < 2 || n < s + 2 || n > 2 * s - 2 {
        return Vec::new();
    }
    let f = min_r_value(s, n).expect("s <= n in the crowded regime");
    let above_half = s - (n + 1) / 2;
    let room = (n - s) / 2;
    let count = above_half.min(room);
    (1..=count).map(|i| f + 2 * i - 1).collect()
}
