//! Parameterized set families with predicted `r`-values, and the explicit
//! extremal-set constructions.
//!
//! [`realize`] builds the family member and reports the closed-form
//! prediction for its `r`-value. Predictions carry an `in_validated_range`
//! flag: the punctured-interval families `family52` and `family53` have
//! published formulas that are wrong on part of their stated parameter range
//! (see the field docs on [`Prediction`]); outside the validated range the
//! prediction is still reported verbatim so the discrepancy can be exhibited,
//! but it is flagged as unreliable.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::{
    ap_r, interval_minus_point_r, interval_plus_point_r, interval_r, max_r_value, min_r_value,
};
use crate::set::{IntSet, SetError, MAX_CAPACITY};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family}: {constraint}")]
    ParameterRange { family: &'static str, constraint: String },
    #[error("construction reaches {needed}, beyond the supported bound {max}")]
    CapacityExceeded { needed: u64, max: u32 },
    #[error("cannot parse construction {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A family name plus its parameters, written `family:key=value,...` in text
/// form, e.g. `family52:s=5,a=3,x=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionSpec {
    /// `[i, i + s - 1]`.
    Interval { i: u32, s: u32 },
    /// `{x, x + a, ..., x + (s - 1)a}`.
    Ap { x: u32, a: u32, s: u32 },
    /// `[1, s] ∪ {x}` with `x > s`.
    IntervalPlusPoint { s: u32, x: u32 },
    /// `[i, i + s - 1] \ {x}`.
    IntervalMinusPoint { i: u32, s: u32, x: u32 },
    /// `{x1, 2·x1, ..., s·x1}`: attains the maximum `r` for its size.
    Maximizer { s: u32, x1: u32 },
    /// `[N - s + 1, N]`: attains the minimum `r` among `s`-subsets of `[1, N]`
    /// in the crowded regime `2s >= N + 1`.
    MinimizerInterval { s: u32, n: u32 },
    /// `{1, 3, ..., N}` for odd `N` with `2s = N + 1`: the other minimizer.
    MinimizerOdds { s: u32, n: u32 },
    /// `[a - 1, s + a] \ {x, s + a - 1}`, parameters `2 <= a <= s - 1`,
    /// `a - 1 <= x <= s - 1`.
    Family52 { s: u32, a: u32, x: u32 },
    /// `[a - 1, s + a - 1] \ {x}`, same parameter range as `Family52`.
    Family53 { s: u32, a: u32, x: u32 },
    /// `{x} ∪ [a + 2, s + a]`, parameters `1 <= a <= s - 2`, `1 <= x <= a + 1`.
    Family57 { s: u32, a: u32, x: u32 },
}

/// A realized family member and the closed-form claim about its `r`-value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub set: IntSet,
    /// The claimed `r(set)` for these parameters.
    pub predicted_r: u64,
    /// Identifier of the statement the formula comes from (e.g. `prop5.2`).
    pub source: String,
    /// `false` on the parameter region where the published formula is known
    /// to disagree with direct computation: `family52` needs `a >= 3` and
    /// `2x <= s + a`, `family53` needs `2x <= s + a`. Everything else is
    /// validated on its whole range.
    pub in_validated_range: bool,
}

fn range_error(family: &'static str, constraint: impl Into<String>) -> ConstructionError {
    ConstructionError::ParameterRange {
        family,
        constraint: constraint.into(),
    }
}

/// Build a set from members known to fit `[1, top]`; `top` doubles as the
/// capacity so the ambient interval is recorded on the set.
fn build(top: u64, members: impl IntoIterator<Item = u32>) -> Result<IntSet, ConstructionError> {
    if top == 0 || top > u64::from(MAX_CAPACITY) {
        return Err(ConstructionError::CapacityExceeded {
            needed: top,
            max: MAX_CAPACITY,
        });
    }
    IntSet::from_members(top as u32, members).map_err(|error| match error {
        SetError::ElementOutOfRange { value, .. } => ConstructionError::CapacityExceeded {
            needed: value,
            max: MAX_CAPACITY,
        },
        other => ConstructionError::ParameterRange {
            family: "construction",
            constraint: other.to_string(),
        },
    })
}

/// Construct the family member and its predicted `r`-value.
pub fn realize(spec: &ConstructionSpec) -> Result<Prediction, ConstructionError> {
    let prediction = |set: IntSet, predicted_r: u64, source: &str, validated: bool| Prediction {
        set,
        predicted_r,
        source: source.to_string(),
        in_validated_range: validated,
    };
    match *spec {
        ConstructionSpec::Interval { i, s } => {
            if i == 0 || s == 0 {
                return Err(range_error("interval", "i >= 1 and s >= 1"));
            }
            let top = u64::from(i) + u64::from(s) - 1;
            let set = build(top, i..i + s)?;
            Ok(prediction(set, interval_r(i.into(), s.into()), "lemma2.4", true))
        }
        ConstructionSpec::Ap { x, a, s } => {
            if x == 0 || a == 0 || s == 0 {
                return Err(range_error("ap", "x, a, s >= 1"));
            }
            let top = u64::from(x) + u64::from(a) * (u64::from(s) - 1);
            let set = build(top, (0..s).map(|t| x + a * t))?;
            Ok(prediction(set, ap_r(x.into(), a.into(), s.into()), "lemma2.5", true))
        }
        ConstructionSpec::IntervalPlusPoint { s, x } => {
            let r = interval_plus_point_r(s.into(), x.into())
                .map_err(|e| range_error("interval_plus_point", e.constraint))?;
            let set = build(x.into(), (1..=s).chain([x]))?;
            Ok(prediction(set, r, "lemma2.6", true))
        }
        ConstructionSpec::IntervalMinusPoint { i, s, x } => {
            if s < 2 {
                return Err(range_error("interval_minus_point", "s >= 2"));
            }
            let r = interval_minus_point_r(i.into(), s.into(), x.into())
                .map_err(|e| range_error("interval_minus_point", e.constraint))?;
            let top = u64::from(i) + u64::from(s) - 1;
            let set = build(top, i..i + s)?.without(x);
            Ok(prediction(set, r, "lemma2.7", true))
        }
        ConstructionSpec::Maximizer { s, x1 } => {
            if s == 0 || x1 == 0 {
                return Err(range_error("maximizer", "s >= 1 and x1 >= 1"));
            }
            let top = u64::from(s) * u64::from(x1);
            let set = build(top, (1..=s).map(|t| t * x1))?;
            Ok(prediction(set, max_r_value(s.into()), "cor3.2", true))
        }
        ConstructionSpec::MinimizerInterval { s, n } => {
            check_minimizer_params("minimizer_interval", s, n)?;
            let set = build(n.into(), n - s + 1..=n)?;
            let f = min_r_value(s.into(), n.into()).expect("s <= N checked");
            Ok(prediction(set, f, "thm3.4", true))
        }
        ConstructionSpec::MinimizerOdds { s, n } => {
            check_minimizer_params("minimizer_odds", s, n)?;
            if n % 2 == 0 || 2 * s != n + 1 {
                return Err(range_error("minimizer_odds", "N odd with 2s = N + 1"));
            }
            let set = build(n.into(), (1..=n).step_by(2))?;
            let f = min_r_value(s.into(), n.into()).expect("s <= N checked");
            Ok(prediction(set, f, "thm3.4", true))
        }
        ConstructionSpec::Family52 { s, a, x } => {
            check_family_params("family52", s, a, x, 2)?;
            let top = u64::from(s) + u64::from(a);
            let set = build(top, a - 1..=s + a)?.without(x).without(s + a - 1);
            let alpha = u64::from(x - (a - 1));
            let r = punctured_family_r(s.into(), a.into(), alpha, 1, 1);
            let validated = a >= 3 && 2 * x <= s + a;
            Ok(prediction(set, r, "prop5.2", validated))
        }
        ConstructionSpec::Family53 { s, a, x } => {
            check_family_params("family53", s, a, x, 2)?;
            let top = u64::from(s) + u64::from(a) - 1;
            let set = build(top, a - 1..=s + a - 1)?.without(x);
            let alpha = u64::from(x - (a - 1));
            let r = punctured_family_r(s.into(), a.into(), alpha, 0, 2);
            let validated = 2 * x <= s + a;
            Ok(prediction(set, r, "prop5.3", validated))
        }
        ConstructionSpec::Family57 { s, a, x } => {
            if s < 3 || a == 0 || a > s - 2 {
                return Err(range_error("family57", "1 <= a <= s - 2"));
            }
            if x == 0 || x > a + 1 {
                return Err(range_error("family57", "1 <= x <= a + 1"));
            }
            let top = u64::from(s) + u64::from(a);
            let set = build(top, [x].into_iter().chain(a + 2..=s + a))?;
            let r = attached_point_family_r(s.into(), a.into(), u64::from(a + 1 - x));
            Ok(prediction(set, r, "prop5.7", true))
        }
    }
}

fn check_minimizer_params(family: &'static str, s: u32, n: u32) -> Result<(), ConstructionError> {
    if s == 0 || s > n {
        return Err(range_error(family, "1 <= s <= N"));
    }
    if 2 * s < n + 1 {
        return Err(range_error(family, "2s >= N + 1 (crowded regime)"));
    }
    Ok(())
}

fn check_family_params(
    family: &'static str,
    s: u32,
    a: u32,
    x: u32,
    a_min: u32,
) -> Result<(), ConstructionError> {
    if s < 3 || a < a_min || a > s - 1 {
        return Err(range_error(family, format!("{a_min} <= a <= s - 1")));
    }
    if x < a - 1 || x > s - 1 {
        return Err(range_error(family, "a - 1 <= x <= s - 1"));
    }
    Ok(())
}

/// Shared formula shape for `family52`/`family53`: base triangle plus a
/// per-offset bonus `B(alpha)`, minus one exactly when `2·alpha` hits
/// `s - a + delta_at`.
fn punctured_family_r(s: u64, a: u64, alpha: u64, plus: u64, delta_at: u64) -> u64 {
    let span = s - a;
    let base = span * (span + 1) / 2;
    let bonus = if alpha <= (a - 2).min(span) {
        2 * alpha
    } else {
        alpha + a - 2
    };
    let overlap = u64::from(2 * alpha == span + delta_at);
    base + plus + bonus - overlap
}

/// `family57` prediction; the shortest interval case `a = s - 2` uses its own
/// piecewise form (the general expression reduces to it, but the split is
/// kept as published).
fn attached_point_family_r(s: u64, a: u64, alpha: u64) -> u64 {
    if a == s - 2 {
        return if 2 * alpha <= s - 2 { 2 * alpha + 1 } else { 2 * alpha };
    }
    let span = s - a;
    let base = (span - 1) * span / 2;
    if 2 * alpha <= a {
        base + 2 * alpha
    } else {
        base + 2 * alpha - 1
    }
}

/// Every `s`-subset of `[1, N]` attaining the maximum `r`-value
/// `s(s - 1)/2`: the dilates `{x1, 2·x1, ..., s·x1}` for `1 <= x1 <= N / s`.
///
/// Requires `1 <= s <= N <= 128`.
pub fn maximizer_sets(s: u32, n: u32) -> Vec<IntSet> {
    assert!(s >= 1 && s <= n && n <= MAX_CAPACITY, "need 1 <= s <= N <= {MAX_CAPACITY}");
    (1..=n / s)
        .map(|x1| IntSet::from_members(n, (1..=s).map(|t| t * x1)).expect("s * x1 <= N"))
        .collect()
}

/// The `s`-subsets of `[1, N]` attaining the minimum `r`-value in the crowded
/// regime `2s >= N + 1`: the top interval, joined by the odd numbers exactly
/// when `N` is odd and `2s = N + 1`.
pub fn minimizer_sets(s: u32, n: u32) -> Result<Vec<IntSet>, ConstructionError> {
    check_minimizer_params("minimizer_sets", s, n)?;
    if n > MAX_CAPACITY {
        return Err(ConstructionError::CapacityExceeded {
            needed: n.into(),
            max: MAX_CAPACITY,
        });
    }
    let interval = IntSet::interval(n - s + 1, n, n).expect("within [1, N]");
    if n % 2 == 1 && 2 * s == n + 1 {
        let odds = IntSet::from_members(n, (1..=n).step_by(2)).expect("within [1, N]");
        // s = N = 1 is the one case where both descriptions name {1}.
        if odds != interval {
            return Ok(vec![interval, odds]);
        }
    }
    Ok(vec![interval])
}

/// For `s >= 4`, the two `s`-subsets of `[1, 2s - 1]` with `r = 1`:
/// `[s - 1, 2s - 2]` and `[s - 1, 2s - 1] \ {s}`.
pub fn theorem46_sets(s: u32) -> Result<Vec<IntSet>, ConstructionError> {
    if s < 4 {
        return Err(range_error("theorem46_sets", "s >= 4"));
    }
    if 2 * s - 1 > MAX_CAPACITY {
        return Err(ConstructionError::CapacityExceeded {
            needed: u64::from(2 * s - 1),
            max: MAX_CAPACITY,
        });
    }
    let n = 2 * s - 1;
    let first = IntSet::interval(s - 1, n - 1, n).expect("within [1, N]");
    let second = IntSet::interval(s - 1, n, n).expect("within [1, N]").without(s);
    Ok(vec![first, second])
}

const FAMILY_NAMES: &[&str] = &[
    "interval",
    "ap",
    "interval_plus_point",
    "interval_minus_point",
    "maximizer",
    "minimizer_interval",
    "minimizer_odds",
    "family52",
    "family53",
    "family57",
];

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionSpec::Interval { i, s } => write!(f, "interval:i={i},s={s}"),
            ConstructionSpec::Ap { x, a, s } => write!(f, "ap:x={x},a={a},s={s}"),
            ConstructionSpec::IntervalPlusPoint { s, x } => {
                write!(f, "interval_plus_point:s={s},x={x}")
            }
            ConstructionSpec::IntervalMinusPoint { i, s, x } => {
                write!(f, "interval_minus_point:i={i},s={s},x={x}")
            }
            ConstructionSpec::Maximizer { s, x1 } => write!(f, "maximizer:s={s},x1={x1}"),
            ConstructionSpec::MinimizerInterval { s, n } => {
                write!(f, "minimizer_interval:s={s},N={n}")
            }
            ConstructionSpec::MinimizerOdds { s, n } => write!(f, "minimizer_odds:s={s},N={n}"),
            ConstructionSpec::Family52 { s, a, x } => write!(f, "family52:s={s},a={a},x={x}"),
            ConstructionSpec::Family53 { s, a, x } => write!(f, "family53:s={s},a={a},x={x}"),
            ConstructionSpec::Family57 { s, a, x } => write!(f, "family57:s={s},a={a},x={x}"),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = ConstructionError;

    fn from_str(text: &str) -> Result<Self, ConstructionError> {
        let parse_failure = |reason: String| ConstructionError::Parse {
            text: text.to_string(),
            reason,
        };
        let (family, params) = text
            .split_once(':')
            .ok_or_else(|| parse_failure("expected family:key=value,...".into()))?;
        let family = family.trim();
        let mut pairs = Vec::new();
        for item in params.split(',') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| parse_failure(format!("expected key=value, got {item:?}")))?;
            let value: u32 = value
                .trim()
                .parse()
                .map_err(|_| parse_failure(format!("{:?} is not a positive integer", value.trim())))?;
            pairs.push((key.trim(), value));
        }
        let get = |key: &str| -> Result<u32, ConstructionError> {
            let mut found = pairs.iter().filter(|(k, _)| *k == key);
            let value = found
                .next()
                .map(|&(_, v)| v)
                .ok_or_else(|| parse_failure(format!("missing parameter {key}")))?;
            if found.next().is_some() {
                return Err(parse_failure(format!("duplicate parameter {key}")));
            }
            Ok(value)
        };
        let expect_keys = |keys: &[&str]| -> Result<(), ConstructionError> {
            for (key, _) in &pairs {
                if !keys.contains(key) {
                    return Err(parse_failure(format!("unknown parameter {key}")));
                }
            }
            Ok(())
        };
        let spec = match family {
            "interval" => {
                expect_keys(&["i", "s"])?;
                ConstructionSpec::Interval { i: get("i")?, s: get("s")? }
            }
            "ap" => {
                expect_keys(&["x", "a", "s"])?;
                ConstructionSpec::Ap { x: get("x")?, a: get("a")?, s: get("s")? }
            }
            "interval_plus_point" => {
                expect_keys(&["s", "x"])?;
                ConstructionSpec::IntervalPlusPoint { s: get("s")?, x: get("x")? }
            }
            "interval_minus_point" => {
                expect_keys(&["i", "s", "x"])?;
                ConstructionSpec::IntervalMinusPoint {
                    i: get("i")?,
                    s: get("s")?,
                    x: get("x")?,
                }
            }
            "maximizer" => {
                expect_keys(&["s", "x1"])?;
                ConstructionSpec::Maximizer { s: get("s")?, x1: get("x1")? }
            }
            "minimizer_interval" => {
                expect_keys(&["s", "N"])?;
                ConstructionSpec::MinimizerInterval { s: get("s")?, n: get("N")? }
            }
            "minimizer_odds" => {
                expect_keys(&["s", "N"])?;
                ConstructionSpec::MinimizerOdds { s: get("s")?, n: get("N")? }
            }
            "family52" => {
                expect_keys(&["s", "a", "x"])?;
                ConstructionSpec::Family52 { s: get("s")?, a: get("a")?, x: get("x")? }
            }
            "family53" => {
                expect_keys(&["s", "a", "x"])?;
                ConstructionSpec::Family53 { s: get("s")?, a: get("a")?, x: get("x")? }
            }
            "family57" => {
                expect_keys(&["s", "a", "x"])?;
                ConstructionSpec::Family57 { s: get("s")?, a: get("a")?, x: get("x")? }
            }
            other => {
                return Err(parse_failure(format!(
                    "unknown family {other:?} (known: {})",
                    FAMILY_NAMES.join(", ")
                )))
            }
        };
        Ok(spec)
    }
}
