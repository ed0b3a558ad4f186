//! Sets of positive integers drawn from `[1, capacity]` and the additive
//! closure count `r(S)`.
//!
//! `r(S)` counts ordered pairs `(x, y)` with both coordinates in `S` whose sum
//! also lies in `S`. `(x, y)` and `(y, x)` are distinct pairs when `x != y`;
//! `(x, x)` is a single pair. So `r({1, 2}) = 1` (only `(1, 1)` works) and a
//! set with `r(S) = 0` is sum-free.
//!
//! The representation is a fixed-width bit vector: bit `k` of `bits` is set
//! exactly when `k + 1` is a member. That makes the sum/difference counts in
//! [`IntSet::r_value`] word operations: `S + x` is a left shift, `S - x` a
//! right shift, and an intersection size a popcount.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Capacity used when a constructor does not take one explicitly.
pub const DEFAULT_CAPACITY: u32 = 64;
/// Largest supported capacity (one `u128` word of membership bits).
pub const MAX_CAPACITY: u32 = 128;

/// Errors from set construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("capacity {capacity} outside supported range [1, {MAX_CAPACITY}]")]
    CapacityOutOfRange { capacity: u32 },
    #[error("element {value} outside [1, {capacity}]")]
    ElementOutOfRange { value: u64, capacity: u32 },
    #[error("cannot parse {text:?} as a set element")]
    InvalidElement { text: String },
}

/// The four equivalent ways of computing `r(S)`.
///
/// `PairSum` is the definition itself (a quadratic loop over ordered pairs)
/// and is deliberately kept as an independent implementation so the word-level
/// kernels can be checked against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RMethod {
    /// Count ordered pairs `(x, y)` in `S^2` with `x + y` in `S`.
    PairSum,
    /// Count ordered pairs `(x, y)` in `S^2` with `x - y` in `S`.
    PairDifference,
    /// Sum `|S ∩ (S + x)|` over the members `x` of `S`.
    ShiftSum,
    /// Sum `|S ∩ (S - x)|` over the members `x` of `S`.
    DifferenceSum,
}

/// A subset of `[1, capacity]` stored as one word of membership bits.
///
/// Capacity is a representation bound, not part of a set's identity: equality,
/// ordering and hashing look only at the members. Ordering follows the numeric
/// order of the bit masks, which is colexicographic order on the sets.
#[derive(Clone, Copy)]
pub struct IntSet {
    bits: u128,
    capacity: u32,
}

impl IntSet {
    /// Empty set over `[1, capacity]`.
    pub fn new(capacity: u32) -> Result<Self, SetError> {
        if capacity == 0 || capacity > MAX_CAPACITY {
            return Err(SetError::CapacityOutOfRange { capacity });
        }
        Ok(IntSet { bits: 0, capacity })
    }

    /// Set built from members; rejects elements outside `[1, capacity]`.
    /// Duplicates collapse silently.
    pub fn from_members<I>(capacity: u32, members: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut set = IntSet::new(capacity)?;
        for value in members {
            set = set.with(value)?;
        }
        Ok(set)
    }

    /// Set from a raw membership mask (bit `k` means `k + 1` is a member).
    pub fn from_mask(mask: u128, capacity: u32) -> Result<Self, SetError> {
        let set = IntSet::new(capacity)?;
        if capacity < MAX_CAPACITY && mask >> capacity != 0 {
            let worst = 128 - mask.leading_zeros();
            return Err(SetError::ElementOutOfRange {
                value: u64::from(worst),
                capacity,
            });
        }
        Ok(IntSet { bits: mask, ..set })
    }

    /// The interval `[lo, hi]`; empty when `lo > hi`.
    pub fn interval(lo: u32, hi: u32, capacity: u32) -> Result<Self, SetError> {
        IntSet::from_members(capacity, lo..=hi)
    }

    /// Convenience constructor for literals in tests and examples.
    ///
    /// Capacity is the default, widened to the largest element if necessary.
    /// Panics when an element exceeds [`MAX_CAPACITY`] or is zero.
    pub fn of(members: &[u32]) -> Self {
        let top = members.iter().copied().max().unwrap_or(0);
        let capacity = DEFAULT_CAPACITY.max(top);
        IntSet::from_members(capacity, members.iter().copied()).expect("literal set in range")
    }

    /// Parse a comma-separated ascending-or-not list like `"1,3,4,5,7"`.
    /// An empty (or all-whitespace) string is the empty set.
    pub fn parse(text: &str, capacity: u32) -> Result<Self, SetError> {
        let mut set = IntSet::new(capacity)?;
        if text.trim().is_empty() {
            return Ok(set);
        }
        for token in text.split(',') {
            let token = token.trim();
            let value: u64 = token.parse().map_err(|_| SetError::InvalidElement {
                text: token.to_string(),
            })?;
            if value == 0 || value > u64::from(capacity) {
                return Err(SetError::ElementOutOfRange {
                    value,
                    capacity,
                });
            }
            set = set.with(value as u32).expect("range checked");
        }
        Ok(set)
    }

    pub fn capacity(&self) -> u32 {
        self.capacity
    }

    /// Raw membership mask.
    pub fn mask(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, value: u32) -> bool {
        value >= 1 && value <= self.capacity && self.bits >> (value - 1) & 1 == 1
    }

    /// Copy of the set with `value` added.
    pub fn with(&self, value: u32) -> Result<Self, SetError> {
        if value == 0 || value > self.capacity {
            return Err(SetError::ElementOutOfRange {
                value: u64::from(value),
                capacity: self.capacity,
            });
        }
        Ok(IntSet {
            bits: self.bits | 1u128 << (value - 1),
            capacity: self.capacity,
        })
    }

    /// Copy of the set with `value` removed (no-op when absent).
    pub fn without(&self, value: u32) -> Self {
        if value == 0 || value > self.capacity {
            return *self;
        }
        IntSet {
            bits: self.bits & !(1u128 << (value - 1)),
            capacity: self.capacity,
        }
    }

    /// Smallest member. Named to avoid colliding with `Ord::min`, which
    /// would otherwise win method resolution on by-value receivers.
    pub fn min_element(&self) -> Option<u32> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() + 1)
        }
    }

    /// Largest member. See [`IntSet::min_element`] for the naming.
    pub fn max_element(&self) -> Option<u32> {
        if self.bits == 0 {
            None
        } else {
            Some(128 - self.bits.leading_zeros())
        }
    }

    pub fn is_subset_of(&self, other: &IntSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in ascending order.
    pub fn members(&self) -> Members {
        Members { rest: self.bits }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.members().collect()
    }

    /// `r(S)` by the default word-level kernel (`ShiftSum`).
    pub fn r_value(&self) -> u64 {
        r_value_of_mask(self.bits)
    }

    /// `r(S)` by a chosen method; all four agree on every set.
    pub fn r_value_by(&self, method: RMethod) -> u64 {
        match method {
            RMethod::PairSum => self.r_by_pair_sum(),
            RMethod::PairDifference => self.r_by_pair_difference(),
            RMethod::ShiftSum => r_value_of_mask(self.bits),
            RMethod::DifferenceSum => self.r_by_difference_sum(),
        }
    }

    /// A set is sum-free exactly when `r(S) = 0`.
    pub fn is_sum_free(&self) -> bool {
        self.r_value() == 0
    }

    fn r_by_pair_sum(&self) -> u64 {
        let members = self.to_vec();
        let mut count = 0;
        for &x in &members {
            for &y in &members {
                if x + y <= self.capacity && self.contains(x + y) {
                    count += 1;
                }
            }
        }
        count
    }

    fn r_by_pair_difference(&self) -> u64 {
        let members = self.to_vec();
        let mut count = 0;
        for &x in &members {
            for &y in &members {
                if x > y && self.contains(x - y) {
                    count += 1;
                }
            }
        }
        count
    }

    fn r_by_difference_sum(&self) -> u64 {
        let mut total = 0u64;
        for x in self.members() {
            // x = 128 would overflow the shift; S - 128 has no positive members.
            if x < 128 {
                total += (self.bits & (self.bits >> x)).count_ones() as u64;
            }
        }
        total
    }
}

/// `r(S)` for a raw membership mask: for each member `x`, intersect the set
/// with its upward translate by `x` and popcount. Shifted-out bits correspond
/// to sums beyond the word and cannot be members, so they drop out correctly.
pub(crate) fn r_value_of_mask(mask: u128) -> u64 {
    let mut rest = mask;
    let mut total = 0u64;
    while rest != 0 {
        let x = rest.trailing_zeros() + 1;
        if x < 128 {
            total += (mask & (mask << x)).count_ones() as u64;
        }
        rest &= rest - 1;
    }
    total
}

/// Ascending member iterator.
pub struct Members {
    rest: u128,
}

impl Iterator for Members {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.rest == 0 {
            return None;
        }
        let value = self.rest.trailing_zeros() + 1;
        self.rest &= self.rest - 1;
        Some(value)
    }
}

impl PartialEq for IntSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for IntSet {}

impl std::hash::Hash for IntSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for IntSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntSet {
    /// Numeric order of masks = colexicographic order of sets.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl fmt::Display for IntSet {
    /// Canonical text form: comma-separated ascending members, no braces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for value in self.members() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{value}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for IntSet {
    type Err = SetError;

    /// Parses the canonical text form; capacity is the default, widened to
    /// the largest element when needed.
    fn from_str(text: &str) -> Result<Self, SetError> {
        let parsed = IntSet::parse(text, MAX_CAPACITY)?;
        let capacity = DEFAULT_CAPACITY.max(parsed.max_element().unwrap_or(0));
        IntSet::from_mask(parsed.mask(), capacity)
    }
}

impl Serialize for IntSet {
    /// Serialized as the ascending member array.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members())
    }
}

impl<'de> Deserialize<'de> for IntSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<u32>::deserialize(deserializer)?;
        let capacity = DEFAULT_CAPACITY.max(members.iter().copied().max().unwrap_or(0));
        IntSet::from_members(capacity, members).map_err(D::Error::custom)
    }
}
