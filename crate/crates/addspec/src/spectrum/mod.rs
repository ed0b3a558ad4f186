//! Exhaustive enumeration of `r` over all `s`-element subsets of `[1, N]`.
//!
//! The spectrum `R(s, N)` is the set of values `r` attains. Enumeration walks
//! the `C(N, s)` subsets in colexicographic order; with several workers the
//! rank space is split into contiguous intervals ([`partition_ranks`]), each
//! worker seeks to its interval start by unranking, and partial results merge
//! at a single join point in interval order. Results are therefore identical
//! for any worker count, including the retained sample sets: each class keeps
//! the first few sets in colexicographic order, with exact totals alongside.

mod combinatorics;
pub mod verify;

pub use combinatorics::{binomial, next_combination, partition_ranks, rank_colex, unrank_colex};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::max_r_value;
use crate::set::{r_value_of_mask, IntSet, MAX_CAPACITY};

/// Default cap on how many subsets one call may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
/// Default cap on retained extremal sample sets per class.
pub const DEFAULT_EXTREMAL_LIMIT: usize = 64;

/// Knobs for the enumeration kernels. `workers` defaults to the machine's
/// available parallelism; results never depend on it.
#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub workers: usize,
    pub budget: u64,
    pub extremal_limit: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
            budget: DEFAULT_BUDGET,
            extremal_limit: DEFAULT_EXTREMAL_LIMIT,
        }
    }
}

impl ScanOptions {
    /// Single-threaded scan with the default budget; handy in tests.
    pub fn serial() -> Self {
        ScanOptions {
            workers: 1,
            ..ScanOptions::default()
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_extremal_limit(mut self, limit: usize) -> Self {
        self.extremal_limit = limit;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("need 1 <= s <= N <= {MAX_CAPACITY}, got s={s}, N={n}")]
    InvalidParameters { s: u32, n: u32 },
    #[error("enumerating C({n}, {s}) = {subsets} subsets exceeds the budget of {budget}")]
    BudgetExceeded { s: u32, n: u32, subsets: u128, budget: u64 },
}

/// Everything one exhaustive scan learns about `R(s, N)`.
///
/// `attained` is the spectrum itself; `f` and `g` its minimum and maximum;
/// `exceptions` the values of `[f, g]` that no subset attains. The sample
/// lists hold the first `min_count`/`max_count` extremal sets in
/// colexicographic order, truncated at the configured limit (the counts are
/// always exact).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumResult {
    pub s: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub attained: BTreeSet<u64>,
    pub f: u64,
    pub g: u64,
    pub exceptions: BTreeSet<u64>,
    pub min_sets: Vec<IntSet>,
    pub min_count: u64,
    pub max_sets: Vec<IntSet>,
    pub max_count: u64,
    pub scanned: u64,
}

/// Per-worker tallies: subset counts for every possible `r`, plus capped
/// colex-ordered samples.
struct Accumulator {
    counts: Vec<u64>,
    samples: Vec<Vec<u128>>,
    cap: usize,
}

impl Accumulator {
    fn new(s: u32, cap: usize) -> Self {
        let classes = max_r_value(u64::from(s)) as usize + 1;
        Accumulator {
            counts: vec![0; classes],
            samples: vec![Vec::new(); classes],
            cap,
        }
    }

    fn record(&mut self, mask: u128) {
        let r = r_value_of_mask(mask) as usize;
        self.counts[r] += 1;
        if self.samples[r].len() < self.cap {
            self.samples[r].push(mask);
        }
    }

    /// Append a later interval's tallies; sample lists stay colex-ordered
    /// because `self` covers strictly smaller ranks.
    fn absorb(&mut self, later: Accumulator) {
        for (mine, theirs) in self.counts.iter_mut().zip(later.counts) {
            *mine += theirs;
        }
        for (mine, theirs) in self.samples.iter_mut().zip(later.samples) {
            let room = self.cap - mine.len();
            mine.extend(theirs.into_iter().take(room));
        }
    }
}

fn check_parameters(s: u32, n: u32) -> Result<(), SpectrumError> {
    if s == 0 || s > n || n > MAX_CAPACITY {
        return Err(SpectrumError::InvalidParameters { s, n });
    }
    Ok(())
}

fn budgeted_total(s: u32, n: u32, budget: u64) -> Result<u64, SpectrumError> {
    let subsets = binomial(n, s).unwrap_or(u128::MAX);
    if subsets > u128::from(budget) {
        return Err(SpectrumError::BudgetExceeded {
            s,
            n,
            subsets,
            budget,
        });
    }
    Ok(subsets as u64)
}

/// Run `visit` over every `s`-subset mask of `[1, n]`, split across workers,
/// merging the per-interval states in interval order.
fn scan<State, Visit, Merge>(
    s: u32,
    n: u32,
    options: &ScanOptions,
    make_state: impl Fn() -> State + Sync,
    visit: Visit,
    merge: Merge,
) -> Result<State, SpectrumError>
where
    State: Send,
    Visit: Fn(&mut State, u128) + Sync,
    Merge: Fn(State, State) -> State,
{
    check_parameters(s, n)?;
    let total = budgeted_total(s, n, options.budget)?;
    let workers = options.workers.max(1);

    let run_interval = |range: std::ops::Range<u64>| -> State {
        let mut state = make_state();
        let mut remaining = range.end - range.start;
        if remaining > 0 {
            let mut mask = unrank_colex(n, s, u128::from(range.start));
            loop {
                visit(&mut state, mask);
                remaining -= 1;
                if remaining == 0 {
                    break;
                }
                mask = next_combination(mask);
            }
        }
        state
    };

    if workers == 1 {
        return Ok(run_interval(0..total));
    }

    let ranges = partition_ranks(total, workers);
    let run_interval = &run_interval;
    let states = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|range| scope.spawn(move || run_interval(range)))
            .collect();
        handles
            .into_iter()
            .map(|handle| handle.join().expect("worker panicked"))
            .collect::<Vec<_>>()
    });
    Ok(states
        .into_iter()
        .reduce(merge)
        .expect("at least one worker"))
}

/// Exhaustively determine `R(s, N)`.
pub fn enumerate_spectrum(
    s: u32,
    n: u32,
    options: &ScanOptions,
) -> Result<SpectrumResult, SpectrumError> {
    let cap = options.extremal_limit;
    let tallies = scan(
        s,
        n,
        options,
        || Accumulator::new(s, cap),
        |acc, mask| acc.record(mask),
        |mut first, second| {
            first.absorb(second);
            first
        },
    )?;

    let attained: BTreeSet<u64> = tallies
        .counts
        .iter()
        .enumerate()
        .filter(|(_, &count)| count > 0)
        .map(|(r, _)| r as u64)
        .collect();
    let f = *attained.first().expect("at least one subset scanned");
    let g = *attained.last().expect("at least one subset scanned");
    let exceptions: BTreeSet<u64> = (f..=g).filter(|r| !attained.contains(r)).collect();
    let to_sets = |masks: &[u128]| -> Vec<IntSet> {
        masks
            .iter()
            .map(|&mask| IntSet::from_mask(mask, n).expect("mask within [1, N]"))
            .collect()
    };
    let scanned: u64 = tallies.counts.iter().sum();
    Ok(SpectrumResult {
        s,
        n,
        f,
        g,
        min_sets: to_sets(&tallies.samples[f as usize]),
        min_count: tallies.counts[f as usize],
        max_sets: to_sets(&tallies.samples[g as usize]),
        max_count: tallies.counts[g as usize],
        attained,
        exceptions,
        scanned,
    })
}

/// The `s`-subsets of `[1, N]` with a prescribed `r`-value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetsWithR {
    /// First matches in colexicographic order, truncated at the requested
    /// limit.
    pub sets: Vec<IntSet>,
    /// Exact number of matches over the whole range.
    pub total: u64,
}

/// Collect subsets attaining exactly `target`; `limit` caps the returned
/// list, never the exact `total`.
pub fn sets_with_r(
    s: u32,
    n: u32,
    target: u64,
    limit: usize,
    options: &ScanOptions,
) -> Result<SetsWithR, SpectrumError> {
    let (masks, total) = scan(
        s,
        n,
        options,
        || (Vec::new(), 0u64),
        |(matches, count): &mut (Vec<u128>, u64), mask| {
            if r_value_of_mask(mask) == target {
                *count += 1;
                if matches.len() < limit {
                    matches.push(mask);
                }
            }
        },
        |(mut matches, count), (later_matches, later_count)| {
            let room = limit - matches.len();
            matches.extend(later_matches.into_iter().take(room));
            (matches, count + later_count)
        },
    )?;
    Ok(SetsWithR {
        sets: masks
            .iter()
            .map(|&mask| IntSet::from_mask(mask, n).expect("mask within [1, N]"))
            .collect(),
        total,
    })
}
