//! Exact computation of the additive closure count `r(S)` for sets of
//! positive integers, with closed-form evaluators, structured set families,
//! difference-vector analysis, and exhaustive spectrum enumeration.
//!
//! For a finite set `S`, `r(S)` counts ordered pairs `(x, y)` with both
//! coordinates in `S` whose sum also lands in `S`; `r(S) = 0` is the classic
//! sum-free condition. Everything here is exact integer arithmetic on
//! bitmask sets over `[1, 128]`.
//!
//! ## Where things live
//!
//! - [`set`] — the [`IntSet`] bitmask type and the four `r`-counting kernels
//! - [`formulas`] — closed forms: intervals, arithmetic progressions,
//!   punctured/extended intervals, the extremes `f(s, N)` and `g(s)`, and the
//!   candidate unattained values
//! - [`constructions`] — named set families with predicted `r`-values,
//!   parsed from `family:key=value,...` text specs
//! - [`diffvec`] — difference vectors and the shape classification of
//!   sum-free sets with small difference sets
//! - [`spectrum`] — exhaustive enumeration of `R(s, N)` (deterministic under
//!   any worker count) and, in [`spectrum::verify`], the statement catalog
//! - [`cli`] — the `addspec` command-line front end and its record formats
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── rvalue_basics.rs       # Build sets, count r four ways, sum-free tests
//! ├── closed_forms.rs        # Formulas vs. direct counts, f/g, candidates
//! ├── constructions.rs       # Realize family specs, extremal set lists
//! ├── difference_vectors.rs  # Gap words, growth bounds, shape classifier
//! ├── spectrum_scan.rs       # Exhaustive R(s, N), gaps, extremal witnesses
//! ├── verify_statements.rs   # Statement catalog checks and reports
//! ├── conjecture_scan.rs     # Gaps == candidate ladder over the whole grid
//! └── jsonl_reports.rs       # Run records rendered as JSONL, CSV, text
//! ```
//!
//! - **`rvalue_basics`** - Construct sets four ways and count `r(S)` with
//!   every kernel
//! - **`closed_forms`** - Evaluate each closed form against direct counts,
//!   including domain errors
//! - **`constructions`** - Parse and realize family members; maximizer,
//!   minimizer, and `r = 1` catalogs
//! - **`difference_vectors`** - Difference profiles, the slack bound, and
//!   classifying sum-free shapes
//! - **`spectrum_scan`** - Scan `R(s, N)` across a band of `N`, check gaps
//!   against predictions, pull extremal witnesses
//! - **`verify_statements`** - Run catalog statements, including the two
//!   with known-bad formula regions
//! - **`conjecture_scan`** - Exhaustively compare spectrum gaps with the
//!   candidate ladder up to a chosen size
//! - **`jsonl_reports`** - Build run records programmatically and render
//!   them in all three output formats
//!
//! ```bash
//! cargo run --example rvalue_basics
//! cargo run --example closed_forms
//! cargo run --example constructions
//! cargo run --example difference_vectors
//! cargo run --release --example spectrum_scan
//! cargo run --release --example verify_statements
//! cargo run --release --example conjecture_scan
//! cargo run --example jsonl_reports
//! ```

pub mod cli;
pub mod constructions;
pub mod diffvec;
pub mod formulas;
pub mod set;
pub mod spectrum;

pub use set::{IntSet, RMethod, SetError, DEFAULT_CAPACITY, MAX_CAPACITY};
