//! Command-line front end.
//!
//! Five subcommands: `rvalue` (one set, one number), `spectrum` (exhaustive
//! `R(s, N)`), `verify` (statement catalog checks over parameter ranges),
//! `conjecture` (the exception-pattern scan), and `construct` (realize a
//! named family member and compare predicted vs. actual `r`).
//!
//! Exit codes: 0 success (including verifications that pass or end in
//! `errata`), 1 a verification failed, 2 usage/parameter/config problems,
//! 3 enumeration budget exceeded.
//!
//! Output goes to stdout (or `--out FILE`) as text, JSONL, or CSV; see
//! [`report`] for the formats. Configuration layers: flags beat
//! `ADDSPEC_*` environment variables, which beat the optional TOML file.

pub mod config;
pub mod report;

use std::ffi::OsString;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{Map, Value};

use crate::constructions::{realize, ConstructionSpec};
use crate::set::{IntSet, RMethod};
use crate::spectrum::verify::{conjecture_scan, verify_statement, VerifyError};
use crate::spectrum::{enumerate_spectrum, ScanOptions, SpectrumError};

use config::{Config, ConfigError, OutputFormat};
use report::{write_records, RenderOptions, RunKind, RunPayload, RunRecord};

#[derive(Debug, Parser)]
#[command(
    name = "addspec",
    version,
    about = "Exact r-value computations, spectra and statement verification for sets of positive integers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for enumeration (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Maximum number of subsets one enumeration may visit.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Ambient interval size for parsing set literals (at most 128).
    #[arg(long, global = true)]
    capacity: Option<u32>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Configuration file (TOML); defaults to $ADDSPEC_CONFIG or ./addspec.toml.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
enum MethodArg {
    PairSum,
    PairDifference,
    #[default]
    ShiftSum,
    DifferenceSum,
}

impl MethodArg {
    fn to_method(self) -> RMethod {
        match self {
            MethodArg::PairSum => RMethod::PairSum,
            MethodArg::PairDifference => RMethod::PairDifference,
            MethodArg::ShiftSum => RMethod::ShiftSum,
            MethodArg::DifferenceSum => RMethod::DifferenceSum,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::PairSum => "pair-sum",
            MethodArg::PairDifference => "pair-difference",
            MethodArg::ShiftSum => "shift-sum",
            MethodArg::DifferenceSum => "difference-sum",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute r(S) for one explicit set.
    Rvalue {
        /// Comma-separated members, e.g. "1,3,4,5,7".
        #[arg(long)]
        set: String,
        /// Counting method (all four agree; mostly for cross-checking).
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
    },
    /// Enumerate the full spectrum R(s, N) with extremal sets.
    Spectrum {
        #[arg(long)]
        s: u32,
        #[arg(long = "N")]
        n: u32,
        /// In text output, also list the retained extremal sets.
        #[arg(long)]
        list_extremal: bool,
    },
    /// Check one catalog statement over a parameter range.
    Verify {
        /// Statement identifier, e.g. thm3.1 or conj6.1.
        #[arg(long)]
        statement: String,
        /// Set sizes to cover: "a..b" (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        s: RangeInclusive<u32>,
        /// Interval tops to cover; defaults to the statement's own grid.
        #[arg(long = "N", value_parser = parse_range)]
        n: Option<RangeInclusive<u32>>,
    },
    /// Scan the exception-pattern conjecture for 4 <= s <= s-max.
    Conjecture {
        #[arg(long)]
        s_max: u32,
    },
    /// Realize a construction like "family52:s=5,a=3,x=3" and compare
    /// its predicted r-value against direct computation.
    Construct {
        #[arg(long)]
        spec: String,
    },
}

fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let parse_end = |part: &str| -> Result<u32, String> {
        part.trim()
            .parse()
            .map_err(|error| format!("bad range bound {part:?}: {error}"))
    };
    match text.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse_end(lo)?, parse_end(hi)?);
            if lo > hi {
                return Err(format!("empty range {text:?}"));
            }
            Ok(lo..=hi)
        }
        None => {
            let v = parse_end(text)?;
            Ok(v..=v)
        }
    }
}

fn range_text(range: &RangeInclusive<u32>) -> String {
    format!("{}..{}", range.start(), range.end())
}

/// A failed run: what to print and how to exit.
struct Failure {
    exit_code: i32,
    message: String,
}

fn usage_failure(message: impl ToString) -> Failure {
    Failure {
        exit_code: 2,
        message: message.to_string(),
    }
}

fn spectrum_error_exit_code(error: &SpectrumError) -> i32 {
    match error {
        SpectrumError::BudgetExceeded { .. } => 3,
        SpectrumError::InvalidParameters { .. } => 2,
    }
}

fn verify_error_exit_code(error: &VerifyError) -> i32 {
    match error {
        VerifyError::Spectrum(inner) => spectrum_error_exit_code(inner),
        VerifyError::UnknownStatement { .. } | VerifyError::InvalidParameters { .. } => 2,
    }
}

/// A completed verification still fails the run when its status is `fail`;
/// `errata` (known formula defects) does not.
fn verification_exit_code(report: &crate::spectrum::verify::VerificationReport) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

impl From<ConfigError> for Failure {
    fn from(error: ConfigError) -> Self {
        usage_failure(error)
    }
}

impl From<SpectrumError> for Failure {
    fn from(error: SpectrumError) -> Self {
        Failure {
            exit_code: spectrum_error_exit_code(&error),
            message: error.to_string(),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(error: VerifyError) -> Self {
        Failure {
            exit_code: verify_error_exit_code(&error),
            message: error.to_string(),
        }
    }
}

fn scan_options(config: &Config) -> ScanOptions {
    ScanOptions::default()
        .with_workers(config.workers)
        .with_budget(config.budget)
}

/// Run the tool against explicit streams and environment; returns the exit
/// code. This is the testable entry point — no process-global state.
pub fn run_with_output<I, T>(
    args: I,
    out: &mut dyn Write,
    err: &mut dyn Write,
    env: &dyn Fn(&str) -> Option<String>,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(error) => {
            let code = match error.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", error.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", error.render());
            return code;
        }
    };

    match execute(cli, env) {
        Ok((records, render, format, out_path, exit_code)) => {
            let result = match out_path {
                Some(path) => std::fs::File::create(&path)
                    .map_err(|error| io::Error::new(error.kind(), format!("{}: {error}", path.display())))
                    .and_then(|mut file| write_records(&records, format, &render, &mut file)),
                None => write_records(&records, format, &render, out),
            };
            if let Err(error) = result {
                let _ = writeln!(err, "error: cannot write output: {error}");
                return 2;
            }
            exit_code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.exit_code
        }
    }
}

/// Convenience wrapper over the process's real streams and environment.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_output(
        args,
        &mut io::stdout(),
        &mut io::stderr(),
        &|key| std::env::var(key).ok(),
    )
}

type Prepared = (Vec<RunRecord>, RenderOptions, OutputFormat, Option<PathBuf>, i32);

fn execute(cli: Cli, env: &dyn Fn(&str) -> Option<String>) -> Result<Prepared, Failure> {
    let mut config = config::load(env, cli.config.as_deref())?;
    if let Some(workers) = cli.workers {
        config.workers = workers;
    }
    if let Some(budget) = cli.budget {
        config.budget = budget;
    }
    if let Some(capacity) = cli.capacity {
        config.capacity = capacity;
    }
    if let Some(format) = cli.format {
        config.format = format;
    }
    config::validate(&config)?;

    let mut render = RenderOptions::default();
    let started = Instant::now();
    let (kind, params, payload, exit_code) = match cli.command {
        Command::Rvalue { set, method } => {
            let set = IntSet::parse(&set, config.capacity).map_err(usage_failure)?;
            let value = set.r_value_by(method.to_method());
            let mut params = Map::new();
            params.insert("set".into(), set.to_string().into());
            params.insert("method".into(), method.name().into());
            (RunKind::Rvalue, params, RunPayload::Value(value), 0)
        }
        Command::Spectrum { s, n, list_extremal } => {
            render.list_extremal = list_extremal;
            let result = enumerate_spectrum(s, n, &scan_options(&config))?;
            let mut params = Map::new();
            params.insert("s".into(), s.into());
            params.insert("N".into(), n.into());
            (RunKind::Spectrum, params, RunPayload::Spectrum(result), 0)
        }
        Command::Verify { statement, s, n } => {
            let report = verify_statement(&statement, s.clone(), n.clone(), &scan_options(&config))?;
            let mut params = Map::new();
            params.insert("statement".into(), statement.into());
            params.insert("s".into(), range_text(&s).into());
            if let Some(n) = n {
                params.insert("N".into(), range_text(&n).into());
            }
            let exit_code = verification_exit_code(&report);
            (RunKind::Verify, params, RunPayload::Verification(report), exit_code)
        }
        Command::Conjecture { s_max } => {
            let report = conjecture_scan(s_max, &scan_options(&config))?;
            let mut params = Map::new();
            params.insert("s_max".into(), s_max.into());
            let exit_code = verification_exit_code(&report);
            (RunKind::Conjecture, params, RunPayload::Verification(report), exit_code)
        }
        Command::Construct { spec } => {
            let parsed = ConstructionSpec::from_str(&spec).map_err(usage_failure)?;
            let prediction = realize(&parsed).map_err(usage_failure)?;
            let actual = prediction.set.r_value();
            let mut params = Map::new();
            params.insert("spec".into(), parsed.to_string().into());
            params.insert("actual_r".into(), Value::from(actual));
            (RunKind::Construct, params, RunPayload::Construction(prediction), 0)
        }
    };

    let mut record = RunRecord::new(kind, params, payload);
    record.elapsed_ms = match env("ADDSPEC_ELAPSED_MS") {
        // Reproducibility aid: pin the timing field (e.g. to 0) so JSONL
        // output is byte-comparable across runs.
        Some(text) => text.parse().map_err(|_| {
            usage_failure(format!("invalid ADDSPEC_ELAPSED_MS value {text:?}"))
        })?,
        None => started.elapsed().as_millis() as u64,
    };

    Ok((vec![record], render, config.format, cli.out, exit_code))
}
