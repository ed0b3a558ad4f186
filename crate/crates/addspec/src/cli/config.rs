//! Layered run configuration: command-line flags override `ADDSPEC_*`
//! environment variables, which override an optional TOML file, which
//! overrides built-in defaults.
//!
//! The file is named by `ADDSPEC_CONFIG` (or a `--config` flag); absent
//! both, `./addspec.toml` is used when present. All lookups go through an
//! injected environment function so tests never mutate process state.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::set::{DEFAULT_CAPACITY, MAX_CAPACITY};
use crate::spectrum::DEFAULT_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text.to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" | "jsonl" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format {other:?}; expected text, json or csv")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {message}")]
    File { path: PathBuf, message: String },
    #[error("config file {path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("invalid {key} value {value:?}: {reason}")]
    Invalid {
        key: String,
        value: String,
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Ambient interval size for parsing set literals; at most 128.
    pub capacity: u32,
    pub workers: usize,
    pub budget: u64,
    pub format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            capacity: DEFAULT_CAPACITY,
            workers: std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
            budget: DEFAULT_BUDGET,
            format: OutputFormat::default(),
        }
    }
}

/// The file never needs every key; unknown keys are rejected so typos fail
/// loudly instead of silently using defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    capacity: Option<u32>,
    workers: Option<usize>,
    budget: Option<u64>,
    format: Option<OutputFormat>,
}

fn invalid(key: &str, value: &str, reason: impl ToString) -> ConfigError {
    ConfigError::Invalid {
        key: key.to_string(),
        value: value.to_string(),
        reason: reason.to_string(),
    }
}

fn env_number<T: FromStr>(env_value: Option<String>, key: &str) -> Result<Option<T>, ConfigError>
where
    T::Err: ToString,
{
    match env_value {
        None => Ok(None),
        Some(text) => text
            .parse()
            .map(Some)
            .map_err(|error: T::Err| invalid(key, &text, error.to_string())),
    }
}

/// Build the effective configuration from the file and environment layers.
/// `explicit_path` (a `--config` flag) beats `ADDSPEC_CONFIG`, which beats
/// the implicit `./addspec.toml`; an explicitly named file must exist.
pub fn load(
    env: &dyn Fn(&str) -> Option<String>,
    explicit_path: Option<&Path>,
) -> Result<Config, ConfigError> {
    let mut config = Config::default();

    let named = explicit_path
        .map(PathBuf::from)
        .or_else(|| env("ADDSPEC_CONFIG").map(PathBuf::from));
    let implicit = || {
        let fallback = PathBuf::from("addspec.toml");
        fallback.exists().then_some(fallback)
    };
    if let Some(path) = named.or_else(implicit) {
        let text = std::fs::read_to_string(&path).map_err(|error| ConfigError::File {
            path: path.clone(),
            message: error.to_string(),
        })?;
        let file: FileConfig = toml::from_str(&text).map_err(|error| ConfigError::Parse {
            path: path.clone(),
            message: error.to_string(),
        })?;
        if let Some(capacity) = file.capacity {
            config.capacity = capacity;
        }
        if let Some(workers) = file.workers {
            config.workers = workers;
        }
        if let Some(budget) = file.budget {
            config.budget = budget;
        }
        if let Some(format) = file.format {
            config.format = format;
        }
    }

    if let Some(capacity) = env_number(env("ADDSPEC_CAPACITY"), "ADDSPEC_CAPACITY")? {
        config.capacity = capacity;
    }
    if let Some(workers) = env_number(env("ADDSPEC_WORKERS"), "ADDSPEC_WORKERS")? {
        config.workers = workers;
    }
    if let Some(budget) = env_number(env("ADDSPEC_BUDGET"), "ADDSPEC_BUDGET")? {
        config.budget = budget;
    }
    if let Some(text) = env("ADDSPEC_FORMAT") {
        config.format = text
            .parse()
            .map_err(|reason: String| invalid("ADDSPEC_FORMAT", &text, reason))?;
    }

    validate(&config)?;
    Ok(config)
}

pub fn validate(config: &Config) -> Result<(), ConfigError> {
    if config.capacity == 0 || config.capacity > MAX_CAPACITY {
        return Err(invalid(
            "capacity",
            &config.capacity.to_string(),
            format!("must be between 1 and {MAX_CAPACITY}"),
        ));
    }
    if config.workers == 0 {
        return Err(invalid("workers", "0", "must be at least 1"));
    }
    if config.budget == 0 {
        return Err(invalid("budget", "0", "must be at least 1"));
    }
    Ok(())
}
