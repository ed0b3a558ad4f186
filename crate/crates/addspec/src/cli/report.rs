//! Run records and their serialized forms.
//!
//! Every invocation produces [`RunRecord`]s: what ran, with which
//! parameters, and the structured result. Three renderings exist: JSONL
//! (one record per line, stable field order), CSV (spectrum rows only, no
//! header: `s,N,f,g,attained,exceptions` with `;`-joined value lists), and
//! a human-readable text form.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::cli::config::OutputFormat;
use crate::constructions::Prediction;
use crate::spectrum::verify::{Status, VerificationReport};
use crate::spectrum::SpectrumResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunKind {
    Rvalue,
    Spectrum,
    Verify,
    Conjecture,
    Construct,
}

/// Result payloads, serialized without a tag: the record's `kind` already
/// says which shape to expect.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RunPayload {
    Spectrum(SpectrumResult),
    Verification(VerificationReport),
    Construction(Prediction),
    Value(u64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub kind: RunKind,
    /// Echo of the effective request parameters (sorted keys).
    pub params: Map<String, Value>,
    pub result: RunPayload,
    pub tool_version: String,
    pub elapsed_ms: u64,
}

impl RunRecord {
    pub fn new(kind: RunKind, params: Map<String, Value>, result: RunPayload) -> Self {
        RunRecord {
            kind,
            params,
            result,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            elapsed_ms: 0,
        }
    }
}

/// Text-mode knobs; JSONL and CSV ignore these.
#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    /// Also print the retained extremal set lists under spectrum lines.
    pub list_extremal: bool,
}

pub fn write_records(
    records: &[RunRecord],
    format: OutputFormat,
    render: &RenderOptions,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            for record in records {
                let line = serde_json::to_string(record).expect("record serializes");
                writeln!(out, "{line}")?;
            }
        }
        OutputFormat::Csv => {
            for record in records {
                if let RunPayload::Spectrum(result) = &record.result {
                    writeln!(out, "{}", spectrum_csv_row(result))?;
                }
            }
        }
        OutputFormat::Text => {
            for record in records {
                write_text(record, render, out)?;
            }
        }
    }
    Ok(())
}

fn join<T: ToString>(values: impl IntoIterator<Item = T>, separator: &str) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(separator)
}

fn spectrum_csv_row(result: &SpectrumResult) -> String {
    format!(
        "{},{},{},{},{},{}",
        result.s,
        result.n,
        result.f,
        result.g,
        join(result.attained.iter(), ";"),
        join(result.exceptions.iter(), ";"),
    )
}

fn param_str<'a>(record: &'a RunRecord, key: &str) -> &'a str {
    record
        .params
        .get(key)
        .and_then(Value::as_str)
        .unwrap_or("?")
}

/// Render a parameter of any JSON type without quoting strings.
fn param_display(record: &RunRecord, key: &str) -> String {
    match record.params.get(key) {
        Some(Value::String(text)) => text.clone(),
        Some(value) => value.to_string(),
        None => "?".to_string(),
    }
}

fn status_word(status: Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Errata => "errata",
    }
}

fn write_text(record: &RunRecord, render: &RenderOptions, out: &mut dyn Write) -> io::Result<()> {
    match &record.result {
        RunPayload::Value(value) => {
            writeln!(out, "r({{{}}}) = {value}", param_str(record, "set"))
        }
        RunPayload::Spectrum(result) => {
            writeln!(
                out,
                "R({},{}) = {{{}}}; f={} g={}; exceptions={{{}}}",
                result.s,
                result.n,
                join(result.attained.iter(), ","),
                result.f,
                result.g,
                join(result.exceptions.iter(), ","),
            )?;
            if render.list_extremal {
                writeln!(
                    out,
                    "  min r={} ({} sets): {}",
                    result.f,
                    result.min_count,
                    join(result.min_sets.iter().map(|s| format!("{s:?}")), " "),
                )?;
                writeln!(
                    out,
                    "  max r={} ({} sets): {}",
                    result.g,
                    result.max_count,
                    join(result.max_sets.iter().map(|s| format!("{s:?}")), " "),
                )?;
            }
            Ok(())
        }
        RunPayload::Verification(report) => {
            writeln!(
                out,
                "{} [{}]: {} (checked {})",
                report.statement_id,
                report.parameter_range,
                status_word(report.status),
                report.checked,
            )?;
            for cx in &report.counterexamples {
                let witness = cx
                    .set
                    .map(|set| format!(" [set {set:?}]"))
                    .unwrap_or_default();
                writeln!(
                    out,
                    "  {}: expected {}; got {}{witness}",
                    cx.parameters, cx.expected, cx.actual,
                )?;
            }
            Ok(())
        }
        RunPayload::Construction(prediction) => {
            let range_note = if prediction.in_validated_range {
                ""
            } else {
                " (outside validated range)"
            };
            writeln!(
                out,
                "{} -> {:?}: predicted r={}, actual r={}{range_note}",
                param_str(record, "spec"),
                prediction.set,
                prediction.predicted_r,
                param_display(record, "actual_r"),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{enumerate_spectrum, ScanOptions};

    fn spectrum_record(s: u32, n: u32) -> RunRecord {
        let result = enumerate_spectrum(s, n, &ScanOptions::serial()).unwrap();
        let mut params = Map::new();
        params.insert("s".into(), s.into());
        params.insert("N".into(), n.into());
        RunRecord::new(RunKind::Spectrum, params, RunPayload::Spectrum(result))
    }

    fn rendered(records: &[RunRecord], format: OutputFormat, render: &RenderOptions) -> String {
        let mut buffer = Vec::new();
        write_records(records, format, render, &mut buffer).unwrap();
        String::from_utf8(buffer).unwrap()
    }

    #[test]
    fn csv_rows_for_spectra() {
        let records = [spectrum_record(4, 6), spectrum_record(3, 3)];
        let csv = rendered(&records, OutputFormat::Csv, &RenderOptions::default());
        assert_eq!(csv, "4,6,1,6,1;3;4;5;6,2\n3,3,3,3,3,\n");
    }

    #[test]
    fn csv_skips_non_spectrum_records() {
        let mut params = Map::new();
        params.insert("set".into(), "1,2,4".into());
        let record = RunRecord::new(RunKind::Rvalue, params, RunPayload::Value(2));
        assert_eq!(
            rendered(&[record], OutputFormat::Csv, &RenderOptions::default()),
            ""
        );
    }

    #[test]
    fn text_spectrum_line() {
        let records = [spectrum_record(3, 4)];
        let text = rendered(&records, OutputFormat::Text, &RenderOptions::default());
        assert_eq!(text, "R(3,4) = {1,2,3}; f=1 g=3; exceptions={}\n");

        let detailed = rendered(
            &records,
            OutputFormat::Text,
            &RenderOptions { list_extremal: true },
        );
        assert!(detailed.starts_with("R(3,4) = {1,2,3}; f=1 g=3; exceptions={}\n"));
        assert!(detailed.contains("min r=1 (1 sets): {2,3,4}"));
        assert!(detailed.contains("max r=3 (1 sets): {1,2,3}"));
    }

    #[test]
    fn text_value_line() {
        let mut params = Map::new();
        params.insert("method".into(), "shift-sum".into());
        params.insert("set".into(), "1,2,4".into());
        let record = RunRecord::new(RunKind::Rvalue, params, RunPayload::Value(2));
        assert_eq!(
            rendered(&[record], OutputFormat::Text, &RenderOptions::default()),
            "r({1,2,4}) = 2\n"
        );
    }

    #[test]
    fn jsonl_line_is_byte_stable() {
        let record = spectrum_record(3, 3);
        let line = rendered(&[record], OutputFormat::Json, &RenderOptions::default());
        let expected = format!(
            concat!(
                "{{\"kind\":\"spectrum\",\"params\":{{\"N\":3,\"s\":3}},",
                "\"result\":{{\"s\":3,\"N\":3,\"attained\":[3],\"f\":3,\"g\":3,",
                "\"exceptions\":[],\"min_sets\":[[1,2,3]],\"min_count\":1,",
                "\"max_sets\":[[1,2,3]],\"max_count\":1,\"scanned\":1}},",
                "\"tool_version\":\"{}\",\"elapsed_ms\":0}}\n"
            ),
            env!("CARGO_PKG_VERSION")
        );
        assert_eq!(line, expected);
    }

    #[test]
    fn records_round_trip_through_json() {
        let record = spectrum_record(4, 6);
        let line = serde_json::to_string(&record).unwrap();
        let back: RunRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, record);
    }
}
