//! Build run records programmatically and render them as JSONL, CSV, and
//! text — the same machinery the command-line front end uses.
//!
//! ```bash
//! cargo run --example jsonl_reports
//! ```

use std::str::FromStr;

use addspec::cli::config::OutputFormat;
use addspec::cli::report::{write_records, RenderOptions, RunKind, RunPayload, RunRecord};
use addspec::constructions::{realize, ConstructionSpec};
use addspec::set::IntSet;
use addspec::spectrum::verify::verify_statement;
use addspec::spectrum::{enumerate_spectrum, ScanOptions};
use serde_json::Map;

fn main() {
    let options = ScanOptions::default();
    let mut records = Vec::new();

    // One record per run kind. Parameter maps echo the effective request;
    // keys serialize sorted, so lines are byte-stable.
    let set = IntSet::from_str("1,3,4,5,7").unwrap();
    let mut params = Map::new();
    params.insert("set".into(), set.to_string().into());
    params.insert("method".into(), "shift-sum".into());
    records.push(RunRecord::new(
        RunKind::Rvalue,
        params,
        RunPayload::Value(set.r_value()),
    ));

    for (s, n) in [(3, 4), (4, 6), (5, 9)] {
        let result = enumerate_spectrum(s, n, &options).unwrap();
        let mut params = Map::new();
        params.insert("s".into(), s.into());
        params.insert("N".into(), n.into());
        records.push(RunRecord::new(
            RunKind::Spectrum,
            params,
            RunPayload::Spectrum(result),
        ));
    }

    let report = verify_statement("thm4.6", 4..=6, None, &options).unwrap();
    let mut params = Map::new();
    params.insert("statement".into(), "thm4.6".into());
    params.insert("s".into(), "4..6".into());
    records.push(RunRecord::new(
        RunKind::Verify,
        params,
        RunPayload::Verification(report),
    ));

    let spec = ConstructionSpec::from_str("family52:s=5,a=3,x=3").unwrap();
    let prediction = realize(&spec).unwrap();
    let mut params = Map::new();
    params.insert("spec".into(), spec.to_string().into());
    params.insert("actual_r".into(), prediction.set.r_value().into());
    records.push(RunRecord::new(
        RunKind::Construct,
        params,
        RunPayload::Construction(prediction),
    ));

    let mut stdout = std::io::stdout().lock();
    println!("--- text ---");
    let render = RenderOptions { list_extremal: true };
    write_records(&records, OutputFormat::Text, &render, &mut stdout).unwrap();

    println!("--- jsonl (one self-contained line per record) ---");
    write_records(&records, OutputFormat::Json, &render, &mut stdout).unwrap();

    println!("--- csv (spectrum rows only) ---");
    write_records(&records, OutputFormat::Csv, &render, &mut stdout).unwrap();
}
