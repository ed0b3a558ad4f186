//! End-to-end command-line behavior through the injectable entry point:
//! argument handling, config layering, output formats, and exit codes.

use std::collections::HashMap;
use std::io::Write as _;

use addspec::cli::run_with_output;

fn env_from(pairs: &[(&str, &str)]) -> impl Fn(&str) -> Option<String> {
    let map: HashMap<String, String> = pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    move |key: &str| map.get(key).cloned()
}

struct Run {
    exit: i32,
    out: String,
    err: String,
}

fn run(args: &[&str], env_pairs: &[(&str, &str)]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let env = env_from(env_pairs);
    let full_args = std::iter::once("addspec").chain(args.iter().copied());
    let exit = run_with_output(full_args, &mut out, &mut err, &env);
    Run {
        exit,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn rvalue_text() {
    let r = run(&["rvalue", "--set", "1,3,4,5,7"], &[]);
    assert_eq!(r.exit, 0, "{}", r.err);
    assert_eq!(r.out, "r({1,3,4,5,7}) = 6\n");

    let r = run(&["rvalue", "--set", "2,4,6,8", "--method", "pair-sum"], &[]);
    assert_eq!(r.out, "r({2,4,6,8}) = 6\n");
}

#[test]
fn rvalue_rejects_bad_input() {
    let r = run(&["rvalue", "--set", "1,2,banana"], &[]);
    assert_eq!(r.exit, 2);
    assert!(r.err.contains("banana"), "{}", r.err);

    // 90 exceeds the default 64-element ambient interval...
    let r = run(&["rvalue", "--set", "90"], &[]);
    assert_eq!(r.exit, 2);
    // ...but fits once the capacity is raised.
    let r = run(&["rvalue", "--set", "90", "--capacity", "128"], &[]);
    assert_eq!(r.exit, 0);
    assert_eq!(r.out, "r({90}) = 0\n");
}

#[test]
fn spectrum_formats() {
    let text = run(&["spectrum", "--s", "4", "--N", "6"], &[]);
    assert_eq!(text.exit, 0);
    assert_eq!(text.out, "R(4,6) = {1,3,4,5,6}; f=1 g=6; exceptions={2}\n");

    let listed = run(&["spectrum", "--s", "4", "--N", "6", "--list-extremal"], &[]);
    assert!(listed.out.contains("min r=1 (1 sets): {3,4,5,6}"), "{}", listed.out);
    assert!(listed.out.contains("max r=6 (1 sets): {1,2,3,4}"), "{}", listed.out);

    let csv = run(&["spectrum", "--s", "4", "--N", "6", "--format", "csv"], &[]);
    assert_eq!(csv.out, "4,6,1,6,1;3;4;5;6,2\n");

    let json = run(
        &["spectrum", "--s", "3", "--N", "3", "--format", "json"],
        &[("ADDSPEC_ELAPSED_MS", "0")],
    );
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
    assert_eq!(json.out, expected);
}

#[test]
fn spectrum_worker_flag_changes_nothing() {
    let base = run(&["spectrum", "--s", "5", "--N", "10", "--format", "csv"], &[]);
    for workers in ["2", "3", "7"] {
        let w = run(
            &["spectrum", "--s", "5", "--N", "10", "--format", "csv", "--workers", workers],
            &[],
        );
        assert_eq!(w.out, base.out, "workers={workers}");
    }
}

#[test]
fn verify_statements_and_exit_codes() {
    let pass = run(&["verify", "--statement", "thm4.6", "--s", "4..6"], &[]);
    assert_eq!(pass.exit, 0, "{}", pass.err);
    assert!(pass.out.starts_with("thm4.6 [s=4..6]: pass (checked "), "{}", pass.out);

    let errata = run(&["verify", "--statement", "prop5.2", "--s", "3..6"], &[]);
    assert_eq!(errata.exit, 0, "errata is not a failure");
    assert!(errata.out.contains("errata"), "{}", errata.out);
    assert!(
        errata.out.contains("family52:s=5,a=2,x=2: expected r=8; got r=6 [set {1,3,4,5,7}]"),
        "{}",
        errata.out
    );

    let ranged = run(
        &["verify", "--statement", "thm3.3", "--s", "4", "--N", "6..8"],
        &[],
    );
    assert_eq!(ranged.exit, 0);
    assert!(ranged.out.contains("[s=4..4, N=6..8]"), "{}", ranged.out);

    let unknown = run(&["verify", "--statement", "thm9.9", "--s", "3"], &[]);
    assert_eq!(unknown.exit, 2);
    assert!(unknown.err.contains("unknown statement"), "{}", unknown.err);

    let empty = run(&["verify", "--statement", "thm3.1", "--s", "9..4"], &[]);
    assert_eq!(empty.exit, 2);
}

#[test]
fn conjecture_scan_passes() {
    let r = run(&["conjecture", "--s-max", "7"], &[]);
    assert_eq!(r.exit, 0, "{}", r.err);
    assert!(r.out.starts_with("conj6.1 [s=4..7]: pass"), "{}", r.out);

    let invalid = run(&["conjecture", "--s-max", "2"], &[]);
    assert_eq!(invalid.exit, 2);
}

#[test]
fn construct_families() {
    let good = run(&["construct", "--spec", "family52:s=5,a=3,x=3"], &[]);
    assert_eq!(good.exit, 0);
    assert_eq!(
        good.out,
        "family52:s=5,a=3,x=3 -> {2,4,5,6,8}: predicted r=6, actual r=6\n"
    );

    let boundary = run(&["construct", "--spec", "family52:s=5,a=2,x=2"], &[]);
    assert_eq!(boundary.exit, 0);
    assert_eq!(
        boundary.out,
        "family52:s=5,a=2,x=2 -> {1,3,4,5,7}: predicted r=8, actual r=6 (outside validated range)\n"
    );

    let bad = run(&["construct", "--spec", "family99:s=5"], &[]);
    assert_eq!(bad.exit, 2);
    assert!(bad.err.contains("family99"), "{}", bad.err);

    let out_of_range = run(&["construct", "--spec", "interval:i=0,s=5"], &[]);
    assert_eq!(out_of_range.exit, 2);
}

#[test]
fn budget_exhaustion_is_exit_three() {
    let r = run(&["spectrum", "--s", "10", "--N", "30", "--budget", "100"], &[]);
    assert_eq!(r.exit, 3);
    assert!(r.err.contains("exceeds the budget"), "{}", r.err);
    assert_eq!(r.out, "");

    let via_env = run(
        &["spectrum", "--s", "10", "--N", "30"],
        &[("ADDSPEC_BUDGET", "100")],
    );
    assert_eq!(via_env.exit, 3);

    let verify = run(
        &["verify", "--statement", "conj6.1", "--s", "12", "--budget", "100"],
        &[],
    );
    assert_eq!(verify.exit, 3);
}

#[test]
fn help_and_usage() {
    let help = run(&["--help"], &[]);
    assert_eq!(help.exit, 0);
    assert!(help.out.contains("rvalue"), "{}", help.out);
    assert!(help.out.contains("spectrum"), "{}", help.out);

    let missing = run(&["spectrum", "--s", "4"], &[]);
    assert_eq!(missing.exit, 2, "--N is required");

    let nonsense = run(&["frobnicate"], &[]);
    assert_eq!(nonsense.exit, 2);

    let bad_params = run(&["spectrum", "--s", "9", "--N", "3"], &[]);
    assert_eq!(bad_params.exit, 2);
    assert!(bad_params.err.contains("need 1 <= s <= N"), "{}", bad_params.err);
}

#[test]
fn config_file_and_env_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("addspec.toml");
    let mut file = std::fs::File::create(&config_path).unwrap();
    writeln!(file, "format = \"csv\"\nbudget = 500000").unwrap();
    drop(file);
    let path = config_path.to_str().unwrap();

    // File layer alone switches the format.
    let from_file = run(
        &["spectrum", "--s", "3", "--N", "3"],
        &[("ADDSPEC_CONFIG", path)],
    );
    assert_eq!(from_file.out, "3,3,3,3,3,\n");

    // Environment beats the file.
    let from_env = run(
        &["spectrum", "--s", "3", "--N", "3"],
        &[("ADDSPEC_CONFIG", path), ("ADDSPEC_FORMAT", "text")],
    );
    assert_eq!(from_env.out, "R(3,3) = {3}; f=3 g=3; exceptions={}\n");

    // Flags beat everything.
    let from_flag = run(
        &["spectrum", "--s", "3", "--N", "3", "--format", "text"],
        &[("ADDSPEC_CONFIG", path), ("ADDSPEC_FORMAT", "csv")],
    );
    assert_eq!(from_flag.out, "R(3,3) = {3}; f=3 g=3; exceptions={}\n");

    // The file-layer budget still applies when nothing overrides it.
    let tight = run(
        &["spectrum", "--s", "12", "--N", "26"],
        &[("ADDSPEC_CONFIG", path)],
    );
    assert_eq!(tight.exit, 3, "C(26,12) exceeds the configured 500000");

    let broken = run(
        &["spectrum", "--s", "3", "--N", "3", "--config", "/nonexistent.toml"],
        &[],
    );
    assert_eq!(broken.exit, 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let r = run(
        &[
            "spectrum", "--s", "4", "--N", "6",
            "--format", "json",
            "--out", path.to_str().unwrap(),
        ],
        &[("ADDSPEC_ELAPSED_MS", "0")],
    );
    assert_eq!(r.exit, 0, "{}", r.err);
    assert_eq!(r.out, "", "output went to the file");
    let contents = std::fs::read_to_string(&path).unwrap();
    assert!(contents.contains("\"kind\":\"spectrum\""), "{contents}");
    assert!(contents.ends_with('\n'));

    let bad = run(
        &["spectrum", "--s", "4", "--N", "6", "--out", "/no/such/dir/x.jsonl"],
        &[],
    );
    assert_eq!(bad.exit, 2);
}

#[test]
fn jsonl_output_is_stable_across_runs() {
    let env = &[("ADDSPEC_ELAPSED_MS", "0")];
    let args = ["verify", "--statement", "thm5.9", "--s", "3..5", "--format", "json"];
    let first = run(&args, env);
    let second = run(&args, env);
    assert_eq!(first.exit, 0);
    assert_eq!(first.out, second.out);
    assert!(first.out.contains("\"status\":\"pass\""), "{}", first.out);
}
