//! End-to-end tests driving the compiled binary: flag parsing, exit codes,
//! output formats, and the golden suite.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiring-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("semiring-lab-test-{name}-{}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn classify_chain_c_prints_the_headline_verdicts() {
    let output = run(&["classify", "--catalog", "chain_c"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("subtractive: true"), "{text}");
    assert!(text.contains("weak_gaussian: true"), "{text}");
    assert!(text.contains("gaussian: certificate RadicalFixed (exact)"), "{text}");
}

#[test]
fn classify_lagrassa_reports_the_witness_pair() {
    let output = run(&["classify", "--catalog", "lagrassa", "--format", "json"]);
    assert!(output.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["weak_gaussian"]["holds"], false);
    assert_eq!(report["weak_gaussian"]["witness"]["f"], "u + X");
    assert_eq!(report["weak_gaussian"]["witness"]["g"], "1 + u*X");
}

#[test]
fn classify_nil_chain_takes_family_parameters() {
    let output = run(&["classify", "--catalog", "nil_chain", "--param", "n=4"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("subtractive: false"), "{text}");
    assert!(text.contains("weak_gaussian: true"), "{text}");
    assert!(text.contains("witness"), "false verdicts carry witnesses: {text}");
}

#[test]
fn report_flags_wraparound_arithmetic_as_not_weak_gaussian() {
    let output = run(&[
        "report", "--catalog", "b_n_i", "--param", "n=4", "--param", "i=2", "--format", "json",
    ]);
    assert!(output.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["input"]["name"], "b_n_i(4,2)");
    assert_eq!(report["weak_gaussian"]["holds"], false);
    assert!(report["weak_gaussian"]["witness"].is_object());
}

#[test]
fn report_json_round_trips_and_is_versioned() {
    let output = run(&["report", "--catalog", "boolean"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["config"]["degree_bound"], 3);
    assert_eq!(report["config"]["lattice_cap"], 12);
    let reparsed: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(report, reparsed);
}

#[test]
fn reports_are_byte_for_byte_deterministic() {
    let first = run(&["report", "--catalog", "truncation", "--param", "k=3"]);
    let second = run(&["report", "--catalog", "truncation", "--param", "k=3"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn parallel_sweeps_do_not_change_the_report() {
    let sequential = run(&["report", "--catalog", "lagrassa"]);
    let parallel = run(&["report", "--catalog", "lagrassa", "--parallel"]);
    let mut a: serde_json::Value = serde_json::from_str(&stdout(&sequential)).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&stdout(&parallel)).unwrap();
    // Only the recorded configuration may differ.
    a["config"]["parallel"] = serde_json::Value::Null;
    b["config"]["parallel"] = serde_json::Value::Null;
    assert_eq!(a, b);
}

#[test]
fn verify_paper_passes_and_exits_zero() {
    let output = run(&["verify-paper"]);
    let text = stdout(&output);
    assert!(output.status.success(), "{text}");
    assert!(text.contains("0 failed"), "{text}");
    assert!(!text.contains("[FAIL]"), "{text}");
}

#[test]
fn verify_paper_emits_json_rows() {
    let output = run(&["verify-paper", "--format", "json"]);
    assert!(output.status.success());
    let table: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(table["failed"], 0);
    let rows = table["rows"].as_array().unwrap();
    assert!(rows.len() >= 30);
    assert!(rows.iter().all(|r| r["pass"] == true));
}

#[test]
fn table_files_classify_like_catalog_members() {
    let table = r#"{
        "elements": ["0", "1"],
        "add": [[0, 1], [1, 1]],
        "mul": [[0, 0], [0, 1]],
        "zero": 0,
        "one": 1
    }"#;
    let path = temp_file("boolean", table);
    let output = run(&["classify", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("subtractive: true"), "{text}");
}

#[test]
fn spec_files_resolve_catalog_families() {
    let spec = r#"{ "family": "nil_chain", "params": { "n": 4 } }"#;
    let path = temp_file("spec", spec);
    let output = run(&["report", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert!(output.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["input"]["name"], "nil_chain(4)");
}

#[test]
fn invalid_tables_exit_with_code_two() {
    // Addition table is not commutative.
    let table = r#"{
        "elements": ["0", "1"],
        "add": [[0, 1], [0, 1]],
        "mul": [[0, 0], [0, 1]],
        "zero": 0,
        "one": 1
    }"#;
    let path = temp_file("broken", table);
    let output = run(&["classify", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(output.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&output.stderr).is_empty());
}

#[test]
fn unknown_catalog_and_missing_files_exit_with_code_two() {
    let output = run(&["classify", "--catalog", "no_such_family"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["classify", "--input", "/nonexistent/table.json"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["classify"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn missing_family_parameters_exit_with_code_two() {
    let output = run(&["classify", "--catalog", "nil_chain"]);
    assert_eq!(output.status.code(), Some(2));
    let message = String::from_utf8_lossy(&output.stderr).to_string();
    assert!(message.contains("n"), "{message}");
}
