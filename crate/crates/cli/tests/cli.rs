//! End-to-end checks of the binary: schemas, report shapes, exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn latcoh(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_latcoh"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn spectrum_brieskorn_237() {
    let out = latcoh(
        &["spectrum"],
        r#"{"kind":"weighted_homogeneous","weights":[21,14,6],"degree":42}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_str(&out).trim(), r#"{"spectrum":["41/42"],"p_g":1}"#);
}

#[test]
fn spectrum_requires_germ_payload() {
    let out = latcoh(
        &["spectrum"],
        r#"{"kind":"weight_table","rank":1,"c":[2],"values":[0,1,0]}"#,
    );
    assert_eq!(out.status.code(), Some(65));
    assert!(stderr_str(&out).contains("weighted_homogeneous"));
}

#[test]
fn spectrum_refuses_spectral_number_one() {
    let out = latcoh(
        &["spectrum"],
        r#"{"kind":"weighted_homogeneous","weights":[1,1],"degree":2}"#,
    );
    assert_eq!(out.status.code(), Some(65));
    assert!(stderr_str(&out).contains("spectral number"));
}

#[test]
fn cohomology_of_reduced_237_table() {
    let out = latcoh(
        &["cohomology"],
        r#"{"kind":"weight_table","rank":1,"c":[2],"values":[0,1,0]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(json["kind"], "cohomology");
    assert_eq!(json["min_level"], 0);
    assert_eq!(json["eu"], 1);
    assert_eq!(json["levels"][0]["betti"][0], 2);
    assert_eq!(json["levels"][0]["degree"], 0);
    assert_eq!(json["levels"][1]["degree"], 2);
    assert_eq!(json["u_ranks"][0]["ranks"][0], 1);
}

#[test]
fn cohomology_accepts_hilbert_pair_and_germ_inputs() {
    let pair = latcoh(
        &["cohomology"],
        r#"{"kind":"hilbert_pair","rank":1,"c":[2],"h":[0,1,1],"h_circ":"sym"}"#,
    );
    let germ = latcoh(
        &["cohomology"],
        r#"{"kind":"weighted_homogeneous","weights":[21,14,6],"degree":42}"#,
    );
    assert_eq!(pair.status.code(), Some(0));
    assert_eq!(stdout_str(&pair), stdout_str(&germ));
}

#[test]
fn root_dot_of_2313_has_three_leaves() {
    let out = latcoh(
        &["root", "-f", "dot"],
        r#"{"kind":"weighted_homogeneous","weights":[39,26,6],"degree":78}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout_str(&out);
    assert_eq!(dot.matches("-> v3;").count(), 3);
    assert!(dot.contains("ray"));
}

#[test]
fn root_json_round_trips_through_core() {
    let out = latcoh(
        &["root", "-f", "json"],
        r#"{"kind":"weight_table","rank":2,"c":[1,1],"values":[0,1,1,0]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let root = latcoh_core::import_root(stdout_str(&out).trim()).unwrap();
    assert_eq!(root.vertices().len(), 3);
    assert!(latcoh_core::validate_root(&root).pass);
}

#[test]
fn root_dot_written_to_file() {
    let dir = std::env::temp_dir().join(format!("latcoh-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("root.dot");
    let out = latcoh(
        &["root", "-f", "dot", "-o", path.to_str().unwrap()],
        r#"{"kind":"weight_table","rank":1,"c":[2],"values":[0,1,0]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("digraph graded_root {"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn path_explicit_and_minimized() {
    let input = r#"{"kind":"weight_table","rank":2,"c":[1,1],"values":[0,1,1,0]}"#;
    let explicit = latcoh(&["path", "--path", "[[0,0],[0,1],[1,1]]"], input);
    assert_eq!(explicit.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&explicit)).unwrap();
    assert_eq!(json["eu_module"], json["eu_weights"]);
    assert_eq!(json["eu_weights"], 1);

    let minimized = latcoh(&["path"], input);
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&minimized)).unwrap();
    assert_eq!(json["eu"], 1);
    assert_eq!(json["method"], "exhaustive");
    assert_eq!(json["witness"][1], serde_json::json!([0, 1]));
}

#[test]
fn path_budget_exhaustion_without_dp_is_data_error() {
    let corner = 81;
    let values: Vec<String> = (0..corner + 1).map(|_| "0".to_string()).collect();
    let input = format!(
        r#"{{"kind":"weight_table","rank":1,"c":[{corner}],"values":[{}]}}"#,
        values.join(",")
    );
    let out = latcoh(&["path", "--no-dp"], &input);
    assert_eq!(out.status.code(), Some(65));
    assert!(stderr_str(&out).contains("budget"));
    let with_dp = latcoh(&["path"], &input);
    assert_eq!(with_dp.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&with_dp)).unwrap();
    assert_eq!(json["method"], "dp");
}

#[test]
fn schema_errors_exit_64_with_field_path() {
    let out = latcoh(
        &["cohomology"],
        r#"{"kind":"weight_table","rank":1,"c":[2],"values":"bad"}"#,
    );
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr_str(&out).contains("`values`"));

    let out = latcoh(&["cohomology"], r#"{"kind":"mystery"}"#);
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr_str(&out).contains("`kind`"));
}

#[test]
fn dimension_mismatch_exits_65() {
    let out = latcoh(
        &["cohomology"],
        r#"{"kind":"weight_table","rank":1,"c":[2],"values":[0,1]}"#,
    );
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn usage_errors_exit_64() {
    let out = latcoh(&["root", "-f", "svg"], "");
    assert_eq!(out.status.code(), Some(64));
    let out = latcoh(&["frobnicate"], "");
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn verify_suite_passes_with_exit_zero() {
    let out = latcoh(
        &["verify", "euler", "--seed", "7", "--trials", "10", "--rank", "2", "--cmax", "3"],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(json["passed"], 10);
    assert_eq!(json["failed"], 0);
}

#[test]
fn hilbert_pair_rejects_bad_keyword() {
    let out = latcoh(
        &["cohomology"],
        r#"{"kind":"hilbert_pair","rank":1,"c":[2],"h":[0,1,1],"h_circ":"mirror"}"#,
    );
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr_str(&out).contains("sym"));
}
