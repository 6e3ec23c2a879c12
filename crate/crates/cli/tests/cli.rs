//! End-to-end checks of the `wforge` binary: exit codes, document flow, and
//! report determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn wforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wforge"))
        .args(args)
        .env_remove("WFORGE_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("wforge-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn synth_then_simulate_tree() {
    let doc = tmp("wtree23.json");
    let out = wforge(&[
        "synth", "--kind", "wtree", "--d", "2", "--n", "3", "--out",
        doc.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout(&out);
    assert!(report.contains("\"spread_count\": 7"), "{report}");

    let sim = wforge(&["simulate", doc.to_str().unwrap(), "--input", "zero", "--expect", "w_qubit"]);
    assert!(sim.status.success(), "{}", String::from_utf8_lossy(&sim.stderr));
    let text = stdout(&sim);
    assert!(text.contains("verdict: PASS"), "{text}");
    std::fs::remove_file(doc).ok();
}

#[test]
fn simulate_with_postselection() {
    let doc = tmp("wtree23-post.json");
    wforge(&["synth", "--kind", "wtree", "--d", "2", "--n", "3", "--out", doc.to_str().unwrap()]);
    // project the last three wires onto |0⟩: W8 -> W5 at probability 5/8
    let sim = wforge(&[
        "simulate",
        doc.to_str().unwrap(),
        "--input",
        "zero",
        "--postselect",
        "5=0,6=0,7=0",
    ]);
    assert!(sim.status.success());
    let text = stdout(&sim);
    let prob_line = text
        .lines()
        .find(|l| l.starts_with("post-selection probability:"))
        .expect("probability line");
    let prob: f64 = prob_line.rsplit(' ').next().unwrap().parse().unwrap();
    assert!((prob - 0.625).abs() < 1e-10, "{prob_line}");
    assert!(text.contains("support (5 configurations)"), "{text}");
    std::fs::remove_file(doc).ok();
}

#[test]
fn simulate_mixed_tree() {
    let doc = tmp("mixed23.json");
    wforge(&["synth", "--kind", "mixed", "--factors", "2,3", "--out", doc.to_str().unwrap()]);
    let sim = wforge(&["simulate", doc.to_str().unwrap(), "--input", "zero", "--expect", "w_qubit"]);
    assert!(sim.status.success());
    assert!(stdout(&sim).contains("fidelity: 1"));
    std::fs::remove_file(doc).ok();
}

#[test]
fn non_prime_dimension_is_usage_error() {
    let out = wforge(&["synth", "--kind", "zcx", "--d", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not prime"), "{err}");
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = wforge(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suite_passes_and_is_deterministic() {
    let a = wforge(&["verify", "--suite", "postselect"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    let b = wforge(&["verify", "--suite", "postselect"]);
    assert_eq!(stdout(&a), stdout(&b), "two runs must render identical bytes");
    assert!(stdout(&a).contains("suite postselect"));

    let json = wforge(&["verify", "--suite", "postselect", "--json"]);
    assert!(json.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("valid JSON");
    assert!(parsed.as_array().map(|suites| !suites.is_empty()).unwrap_or(false));
}

#[test]
fn level_reports_hierarchy_position() {
    let out = wforge(&["level", "--gate", "SQRTZ", "--d", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("level 5"));

    let out = wforge(&["level", "--gate", "P1", "--d", "5", "--k", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("level 4"));
}

#[test]
fn count_reports_resources() {
    let doc = tmp("zcx5.json");
    wforge(&["synth", "--kind", "zcx", "--d", "5", "--exact", "--out", doc.to_str().unwrap()]);
    let out = wforge(&["count", doc.to_str().unwrap()]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(parsed["sqrtz"]["5"], serde_json::json!(9));
    std::fs::remove_file(doc).ok();
}

#[test]
fn plan_matches_closed_form() {
    let out = wforge(&["plan", "--n-target", "5", "--d", "2"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(parsed["tree_size"], serde_json::json!(8));
    assert_eq!(parsed["success_probability"], serde_json::json!(0.625));
    assert_eq!(parsed["expected_attempts"], serde_json::json!(1.6));
}

#[test]
fn simulate_qudit_tree_from_resource() {
    let doc = tmp("qwtree31.json");
    wforge(&["synth", "--kind", "qwtree", "--d", "3", "--n", "1", "--out", doc.to_str().unwrap()]);
    let sim = wforge(&[
        "simulate",
        doc.to_str().unwrap(),
        "--input",
        "resource:0",
        "--expect",
        "w_qudit",
    ]);
    assert!(sim.status.success(), "{}", String::from_utf8_lossy(&sim.stderr));
    assert!(stdout(&sim).contains("verdict: PASS"));
    std::fs::remove_file(doc).ok();
}

#[test]
fn tolerance_env_override_applies() {
    let doc = tmp("wprime3.json");
    wforge(&["synth", "--kind", "wprime", "--d", "3", "--out", doc.to_str().unwrap()]);
    // the W output is far from |+00⟩, so the default tolerance fails the
    // gate; a huge WFORGE_TOL lets it pass, and --tol wins over the env
    let args = ["simulate", doc.to_str().unwrap(), "--input", "zero", "--expect", "plus:0"];
    let strict = wforge(&args);
    assert_eq!(strict.status.code(), Some(1), "{}", stdout(&strict));
    let loose = Command::new(env!("CARGO_BIN_EXE_wforge"))
        .args(args)
        .env("WFORGE_TOL", "0.95")
        .output()
        .expect("binary runs");
    assert!(loose.status.success(), "{}", stdout(&loose));
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_wforge"))
        .args(args)
        .arg("--tol")
        .arg("1e-10")
        .env("WFORGE_TOL", "0.95")
        .output()
        .expect("binary runs");
    assert_eq!(flag_wins.status.code(), Some(1));
    std::fs::remove_file(doc).ok();
}
