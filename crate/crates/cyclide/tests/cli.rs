//! End-to-end tests of the `cyclide` binary: flags, formats, exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclide"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_at_axis_matches_endpoint_formula() {
    let out = run(&["compute", "--R", "2", "--rho", "0", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let iso = v["data"]["iso_closed"].as_f64().unwrap();
    assert!((iso - 0.5984134206021490).abs() < 1e-12, "iso = {iso}");
    assert!(v["data"]["rel_err_iso"].as_f64().unwrap() <= 1e-8);
    assert_eq!(v["config"]["n_angular"].as_u64().unwrap(), 256);
}

#[test]
fn compute_on_torus_reports_round_sphere() {
    let out = run(&["compute", "--R", "2", "--rho", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("round_sphere"), "{text}");
    assert!(text.starts_with("# tolerance"), "{text}");
}

#[test]
fn compute_accepts_clifford_parameter() {
    // alpha = pi/6 -> R = 2
    let out = run(&[
        "compute",
        "--alpha",
        "0.5235987755982988",
        "--rho",
        "0",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let iso = v["data"]["iso_closed"].as_f64().unwrap();
    assert!((iso - 0.5984134206021490).abs() < 1e-10);
}

#[test]
fn sweep_square_torus_is_symmetric_and_bounded() {
    let out = run(&[
        "sweep",
        "--R",
        "1.4142135623730951",
        "--points",
        "101",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let pts = v["data"].as_array().unwrap();
    assert_eq!(pts.len(), 101);
    let iso_of = |p: &serde_json::Value| p["iso"].as_f64().unwrap();
    assert!(pts.iter().all(|p| iso_of(p) <= 1.0 + 1e-12));
    // rho = 0 and rho = 1 are dual under rho -> (1-rho)/(1+rho)
    assert!((iso_of(&pts[0]) - iso_of(&pts[100])).abs() < 1e-12);
}

#[test]
fn sweep_csv_has_config_header() {
    let out = run(&["sweep", "--R", "2", "--points", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# n_angular = 256"));
    assert!(text.contains("rho,iso"));
    assert_eq!(text.lines().filter(|l| l.contains(',') && !l.starts_with('#') && !l.starts_with("rho")).count(), 10);
}

#[test]
fn classify_axis_and_rotated_points() {
    let out = run(&["classify", "--x", "0.3", "--y", "0", "--z", "0", "--R", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["data"]["family_rho"].as_f64().unwrap() - 0.3).abs() < 1e-13);

    // z-axis point
    let out = run(&["classify", "--x", "0", "--y", "0", "--z", "7", "--R", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["data"]["family_rho"].as_f64().unwrap(), 0.0);

    // rotated copy of (1.5, 0, 0) classifies identically
    let (s, c) = (0.6_f64.sin(), 0.6_f64.cos());
    let out = run(&[
        "classify",
        "--x",
        &format!("{}", 1.5 * c),
        "--y",
        &format!("{}", 1.5 * s),
        "--z",
        "0",
        "--R",
        "2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let out2 = run(&["classify", "--x", "1.5", "--y", "0", "--z", "0", "--R", "2", "--format", "json"]);
    let v2: serde_json::Value = serde_json::from_str(&stdout(&out2)).unwrap();
    let rho = v["data"]["family_rho"].as_f64().unwrap();
    let rho2 = v2["data"]["family_rho"].as_f64().unwrap();
    assert!((rho - rho2).abs() < 1e-12, "{rho} vs {rho2}");
}

#[test]
fn classify_on_torus_prints_convention_note() {
    let out = run(&["classify", "--x", "3", "--y", "0", "--z", "0", "--R", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("round sphere"), "{text}");
    assert!(text.contains("convention"), "{text}");
}

#[test]
fn nonunique_emits_two_distinct_witnesses() {
    let out = run(&["nonunique", "--R", "2", "--v", "0.9", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["data"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert!((row["iso"].as_f64().unwrap() - 0.9).abs() <= 1e-10);
    }
    let f0 = rows[0]["maxwell_f"].as_f64().unwrap();
    let f1 = rows[1]["maxwell_f"].as_f64().unwrap();
    assert!((f0 - f1).abs() > 1e-6);
}

#[test]
fn nonunique_usage_failures_exit_2() {
    let out = run(&["nonunique", "--R", "1.4142135623730951", "--v", "0.9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("square"));

    let out = run(&["nonunique", "--R", "2", "--v", "0.3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["nonunique", "--R", "2", "--v", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_arguments_exit_2() {
    let out = run(&["compute", "--rho", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["compute", "--R", "2", "--alpha", "0.5", "--rho", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_default_run_passes_within_budget() {
    let started = std::time::Instant::now();
    let out = run(&["verify"]);
    let elapsed = started.elapsed().as_secs_f64();
    let text = stdout(&out);
    assert!(out.status.success(), "verify failed:\n{text}");
    assert!(text.contains("verify: PASS"), "{text}");
    assert!(elapsed < 120.0, "verify took {elapsed:.0} s");
    // one row per suite
    assert_eq!(text.lines().filter(|l| l.contains("PASS") || l.contains("FAIL")).count(), 14);
}

#[test]
fn verify_with_insufficient_resolution_fails() {
    let out = run(&["verify", "--n-angular", "8", "--n-radial", "8"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("oracle-agreement") && text.contains("FAIL"), "{text}");
}

#[test]
fn worker_count_env_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclide"))
        .env("CYCLIDE_NUM_THREADS", "2")
        .args(["sweep", "--R", "2", "--points", "20"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("cyclide_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.csv");
    let out = run(&["sweep", "--R", "2", "--points", "10", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("rho,iso"));
    std::fs::remove_file(&path).ok();
}
