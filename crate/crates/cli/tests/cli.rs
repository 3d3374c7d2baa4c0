//! End-to-end checks of the binary: exit codes, JSON shapes, file outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn snormed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snormed"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("snormed-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn axioms_snorm_suite_passes() {
    let out = snormed(&["axioms", "snorm.example6.d1", "--samples", "500"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["all_pass"], Value::Bool(true));
    assert_eq!(v["structure"]["kind"], "SNORM");
    let ids: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["property_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["NS1", "NS2", "NS3", "PAIR_SYMMETRY"]);
}

#[test]
fn axioms_gnorm_probe_fails_with_canned_witness() {
    let out = snormed(&["axioms", "snorm.example6.d1", "--as", "gnorm", "--samples", "200"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    let ng5 = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["property_id"] == "NG5")
        .unwrap();
    assert_eq!(ng5["verdict"], "FAIL");
    assert_eq!(ng5["witness"]["points"], serde_json::json!([[1.0], [5.0], [0.0]]));
}

#[test]
fn axioms_falsifies_discrete_smetric_generation() {
    let out = snormed(&[
        "axioms",
        "smetric.discrete.d1",
        "--falsify",
        "snorm-generated",
        "--samples",
        "200",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    let report = &v["reports"][0];
    assert_eq!(report["property_id"], "SNORM_GENERATED");
    assert_eq!(report["witness"]["scalars"], serde_json::json!([2.0]));
}

#[test]
fn axioms_unknown_id_is_usage_error() {
    let out = snormed(&["axioms", "snorm.missing.d1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown structure id"));
}

#[test]
fn ball_preset_emits_files() {
    let svg = temp_path("fig1a.svg");
    let csv = temp_path("fig1a.csv");
    let out = snormed(&[
        "ball",
        "--preset",
        "fig1a",
        "--svg",
        svg.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["vertices"], 360);
    assert!(v["max_level_error"].as_f64().unwrap() <= 1e-8);

    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("angle_rad,x,y\n"));
    assert_eq!(csv_text.lines().count(), 361);
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.contains("<path"));
    assert!(svg_text.contains("fill=\"none\""));
    std::fs::remove_file(&svg).ok();
    std::fs::remove_file(&csv).ok();
}

#[test]
fn ball_trace_failure_exits_one() {
    // Radius below the centroid value.
    let out = snormed(&[
        "ball",
        "--snorm",
        "snorm.sum_abs.d2",
        "--x0",
        "1,1",
        "--a1",
        "0,0",
        "--a2",
        "-1,-1",
        "--r",
        "1.0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert!(v["error"].as_str().unwrap().contains("not below the radius"));
}

#[test]
fn fixpoint_half_locates_origin() {
    let out = snormed(&["fixpoint", "half", "--snorm", "snorm.sum_abs.d2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["fixed_point"], serde_json::json!([0.0, 0.0]));
    assert_eq!(v["uniqueness"]["unique"], Value::Bool(true));
}

#[test]
fn fixpoint_budget_exhaustion_exits_one() {
    let out = snormed(&[
        "fixpoint",
        "cosine",
        "--snorm",
        "snorm.sum_abs.d1",
        "--tol",
        "1e-12",
        "--budget",
        "70",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["error"], "no-convergence");
    assert!(v["residual"].as_f64().unwrap() > 1e-12);
}

#[test]
fn rhoades_scan_and_implication() {
    let out = snormed(&["rhoades", "half", "--condition", "ns25", "--samples", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["condition_pass_rate"], 1.0);

    let out = snormed(&[
        "rhoades",
        "half",
        "--condition",
        "ns25-implies-s25",
        "--samples",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["report"]["verdict"], "PASS");

    // The identity map sits on the strict boundary at every pair.
    let out = snormed(&["rhoades", "identity", "--condition", "r25", "--samples", "200"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["condition_pass_rate"], 0.0);
}

#[test]
fn sets_reads_csv_and_reports() {
    let csv = temp_path("triple.csv");
    std::fs::write(&csv, "x1\n0\n1\n2\n").unwrap();
    let out = snormed(&["sets", csv.to_str().unwrap(), "--snorm", "snorm.sum_abs.d1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["diameter"], 4.0);
    assert_eq!(v["chebyshev_radius"], 2.0);
    assert_eq!(v["centre_indices"], serde_json::json!([1]));
    assert_eq!(v["diametral_flags"], serde_json::json!([true, false, true]));
    std::fs::remove_file(&csv).ok();

    let bad = temp_path("bad.csv");
    std::fs::write(&bad, "a,b\n1,2\n").unwrap();
    let out = snormed(&["sets", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&bad).ok();
}

#[test]
fn seq_reports_the_open_interval_escape() {
    let out = snormed(&["seq", "one_over_n", "--eps", "1e-3", "--horizon", "10000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["cauchy"]["verdict"], "HOLDS");
    assert_eq!(v["completeness"]["candidate"], serde_json::json!([0.0]));
    assert_eq!(v["completeness"]["in_domain"], Value::Bool(false));

    let out = snormed(&["seq", "one_over_n_closed", "--eps", "1e-3", "--horizon", "10000"]);
    let v = stdout_json(&out);
    assert_eq!(v["completeness"]["in_domain"], Value::Bool(true));
}
