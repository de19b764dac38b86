// Copyright 2026 The lattice-energy authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! The `lattice-energy` binary, run as a subprocess.

use std::process::Command;

use lattice_energy::cli::CommandResult;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lattice-energy"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, stdout, stderr) = run(&all);
    assert_eq!(code, 0, "{stderr}");
    serde_json::from_str(&stdout).unwrap()
}

#[test]
fn energy_json_has_fields() {
    let v = run_json(&["energy", "--triangular", "1"]);
    assert_eq!(v["status"], "ok");
    let e = v["energy"].as_f64().unwrap();
    let z6 = v["zeta6"].as_f64().unwrap();
    let z12 = v["zeta12"].as_f64().unwrap();
    assert!((e - (z12 - 2.0 * z6)).abs() < 1e-12);
    assert!(v["diagnostics"].as_array().unwrap().is_empty());
}

#[test]
fn json_round_trips() {
    let (_, stdout, _) = run(&["bounds", "threshold", "--area", "0.6", "--json"]);
    let parsed: CommandResult = serde_json::from_str(&stdout).unwrap();
    let again = serde_json::to_string_pretty(&parsed).unwrap();
    let reparsed: CommandResult = serde_json::from_str(&again).unwrap();
    assert_eq!(parsed, reparsed);
    assert_eq!(parsed.payload["sufficient_ok"], Value::Bool(true));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, stderr) = run(&["energy", "--len-u", "1"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
    assert_eq!(run(&["energy", "--square", "0"]).0, 2);
    assert_eq!(run(&["lattice", "chart", "--u", "0.5", "--v", "1.0"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
}

#[test]
fn domain_error_in_json_mode() {
    let (code, stdout, _) = run(&["sums", "k0", "--x=-1", "--json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["status"], "error");
    assert!(v["error"].as_str().unwrap().contains("-1"));
}

#[test]
fn convergence_failure_exits_three() {
    let (code, _, _) = run(&[
        "--max-shell",
        "3",
        "sums",
        "zeta",
        "--square",
        "1",
        "--s",
        "6",
        "--method",
        "direct",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn levelset_csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let (code, _, stderr) = run(&[
            "levelset",
            "--area",
            "1",
            "--u-min",
            "0.9",
            "--u-max",
            "1.1",
            "--v-min",
            "0.95",
            "--v-max",
            "1.2",
            "--step",
            "0.05",
            "--objective",
            "lj",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{stderr}");
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("u,v,value,valid"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 5 * 6);
    for row in &rows {
        let u: f64 = row[0].parse().unwrap();
        let v: f64 = row[1].parse().unwrap();
        let valid = row[3] == "1";
        assert_eq!(valid, u <= v && u * v >= 1.0, "{row:?}");
        assert_eq!(row[2].is_empty(), !valid);
    }
}

#[test]
fn levelset_write_failure_exits_four() {
    let (code, _, stderr) = run(&[
        "levelset",
        "--u-min",
        "1",
        "--u-max",
        "1.05",
        "--v-min",
        "1",
        "--v-max",
        "1.05",
        "--step",
        "0.05",
        "--out",
        "/nonexistent-dir/grid.csv",
    ]);
    assert_eq!(code, 4);
    assert!(stderr.contains("cannot write"));
}

#[test]
fn verify_with_zero_tolerance_fails() {
    let (code, stdout, _) = run(&["verify", "--fast", "--tol", "0"]);
    assert_eq!(code, 1);
    assert!(stdout.lines().filter(|l| l.starts_with("FAIL")).count() >= 1);
}

#[test]
fn minimize_reports_triangular_at_small_area() {
    let v = run_json(&["minimize", "--area", "0.6", "--step", "0.01"]);
    assert_eq!(v["classification"], "triangular");
    assert_eq!(v["certificate"]["sufficient_ok"], Value::Bool(true));
}

#[test]
fn ratio_near_corner_is_rejected() {
    let (code, _, stderr) = run(&["analysis", "ratio", "--u", "1.0746", "--v", "1.0746"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("singular"));
}
