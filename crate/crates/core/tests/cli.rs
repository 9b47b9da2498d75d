//! End-to-end runs of the `extscope` binary: scenarios, exit codes and
//! report determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn extscope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extscope"))
        .args(args)
        .env_remove("EXTSCOPE_DEGREE_CAP")
        .current_dir(root())
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("extscope-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn every_shipped_scenario_passes() {
    let mut files: Vec<_> = std::fs::read_dir(root().join("scenarios"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert!(files.len() >= 3);
    for f in files {
        let out = extscope(&["--format", "json", "run", f.to_str().unwrap()]);
        assert_eq!(
            code(&out),
            0,
            "{}: {}",
            f.display(),
            String::from_utf8_lossy(&out.stdout)
        );
        assert_eq!(json(&out)["failed"], 0);
    }
}

#[test]
fn empty_scenario_has_no_tasks() {
    let out = extscope(&["--format", "json", "run", "scenarios/empty.toml"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["tasks"], Value::Array(vec![]));
    assert_eq!(report["defaults"]["degree_cap"], 20);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["--format", "json", "run", "scenarios/two_plane_union.toml"];
    let first = extscope(&args);
    assert_eq!(first.stdout, extscope(&args).stdout);
    let parallel = extscope(&[
        "--format",
        "json",
        "--parallel",
        "run",
        "scenarios/two_plane_union.toml",
    ]);
    assert_eq!(first.stdout, parallel.stdout);
}

#[test]
fn wrong_expectation_exits_one() {
    let path = scratch(
        "wrong.toml",
        r#"
name = "wrong"

[objects.M]
quotient = "(xy, xz)"

[[tasks]]
op = "ext"
module = "M"
index = 1
expect = { annihilator = "(y)" }
"#,
    );
    let out = extscope(&["--format", "json", "run", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["failed"], 1);
    let check = &report["tasks"][0]["checks"][0];
    assert_eq!(check["computed"], serde_json::json!(["x"]));
    assert_eq!(check["pass"], false);
}

#[test]
fn parse_errors_exit_two() {
    let unknown_op = scratch(
        "unknown.toml",
        "name = \"u\"\n[[tasks]]\nop = \"tor\"\nmodule = \"R\"\n",
    );
    let bad_poly = scratch(
        "badpoly.toml",
        "name = \"b\"\n[objects.M]\nquotient = \"(x + )\"\n",
    );
    let inhomogeneous = scratch(
        "inhom.toml",
        "name = \"i\"\n[objects.M]\nquotient = \"(x + y^2)\"\n",
    );
    for p in [&unknown_op, &bad_poly, &inhomogeneous] {
        let out = extscope(&["run", p.to_str().unwrap()]);
        assert_eq!(code(&out), 2, "{}", p.display());
        assert!(out.stdout.is_empty(), "partial report for {}", p.display());
    }
    assert_eq!(code(&extscope(&["run", "no/such/file.toml"])), 2);
    assert_eq!(code(&extscope(&["frobnicate"])), 2);
    assert_eq!(code(&extscope(&["verify-paper", "--only", "9"])), 2);
}

#[test]
fn degree_cap_breach_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_extscope"))
        .args(["compute", "resolve", "--module", "x^3, y^3, z^3"])
        .env("EXTSCOPE_DEGREE_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    assert!(out.stdout.is_empty());
    let bad_env = Command::new(env!("CARGO_BIN_EXE_extscope"))
        .args(["compute", "resolve", "--module", "x"])
        .env("EXTSCOPE_DEGREE_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&bad_env), 2);
}

#[test]
fn degree_cap_flag_beats_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_extscope"))
        .args([
            "--degree-cap",
            "30",
            "compute",
            "resolve",
            "--module",
            "x^3, y^3, z^3",
        ])
        .env("EXTSCOPE_DEGREE_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["defaults"]["degree_cap"], 30);
    assert_eq!(report["defaults"]["degree_cap_source"], "flag");
}

#[test]
fn verify_paper_flags_only_the_non_cm_example() {
    let out = extscope(&["--format", "json", "verify-paper"]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    let failing: Vec<&str> = report["tasks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["status"] == "fail")
        .map(|t| t["label"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["R/xR over QQ[X,Y,Z]/(X^2,XY,XZ)"]);
    assert_eq!(report["passed"], 15);
}

#[test]
fn verify_paper_groups_and_seeds() {
    for only in ["2", "4", "5", "6"] {
        assert_eq!(
            code(&extscope(&["verify-paper", "--only", only])),
            0,
            "group {only}"
        );
    }
    let args = [
        "--format",
        "json",
        "verify-paper",
        "--only",
        "6",
        "--seed",
        "7",
        "--corpus-size",
        "40",
    ];
    let a = extscope(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, extscope(&args).stdout);
}

#[test]
fn compute_ext_reports_the_annihilator() {
    let out = extscope(&["compute", "ext", "--module", "xy, xz", "--i", "1"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["result"]["annihilator"], serde_json::json!(["x"]));
    assert_eq!(report["result"]["zero"], false);
}

#[test]
fn compute_invariants_of_zero_is_the_sentinel() {
    let out = extscope(&["compute", "invariants", "--module", "0"]);
    assert_eq!(code(&out), 0);
    let r = &json(&out)["result"];
    assert_eq!(r["r"], -1);
    assert_eq!(r["g"], "inf");
    assert_eq!(r["t"], "inf");
    assert_eq!(r["ann"], serde_json::json!(["1"]));
}

#[test]
fn compute_eass_finds_the_period() {
    let out = extscope(&[
        "compute",
        "eass",
        "--ring",
        "F5[X,Y,Z]/(X+Y+Z)^5",
        "--ideal",
        "((x+y+z)^2)",
    ]);
    assert_eq!(code(&out), 0);
    let p = &json(&out)["result"]["periodicity"];
    assert_eq!(p["kind"], "periodic");
    assert_eq!(p["period"], 2);
}

#[test]
fn text_format_lists_every_task() {
    let out = extscope(&["run", "scenarios/two_plane_union.toml"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines()
            .filter(|l| l.trim_start().starts_with("[PASS]"))
            .count(),
        10
    );
    assert!(!text.contains("[FAIL]"));
}
