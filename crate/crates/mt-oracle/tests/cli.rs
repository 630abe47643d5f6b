//! End-to-end tests of the command-line binary: exit codes, human output,
//! JSON reports and their byte-level determinism, and the preset overlay.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mt-oracle"))
}

fn write_spec(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json_report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

const SPIN_2_20: &str = r#"{
    "factors": [{"family": "D", "rank": 11, "painted": [1]}],
    "lattice": {"preset": "sc"}
}"#;

const GSPIN_2_20: &str = r#"{
    "factors": [{"family": "D", "rank": 11, "painted": [1]}],
    "lattice": {"preset": "gspin"}
}"#;

const OUTER_3_19: &str = r#"{
    "factors": [{"family": "D", "rank": 11, "painted": [1], "automorphism": [1,2,3,4,5,6,7,8,9,11,10]}],
    "lattice": {"preset": "adjoint"}
}"#;

const NORM_ONE_QUADRATIC: &str = r#"{
    "factors": [],
    "lattice": {"generators": [["1"]], "central_rank": 1},
    "center": {"orders": [2], "c": [1], "action": [[[-1]]]}
}"#;

const CUBIC_NORM_ONE: &str = r#"{
    "factors": [],
    "lattice": {"generators": [["1", "0"], ["0", "1"]], "central_rank": 2},
    "center": {"orders": [3], "c": [0], "action": [[[0, -1], [1, -1]]]}
}"#;

#[test]
fn verdict_exits_zero_and_prints_the_decision() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "spin.json", SPIN_2_20);
    let out = bin().args(["verdict", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    assert!(text.contains("mumford-tate: yes"), "{text}");
    assert!(text.contains("check compact-maximal-torus: passed"), "{text}");
    assert!(text.contains("witness:"), "{text}");
}

#[test]
fn verdict_json_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "spin.json", SPIN_2_20);
    let run = || bin().args(["verdict", "--json", "--spec"]).arg(&spec).output().unwrap();
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "two runs must emit identical bytes");
    let report = json_report(&first);
    assert_eq!(report["is_mt"], Value::Bool(true));
    assert_eq!(report["command"], "verdict");
    assert_eq!(report["checks"].as_array().unwrap().len(), 4);
}

#[test]
fn verdict_stays_exit_zero_on_a_negative_decision() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "outer.json", OUTER_3_19);
    let out = bin().args(["verdict", "--json", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let report = json_report(&out);
    assert_eq!(report["is_mt"], Value::Bool(false));
    assert_eq!(report["witness"], Value::Null);
}

#[test]
fn classes_needs_a_compact_maximal_torus() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "outer.json", OUTER_3_19);
    let out = bin().args(["classes", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_str(&out).trim(), "no compact maximal torus");
}

#[test]
fn malformed_specs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        &dir,
        "bad.json",
        r#"{"factors": [{"family": "D", "rank": 11, "color": "blue"}], "lattice": {"preset": "sc"}}"#,
    );
    let out = bin().args(["verdict", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!stderr_str(&out).is_empty());

    let missing = bin().args(["verdict"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn lift_reports_the_obstruction_on_both_covers() {
    let dir = tempfile::tempdir().unwrap();
    let mu = "1,0,0,0,0,0,0,0,0,0,0";

    let spin = write_spec(&dir, "spin.json", SPIN_2_20);
    let out = bin().args(["lift", "--json", "--mu", mu, "--spec"]).arg(&spin).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let report = json_report(&out);
    assert_eq!(report["lifts"], Value::Bool(false));
    assert_eq!(report["obstruction"]["factors"][0], "4");
    assert_eq!(report["obstruction"]["coords"][0], "2");
    assert_eq!(report["class"]["exists"], Value::Bool(true)); // q = 10 is even

    let gspin = write_spec(&dir, "gspin.json", GSPIN_2_20);
    let out = bin().args(["lift", "--json", "--mu", mu, "--spec"]).arg(&gspin).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let report = json_report(&out);
    assert_eq!(report["lifts"], Value::Bool(true));
    assert!(report["coefficients"].is_array());
}

#[test]
fn lift_defaults_to_the_class_representative() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "spin.json", SPIN_2_20);
    let out = bin().args(["lift", "--json", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = json_report(&out);
    // the representative for painting the first node is the first unit
    // vector, which does not lift to the simply connected cover
    assert_eq!(report["mu"][0], "1");
    assert_eq!(report["lifts"], Value::Bool(false));
}

#[test]
fn hodge_prints_the_adjoint_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "spin.json", SPIN_2_20);
    let out = bin().args(["hodge", "--json", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let report = json_report(&out);
    assert_eq!(report["dimension"], 231);
    let levels = report["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 3);
    assert_eq!(levels[0]["p"], "-1");
    assert_eq!(levels[0]["h"], 20);
    assert_eq!(levels[1]["p"], "0");
    assert_eq!(levels[1]["h"], 191);
    assert_eq!(levels[2]["p"], "1");
    assert_eq!(levels[2]["h"], 20);
}

#[test]
fn serre_check_reports_quotient_and_anisotropy() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_spec(&dir, "uf.json", NORM_ONE_QUADRATIC);
    let out = bin().args(["serre-check", "--json", "--spec"]).arg(&good).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let report = json_report(&out);
    assert_eq!(report["is_quotient"], Value::Bool(true));
    assert_eq!(report["anisotropic"], Value::Bool(true));
    assert_eq!(report["fixed_dimension"], 0);

    let cubic = write_spec(&dir, "cubic.json", CUBIC_NORM_ONE);
    let out = bin().args(["serre-check", "--json", "--spec"]).arg(&cubic).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let report = json_report(&out);
    assert_eq!(report["is_quotient"], Value::Null, "undefined under a trivial conjugation");
    assert_eq!(report["anisotropic"], Value::Bool(false));
    assert_eq!(report["fixed_dimension"], 2);
}

#[test]
fn serre_check_without_center_data_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "spin.json", SPIN_2_20);
    let out = bin().args(["serre-check", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn preset_directory_overlay_flips_a_lift() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        &dir,
        "a1.json",
        r#"{"factors": [{"family": "A", "rank": 1}], "lattice": {"preset": "sc"}}"#,
    );
    let presets = tempfile::tempdir().unwrap();
    std::fs::write(
        presets.path().join("sc.json"),
        r#"{"A1": {"generators": [["1", "0"]]}}"#,
    )
    .unwrap();

    let builtin = bin().args(["lift", "--json", "--mu", "1,0", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(builtin.status.code(), Some(0), "stderr: {}", stderr_str(&builtin));
    assert_eq!(json_report(&builtin)["lifts"], Value::Bool(false));

    let overridden = bin()
        .env("MT_ORACLE_PRESET_DIR", presets.path())
        .args(["lift", "--json", "--mu", "1,0", "--spec"])
        .arg(&spec)
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0), "stderr: {}", stderr_str(&overridden));
    assert_eq!(json_report(&overridden)["lifts"], Value::Bool(true));
}

#[test]
fn reports_echo_the_spec_for_reproducibility() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{
  "factors": [
    {
      "family": "D",
      "painted": [
        1
      ],
      "rank": 11
    }
  ],
  "lattice": {
    "preset": "sc"
  }
}"#;
    let spec = write_spec(&dir, "spin.json", text);
    let out = bin().args(["verdict", "--json", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = json_report(&out);
    let input: Value = serde_json::from_str(text).unwrap();
    assert_eq!(report["spec"], input, "the echoed spec must match the input");
}

#[test]
fn quiet_suppresses_human_lines() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "spin.json", SPIN_2_20);
    let out = bin().args(["verdict", "--quiet", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).is_empty());
}

#[test]
fn mu_of_the_wrong_length_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "spin.json", SPIN_2_20);
    let out = bin().args(["lift", "--mu", "1,0", "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn negative_and_fractional_mu_coordinates_parse() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "gspin.json", GSPIN_2_20);
    let mu = "1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2,-1/2";
    let out = bin().args(["lift", "--json", "--mu", mu, "--spec"]).arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let report = json_report(&out);
    assert_eq!(report["mu"][0], "1/2");
    assert_eq!(report["mu"][10], "-1/2");
}
