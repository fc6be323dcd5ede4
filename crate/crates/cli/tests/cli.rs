use std::process::{Command, Output};

use serde_json::Value;

fn sh3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sh3")).args(args).env_remove("SH3_MAX_DEGREE").output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn str_values() {
    for (expr, value) in [("id", "-1/6*S1 + 1/4*S2"), ("Q1", "1/6*S1 + 1/4*S2"), ("L0", "0")] {
        let out = sh3(&["str", expr]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(report(&out)["result"]["value"], value);
    }
    let out = sh3(&["str", "x*yp - yp*x", "--params", "0,4"]);
    assert_eq!(report(&out)["result"]["value"], "3");
}

#[test]
fn reports_carry_the_command_line() {
    let r = report(&sh3(&["center", "--degree", "2"]));
    assert_eq!(r["format_version"], 1);
    assert_eq!(r["command"], "center");
    assert_eq!(r["argv"][1], "center");
    assert_eq!(r["result"]["basis"], serde_json::json!(["Q0 + Q1 + Q2"]));
}

#[test]
fn commutant_codimension() {
    let r = report(&sh3(&["commutant", "--degree", "2"]));
    assert_eq!(r["result"]["codimension"], 2);
    assert_eq!(r["result"]["stabilized"], true);
}

#[test]
fn gram_csv_is_square() {
    let out = sh3(&["gram", "--degree", "1", "--format", "csv", "--params", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(out.stdout.as_slice());
    let width = reader.headers().unwrap().len();
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len() + 1, width);
    assert_eq!(rows.len(), 30);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(sh3(&["str", "x*("]).status.code(), Some(64));
    assert_eq!(sh3(&["gram", "--degree", "9"]).status.code(), Some(64));
    assert_eq!(sh3(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(sh3(&["certificate"]).status.code(), Some(64));
    let out = Command::new(env!("CARGO_BIN_EXE_sh3"))
        .args(["center", "--degree", "3"])
        .env("SH3_MAX_DEGREE", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn certificate_written_and_replayed() {
    let dir = std::env::temp_dir().join(format!("sh3-cert-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    let p = path.to_str().unwrap();
    let out = sh3(&["certificate", "--seed", "42", "--random-element-degree", "3", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["summary"]["final_element"], "Q0 + Q1 + Q2");
    assert_eq!(sh3(&["certificate", "--replay", p]).status.code(), Some(0));

    let mut cert: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    cert["final_element"] = Value::String("x".into());
    std::fs::write(&path, cert.to_string()).unwrap();
    assert_eq!(sh3(&["certificate", "--replay", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn certificates_are_deterministic_under_a_seed() {
    let a = report(&sh3(&["certificate", "--seed", "7", "--random-element-degree", "2"]));
    let b = report(&sh3(&["certificate", "--seed", "7", "--random-element-degree", "2"]));
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn dunkl_check_passes() {
    let out = sh3(&["dunkl-check", "--nu", "1/2", "--poly-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["failures"], serde_json::json!([]));
}

#[test]
fn verify_single_suites() {
    for suite in ["core", "sl2"] {
        assert_eq!(sh3(&["verify", "--suite", suite, "--max-degree", "3"]).status.code(), Some(0));
    }
}
