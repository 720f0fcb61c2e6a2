use std::process::Command;

use icomb::cli::{emit, Format};
use icomb::report::RunReport;
use serde_json::Value;

fn icomb(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_icomb")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = icomb(args);
    assert_eq!(code, 0, "{args:?}: {err}{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn asm_count_three() {
    let v = json(&["asm", "count", "--n", "3"]);
    assert_eq!(v["command"], "asm count");
    assert_eq!(v["results"]["value"], 7);
    assert_eq!(v["checks"][0]["status"], "pass");
}

#[test]
fn identity_trivial_case() {
    let v = json(&["verify", "asm-dpp", "--n", "1", "--samples", "1"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn tsystem_ones() {
    let v = json(&["tsystem", "solve", "--k", "3", "--init", "ones"]);
    assert_eq!(v["results"]["value"], "8");
}

#[test]
fn refined_polynomial_n3() {
    let v = json(&["asm", "refined", "--n", "3", "--samples", "2"]);
    assert_eq!(v["results"]["value"]["display"], "x*y + y^3 + 2*y^2 + 2*y + 1");
}

#[test]
fn same_seed_same_bytes() {
    let args = ["sixv", "verify", "--n", "3", "--samples", "2", "--seed", "7"];
    let (_, a, _) = icomb(&args);
    let (_, b, _) = icomb(&args);
    assert_eq!(a, b);
    let (_, c, _) = icomb(&["sixv", "verify", "--n", "3", "--samples", "2", "--seed", "8"]);
    assert_eq!(serde_json::from_str::<Value>(&c).unwrap()["parameters"]["seed"], 8);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(icomb(&["asm", "count", "--n", "3", "--unknown"]).0, 2);
    assert_eq!(icomb(&["frobnicate"]).0, 2);
    assert_eq!(icomb(&["asm", "count", "--n", "9"]).0, 0);
    assert_eq!(icomb(&["sixv", "verify", "--n", "9", "--samples", "1"]).0, 2);
    assert_eq!(icomb(&["lorentzian", "commute", "--a", "0", "--aprime", "1"]).0, 2);
}

#[test]
fn failing_check_exits_one() {
    let mut r = RunReport::new("asm count");
    r.check("enumeration_matches_formula", false, serde_json::json!({ "n": 3 }));
    let mut out = Vec::new();
    assert_eq!(emit(&r, Format::Json, &mut out), 1);
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["checks"][0]["status"], "fail");
    assert_eq!(v["checks"][0]["details"]["n"], 3);
}

#[test]
fn files_as_input() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    std::fs::write(&m, r#"{"entries": [["1", "2"], ["3", "4"]]}"#).unwrap();
    let v = json(&["asm", "lambda-det", "--matrix", m.to_str().unwrap(), "--lambda", "-1"]);
    assert_eq!(v["results"]["value"], "-2");
    let q = dir.path().join("q.json");
    std::fs::write(&q, r#"{"n": 2, "arrows": [[1, 2]]}"#).unwrap();
    let v = json(&["cluster", "mutate", "--quiver", q.to_str().unwrap(), "--sequence", "1,2,1,2,1"]);
    let cluster = v["results"]["cluster"].as_array().unwrap();
    assert_eq!(cluster[0]["display"], "x2");
    assert_eq!(cluster[1]["display"], "x1");
    assert_eq!(icomb(&["cluster", "mutate", "--quiver", "/nonexistent.json", "--sequence", "1"]).0, 2);
}

#[test]
fn table_format() {
    let (code, out, _) = icomb(&["maps", "rn", "--n", "0", "--order", "3", "--format", "table"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("result.series") && l.contains(r#"["1","2","9","54"]"#)), "{out}");
    assert!(out.contains("elapsed_ms"));
}
