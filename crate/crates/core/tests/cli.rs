use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cherednik(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherednik"))
        .args(args)
        .env("CHEREDNIK_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn roots_d4() {
    let dir = tempfile::tempdir().unwrap();
    let out = cherednik(dir.path(), &["roots", "--group", "D4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let rs = &r["outputs"]["root_system"];
    assert_eq!(rs["positive_roots"], 12);
    assert_eq!(rs["degrees"], serde_json::json!([6, 4, 4, 2]));
    assert_eq!(rs["h"], 6);
}

#[test]
fn singular_a1_verified() {
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("fam.json");
    let args = ["singular", "--group", "A1", "--beta", "1", "--m", "1", "--verify", "--format", "json", "--json"];
    let mut argv: Vec<&str> = args.to_vec();
    argv.push(fam.to_str().unwrap());
    let out = cherednik(dir.path(), &argv);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["outputs"]["singular"], true);
    assert_eq!(r["outputs"]["degree"], 3);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&fam).unwrap()).unwrap();
    let back = cherednik::serial::family_from_json(&written).unwrap();
    let x = cherednik::MultiPoly::var(2, 0);
    let y = cherednik::MultiPoly::var(2, 1);
    let cube = (&x - &y).pow(3);
    assert!(back.q[0].ratio_to(&cube).is_some());
}

#[test]
fn frame_cache_hits_on_second_run() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("frame.json");
    let first = cherednik(dir.path(), &["saito", "--group", "B3", "--format", "json", "--out", out_file.to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(json(&first)["cache_hits"], 0);
    let second = cherednik(dir.path(), &["saito", "--group", "B3", "--format", "json"]);
    let r = json(&second);
    assert_eq!(r["cache_hits"], 1);
    assert_eq!(r["outputs"]["frame"], json(&first)["outputs"]["frame"]);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    assert_eq!(written["degrees"], serde_json::json!([6, 4, 2]));
}

#[test]
fn verify_reports_nonsingular() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("x1.json");
    std::fs::write(&poly, r#"{"vars": 2, "field": {"kind": "Q", "param": 0}, "terms": [{"exp": [1, 0], "coef": "1"}]}"#)
        .unwrap();
    let out = cherednik(dir.path(), &["verify", "--group", "B2", "--c", "1/3", "--poly", poly.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["outputs"]["singular"], false);
    let residuals = &r["outputs"]["certificates"][0]["residuals"];
    assert_eq!(residuals[0]["terms"][0]["coef"], "-1/3");

    let out = cherednik(dir.path(), &["verify", "--group", "B2", "--c", "1/4", "--poly", poly.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_accepts_singular_list() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("p.json");
    let x = cherednik::MultiPoly::var(2, 0);
    let y = cherednik::MultiPoly::var(2, 1);
    let list = Value::Array(vec![cherednik::serial::poly_to_json(&x), cherednik::serial::poly_to_json(&y)]);
    std::fs::write(&poly, list.to_string()).unwrap();
    let out = cherednik(dir.path(), &["verify", "--group", "B2", "--c", "1/4", "--poly", poly.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn complex_and_residue() {
    let dir = tempfile::tempdir().unwrap();
    let out = cherednik(dir.path(), &["complex", "--n", "2", "--ell", "3", "--q", "1", "--s", "0", "--m", "1", "--verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["outputs"]["degree"], 5);
    assert_eq!(r["outputs"]["polynomials"][0]["field"]["kind"], "cyclotomic");

    let out = cherednik(dir.path(), &["residue", "--kind", "B", "--rank", "3", "--s", "2", "--m", "1", "--verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["outputs"]["degree"], 10);
    assert_eq!(r["outputs"]["nu"], "3/2");
}

#[test]
fn periods_d4() {
    let dir = tempfile::tempdir().unwrap();
    let out = cherednik(dir.path(), &["periods", "--group", "D4", "--nu", "1/2", "--degree", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["outputs"]["dimension"], 2);
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["frobnicate"],
        vec!["roots", "--group", "E9"],
        vec!["periods", "--group", "A2", "--nu", "1/0", "--degree", "2"],
        vec!["singular", "--group", "B2", "--beta", "3"],
        vec!["residue", "--kind", "A", "--rank", "2", "--s", "5"],
        vec!["complex", "--n", "2", "--ell", "3", "--q", "3"],
        vec!["verify", "--group", "B2", "--c", "1/4", "--poly", "/nonexistent/p.json"],
    ] {
        let out = cherednik(dir.path(), &args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = cherednik(dir.path(), &["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("selftest"));
}

#[test]
fn report_is_deterministic() {
    let run = |dir: &Path| {
        let mut r = json(&cherednik(dir, &["singular", "--group", "D4", "--beta", "2", "--m", "1", "--verify", "--format", "json"]));
        r.as_object_mut().unwrap().remove("seconds");
        r.as_object_mut().unwrap().remove("cache_hits");
        r
    };
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path()), run(dir.path()));
}

#[test]
fn library_entry_point() {
    let (report, code) = cherednik::cli::run(["cherednik", "roots", "--group", "A3"]);
    assert_eq!(code, 0);
    assert_eq!(report.outputs["root_system"]["positive_roots"], 6);
    assert!(report.render().contains("positive roots"));
}
