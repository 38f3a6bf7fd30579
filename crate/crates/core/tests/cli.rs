use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lagdr(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lagdr"))
        .args(args)
        .current_dir(dir)
        .env_remove("LAGDR_CACHE_DIR")
        .output()
        .expect("lagdr runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn gen_curve(dir: &Path, poly: &str, weights: &str, name: &str) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let out = lagdr(&["variety", "gen", "--family", "curve", "--poly", poly, "--weights", weights, "--out", &path], dir);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn reproduce_passes_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = lagdr(&["--no-timings", "reproduce", "lemma-h1", "--k", "2"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["verdict"]["status"], "pass");
    assert_eq!(report["result"]["rigidity"]["vanishes_up_to_bound"], true);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--no-timings", "--workers", "1", "reproduce", "swallowtail-rigid"];
    let a = lagdr(&args, dir.path());
    let b = lagdr(&args, dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cusp_cohomology_and_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let cusp = gen_curve(dir.path(), "p^2 - q^3", "q=2,p=3", "cusp.json");
    let report = dir.path().join("h1.json");
    let out = lagdr(
        &["--no-timings", "--report", report.to_str().unwrap(), "cohomology", "--variety", &cusp, "--p", "1"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(out.stdout.is_empty());
    let total: u64 = saved["result"]["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["dim_h"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 2);
}

#[test]
fn degree_bound_zero_warns() {
    let dir = tempfile::tempdir().unwrap();
    let cusp = gen_curve(dir.path(), "p^2 - q^3", "q=2,p=3", "cusp.json");
    let out = lagdr(&["cohomology", "--variety", &cusp, "--max-degree", "0"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate"));
}

#[test]
fn non_involutive_ideal_fails_the_check() {
    let dir = tempfile::tempdir().unwrap();
    let cusp = gen_curve(dir.path(), "p^2 - q^3", "q=2,p=3", "cusp.json");
    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&cusp).unwrap()).unwrap();
    // ⟨q, p⟩ is the origin, not lagrangian: {p, q} = 1
    file["generators"] = serde_json::json!(["q", "p"]);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, file.to_string()).unwrap();
    let out = lagdr(&["check", "involutivity", "--variety", bad.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["result"]["involutive"], false);

    let out = lagdr(&["check", "involutivity", "--variety", &cusp], dir.path());
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    let out = lagdr(&["cohomology", "--variety", junk.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let out = lagdr(&["--workers", "0", "reproduce", "lemma-h1"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cache_dir_stores_swallowtails() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_lagdr"))
            .args(["variety", "gen", "--family", "swallowtail", "--n", "2", "--k", "1"])
            .env("LAGDR_CACHE_DIR", &cache)
            .output()
            .unwrap()
    };
    assert_eq!(json(&run())["result"]["from_cache"], false);
    assert!(cache.join("swallowtail-2-1-kernel.json").exists());
    assert_eq!(json(&run())["result"]["from_cache"], true);
}

#[test]
fn table_format_is_plain_text() {
    let dir = tempfile::tempdir().unwrap();
    let out = lagdr(&["--format", "table", "--no-timings", "reproduce", "cm-check", "--k", "1"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(serde_json::from_str::<Value>(&text).is_err());
    assert!(text.contains("pass"));
}
