use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfplumb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn decompose_trefoil() {
    let v = ok_json(&["decompose", "1 1 1"]);
    assert_eq!(v["kind"], "trefoil_decomposition");
    assert_eq!(v["steps"].as_array().unwrap().len(), 1);
    assert_eq!(v["ribbon_twists"], 1);
    assert_eq!(v["genus"], 1);
}

#[test]
fn torus_three_eight_is_exact() {
    let v = ok_json(&["torus", "3", "8"]);
    assert_eq!(v["detector_n"], 8);
    assert_eq!(v["hironaka_max_plumbing"], 8);
    assert_eq!(v["verdict"], "exact");
}

#[test]
fn analyze_unknot_and_torus_flag() {
    let v = ok_json(&["analyze", "1 2"]);
    assert_eq!(v["invariants"]["genus"], 0);
    assert_eq!(
        v["alexander"]["burau"]["sparse"],
        serde_json::json!({"0": 1})
    );

    let v = ok_json(&["analyze", "--torus", "2", "5"]);
    assert_eq!(v["invariants"]["genus"], 2);
    assert_eq!(v["alexander"]["agree"], true);
}

#[test]
fn domain_errors_exit_two() {
    for args in [
        &["decompose", "1 2 1 2 1 2"][..],
        &["analyze", "1 x 2"],
        &["analyze", "1 3"],
        &["torus", "4", "6"],
        &["analyze", "2 2", "--strands", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
        assert_eq!(err["internal"], false);
        assert!(err["error"].is_string());
    }
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for k in 0..2 {
        let json = dir.path().join(format!("c{k}.json"));
        let svg = dir.path().join(format!("c{k}.svg"));
        let out = run(&[
            "chain",
            "--torus",
            "3",
            "7",
            "--json",
            p(&json),
            "--svg",
            p(&svg),
        ]);
        assert!(out.status.success());
        files.push((
            std::fs::read(&json).unwrap(),
            std::fs::read(&svg).unwrap(),
            out.stdout,
        ));
    }
    assert_eq!(files[0], files[1]);
    assert_eq!(files[0].0, files[0].2);
    assert!(String::from_utf8_lossy(&files[0].1).starts_with("<svg"));
}

#[test]
fn certificates_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["decompose", "1 2 1 2 1 2 1 2"][..],
        &["chain", "1 1 1 1 1"],
    ] {
        let path = dir.path().join("cert.json");
        let mut full = args.to_vec();
        full.extend(["--json", p(&path)]);
        ok_json(&full);
        let v = ok_json(&["verify", p(&path)]);
        assert_eq!(v["valid"], true);

        let mut cert: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
        cert["word"]["letters"][0] = Value::from(2);
        std::fs::write(&path, serde_json::to_vec(&cert).unwrap()).unwrap();
        assert_ne!(run(&["verify", p(&path)]).status.code(), Some(0));
    }
}

#[test]
fn batch_preserves_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("words.txt");
    std::fs::write(&path, "1 1 1\n1 2 1 2\n# comment\n1 1 1 1 1\n").unwrap();
    let out = run(&["bound", "--batch", p(&path)]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let inputs: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["input"].as_str().unwrap())
        .collect();
    assert_eq!(inputs, ["1 1 1", "1 2 1 2", "1 1 1 1 1"]);
}

#[test]
fn orbit_reports_rectangle_hits() {
    let v = ok_json(&["orbit", "--torus", "3", "8", "--power", "3"]);
    let orbit = v["orbit"].as_array().unwrap();
    assert_eq!(orbit.len(), 4);
    assert_eq!(orbit[3]["rectangle"], 3);
}

#[test]
fn selftest_with_small_corpus() {
    let out = run(&["selftest", "--max-crossings", "8"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let lines = String::from_utf8_lossy(&out.stderr);
    assert_eq!(lines.lines().filter(|l| l.starts_with("[PASS]")).count(), 8);
}
