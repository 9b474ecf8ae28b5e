use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn permchan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permchan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn count_cyclic_four_as_json() {
    let out = permchan(&["count", "--group", "cyclic", "--n", "4", "--format", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["N_c"]["value"], "6");
    assert_eq!(json["N_q"]["value"], "16");
    assert_eq!(json["N_a"]["value"], "70");
}

#[test]
fn count_symmetric_three_as_csv() {
    let out = permchan(&[
        "count",
        "--group",
        "symmetric",
        "--n",
        "3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("quantity,value,method\n"));
    assert!(text.contains("N_c,4,"));
    assert!(text.contains("N_q,6,"));
    assert!(text.contains("N_a,20,"));
}

#[test]
fn count_from_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trivial.txt");
    std::fs::write(&path, "# identity only\n0 1 2\n").unwrap();
    let out = permchan(&[
        "count",
        "--group-file",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["N_c"]["value"], "8");
    assert_eq!(json["N_q"]["value"], "8");
    assert_eq!(json["N_a"]["value"], "64");
}

#[test]
fn representatives_of_four_bit_necklaces() {
    let out = permchan(&["representatives", "--group", "cyclic", "--n", "4"]);
    assert!(out.status.success());
    let reps: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(reps, ["0000", "0001", "0011", "0101", "0111", "1111"]);
}

#[test]
fn encode_writes_the_basis_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    let out = permchan(&[
        "encode",
        "--group",
        "cyclic",
        "--n",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("m: [6,3,4,3]"));
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["entries"].as_array().unwrap().len(), 16);
    assert_eq!(json["multiplicities"], serde_json::json!([6, 3, 4, 3]));
}

#[test]
fn verify_passes_on_small_groups() {
    for group in ["cyclic", "dihedral", "symmetric"] {
        let out = permchan(&["verify", "--group", group, "--n", "4"]);
        assert!(out.status.success(), "{group}: {}", stdout(&out));
        let text = stdout(&out);
        assert!(!text.contains("FAIL"), "{text}");
        assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    }
}

#[test]
fn simulate_reports_zero_failures() {
    let out = permchan(&[
        "simulate",
        "--group",
        "dihedral",
        "--n",
        "4",
        "--mode",
        "classical",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failures"));
    let out = permchan(&["simulate", "--group", "cyclic", "--n", "5", "--seed", "7"]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn scaling_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scaling.csv");
    let out = permchan(&[
        "scaling",
        "--group",
        "symmetric",
        "--n-max",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(Path::new(&path)).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,exact,asymptotic,ratio"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    assert!(rows[3].starts_with("4,5,"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["count", "--group", "cyclic", "--n", "0"][..],
        &["count", "--group", "cyclic"][..],
        &["count", "--group", "octahedral", "--n", "3"][..],
        &["scaling", "--group", "cyclic", "--mode", "quantum"][..],
        &["count", "--group-file", "/nonexistent/group.txt"][..],
    ] {
        let out = permchan(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn resource_bounds_exit_with_three() {
    let out = permchan(&["encode", "--group", "cyclic", "--n", "30"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("exceeds limit"));
    let out = permchan(&["verify", "--group", "symmetric", "--n", "8"]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
}
