use serde_json::Value;
use std::process::{Command, Output};

const K4: &str = "C~";
const OCTAHEDRON: &str = "E|tw";

fn mpg4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpg4")).args(args).env_remove("MPG4_WORKERS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn poly_at_four_on_k4_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.g6");
    std::fs::write(&path, format!("{K4}\n")).unwrap();
    let o = mpg4(&["poly", path.to_str().unwrap(), "--at", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "24");
}

#[test]
fn poly_coefficients_inline() {
    let o = mpg4(&["poly", OCTAHEDRON, "--format", "json", "--no-timestamp"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["coefficients"][0], "0");
    assert!(v.get("generated_at_unix").is_none());
    let o = mpg4(&["poly", OCTAHEDRON, "--at", "4"]);
    assert_eq!(stdout(&o).trim(), "96");
}

#[test]
fn golden_point_is_exact() {
    // f(K4, tau^2) = -1 exactly
    let o = mpg4(&["poly", K4, "--at", "tau2", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["value"]["a"], "-1");
    assert_eq!(v["value"]["b"], "0");
}

#[test]
fn fwf_from_sequence_exports_order_nine() {
    let o = mpg4(&["fwf", "from-seq", "ygbrybgyg", "--export", "dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("graph "));
    assert!(dot.contains("8 [label"));
    assert!(!dot.contains("9 [label"));
    let o = mpg4(&["fwf", "from-seq", "ygbrybgyg", "--format", "json"]);
    assert_eq!(json(&o)["graph"]["order"], 9);
}

#[test]
fn fwf_round_trip_through_check() {
    let g6 = stdout(&mpg4(&["fwf", "from-seq", "ygbrybyg"]));
    let o = mpg4(&["fwf", "check", g6.trim(), "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["fwf"], true);
    assert_eq!(v["fwf22"], true);
    assert_eq!(v["color_sequence"], "ygbrybyg");
    let o = mpg4(&["fwf", "check", OCTAHEDRON]);
    assert_eq!(stdout(&o).trim(), "not fwf");
}

#[test]
fn partitions_and_uniqueness() {
    let o = mpg4(&["partitions", OCTAHEDRON]);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert_eq!(stdout(&mpg4(&["unique", OCTAHEDRON])).trim(), "false");
    assert_eq!(stdout(&mpg4(&["unique", K4])).trim(), "true");
}

#[test]
fn enumerate_saves_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = mpg4(&["-q", "enumerate", "--order", "9", "--min-degree", "4", "--out", d]);
    assert!(first.status.success());
    assert_eq!(stdout(&first).lines().count(), 5);
    assert!(dir.path().join("mpg-n9-d4.g6").is_file());
    let again = mpg4(&["-q", "enumerate", "--order", "9", "--min-degree", "4", "--out", d, "--resume"]);
    assert_eq!(stdout(&again), stdout(&first));
    let certs = |strategy: &str| {
        let o = mpg4(&["-q", "enumerate", "--order", "9", "--min-degree", "4", "--strategy", strategy, "--format", "json"]);
        json(&o)["certificates"].clone()
    };
    assert_eq!(certs("flips"), certs("closure"));
}

#[test]
fn wheel_round_trip() {
    let grown = stdout(&mpg4(&["wheel", "extend", OCTAHEDRON, "--site", "face:0,1,2"]));
    let o = mpg4(&["wheel", "contract", grown.trim(), "--vertex", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), OCTAHEDRON);
    let o = mpg4(&["wheel", "reduce", OCTAHEDRON, "--format", "json"]);
    assert_eq!(json(&o)["kinds"][0], 4);
    let o = mpg4(&["wheel", "contract", OCTAHEDRON, "--vertex", "0", "--colored", "--all", "--format", "json"]);
    assert!(!json(&o)["contractions"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(mpg4(&["nonsense"]).status.code(), Some(1));
    assert_eq!(mpg4(&["poly"]).status.code(), Some(1));
    assert_eq!(mpg4(&["poly", "not graph6 !!"]).status.code(), Some(1));
    assert_eq!(mpg4(&["wheel", "extend", K4, "--site", "path:1"]).status.code(), Some(1));
    assert_eq!(mpg4(&["verify", "table5.1", "--workers", "0"]).status.code(), Some(1));
    let o = mpg4(&["enumerate", "--order", "20"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
    assert_eq!(mpg4(&["--help"]).status.code(), Some(0));
}

#[test]
fn computation_errors_exit_two() {
    // the octahedron's 4-wheel has two admissible pairs
    let o = mpg4(&["wheel", "contract", OCTAHEDRON, "--vertex", "0", "--choice", "99"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_table_reports_mismatches_but_succeeds() {
    let a = mpg4(&["-q", "verify", "table5.1", "--no-timestamp"]);
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["command"], "verify table5.1");
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 6);
    let computed: Vec<u64> = reports.iter().map(|r| r["computed"].as_u64().unwrap()).collect();
    assert_eq!(computed[..4], [1, 1, 2, 5]);
    assert_eq!(v["mismatch_count"], reports.iter().filter(|r| r["status"] == "mismatch").count());
    // byte-identical reruns without the timestamp
    let b = mpg4(&["-q", "verify", "table5.1", "--no-timestamp", "--workers", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("out.txt");
    let o = mpg4(&["poly", K4, "--at", "5", "-o", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(p).unwrap().trim(), "120");
}
