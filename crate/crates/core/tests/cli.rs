//! End-to-end tests of the cnum binary: exit codes, report contents, and
//! deterministic output.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cnum"))
}

fn workdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cnum-cli-{}-{}", std::process::id(), name));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn chordal_reports_peo_or_hole() {
    let dir = workdir("chordal");
    let k4 = dir.join("k4.graph");
    fs::write(&k4, "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    let out = bin().arg("chordal").arg(&k4).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("chordal: true"));
    assert!(stdout(&out).contains("peo: "));

    let c4 = dir.join("c4.graph");
    fs::write(&c4, "4 4\n1 2\n2 3\n3 4\n1 4\n").unwrap();
    let out = bin().arg("chordal").arg(&c4).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "a hole is a finding, not a failure");
    assert!(stdout(&out).contains("chordal: false"));
    assert!(stdout(&out).contains("hole: 1,2,3,4"));
}

#[test]
fn witness_bound_complete_verify_pipeline() {
    let dir = workdir("pipeline");
    let out = bin().args(["witness", "gn", "2", "--out"]).arg(&dir).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let graph = dir.join("gn2.graph");
    let matrix = dir.join("gn2.matrix");
    assert!(graph.exists() && matrix.exists());

    let out = bin().arg("bound").arg(&graph).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("bracket: [2, 2]"), "{}", stdout(&out));

    let out = bin().arg("complete").arg(&matrix).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("final_bound: 2"), "{text}");
    assert!(text.contains("all_certified: true"), "{text}");

    let out = bin()
        .arg("verify")
        .arg(&matrix)
        .args(["--placements", "1,2,3,4;5,6,7,8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("verified: true"));
}

#[test]
fn plan_json_output_is_byte_identical_across_runs() {
    let dir = workdir("json");
    let c5 = dir.join("c5.graph");
    fs::write(&c5, "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n").unwrap();
    let run = || bin().arg("plan").arg(&c5).arg("--json").output().unwrap();
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let parsed: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(parsed["results"]["final_bound"], serde_json::json!(1));
    assert_eq!(parsed["tool"], serde_json::json!("cnum"));
    assert!(parsed["inputs"][0]["sha256"].as_str().unwrap().len() == 64);
}

#[test]
fn timing_goes_to_stderr_only() {
    let dir = workdir("timing");
    let k3 = dir.join("k3.graph");
    fs::write(&k3, "3 3\n1 2\n1 3\n2 3\n").unwrap();
    let out = bin().arg("cliques").arg(&k3).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("elapsed_ms"));
    assert!(stderr(&out).contains("elapsed_ms="));
}

#[test]
fn check_failure_exits_one() {
    let dir = workdir("check");
    let bad = dir.join("bad.matrix");
    // |offdiag| = 3 > 1 makes the {1,2} clique indefinite
    fs::write(&bad, "2\n1 3\n3 1\n").unwrap();
    let out = bin().arg("check").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("partial_positive: false"), "{text}");
    assert!(text.contains("failing_clique: 1,2"), "{text}");
}

#[test]
fn input_errors_exit_two() {
    let dir = workdir("errors");
    let out = bin().arg("chordal").arg(dir.join("missing.graph")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));

    let mangled = dir.join("mangled.graph");
    fs::write(&mangled, "4 banana\n").unwrap();
    let out = bin().arg("chordal").arg(&mangled).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let c4 = dir.join("c4.graph");
    fs::write(&c4, "4 4\n1 2\n2 3\n3 4\n1 4\n").unwrap();
    let out = bin().arg("plan").arg(&c4).args(["--strategy", "fast"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().arg("no-such-command").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Usage"));
}
