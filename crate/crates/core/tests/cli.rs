//! The `majq` binary end to end.

use std::io::Write;
use std::process::{Command, Stdio};

fn majq(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_majq")).args(args).output().expect("run majq");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn suite_reports_are_byte_identical() {
    let (code, a) = majq(&["run-suite", "properties", "--seed", "5", "--json"]);
    assert_eq!(code, 0, "{a}");
    let (_, b) = majq(&["run-suite", "properties", "--seed", "5", "--json"]);
    assert_eq!(a, b);
    let last: serde_json::Value = serde_json::from_str(a.lines().last().unwrap()).unwrap();
    assert_eq!(last["seed"], 5);
    assert_eq!(last["failed"], 0);
}

#[test]
fn solve_graph_json() {
    let (code, out) = majq(&["solve-graph", "path:9", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["value"], 7);
    assert_eq!(v["n"], 9);
}

#[test]
fn thread_count_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_majq"))
        .args(["construct", "minedge", "9", "--emit", "verify"])
        .env("MAJQ_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"pass\":true"));
}

#[test]
fn interactive_play_over_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_majq"))
        .args(["play", "treelemma", "path:4"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0 1\n1 2\n2 3\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("weights").count(), 3, "{text}");
    assert!(text.contains("OUTCOME"));
}

#[test]
fn path_table_tsv() {
    let (code, out) = majq(&["nondet", "path-table", "--odd-n", "9..11"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n\tm_nd\tgap\n9\t5\t4\n11\t7\t4\n");
}

#[test]
fn bad_input_is_reported() {
    let (code, out) = majq(&["solve-weighted", "3,x"]);
    assert_eq!(code, 2, "{out}");
    let (code, out) = majq(&["solve-graph", "/nonexistent/graph.txt"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("error:"));
}
