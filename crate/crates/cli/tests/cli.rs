use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use striclcs::lcs::{contains_substring, is_subsequence};
use striclcs::solver::brute_force;

fn striclcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_striclcs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn record(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{e}: {text}"))
}

#[test]
fn solve_running_example_with_witness() {
    let out = striclcs(&[
        "solve",
        "--a",
        "bcdababcb",
        "--b",
        "cbacbaaba",
        "--p",
        "abb",
        "--witness",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = record(&out);
    let truth = brute_force(b"bcdababcb", b"cbacbaaba", b"abb").unwrap();
    assert_eq!(v["length"].as_i64(), Some(truth.length));
    let w = v["witness"].as_str().unwrap().as_bytes();
    assert_eq!(w.len() as i64, truth.length);
    assert!(contains_substring(w, b"abb"));
    assert!(is_subsequence(w, b"bcdababcb") && is_subsequence(w, b"cbacbaaba"));
    for field in [
        "ell",
        "cells_allocated",
        "quadratic_cells",
        "elapsed_ns",
        "algo",
        "pair",
    ] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
}

#[test]
fn empty_pattern_and_bottom() {
    let out = striclcs(&[
        "solve", "--a", "abc", "--b", "abc", "--p", "", "--format", "json",
    ]);
    assert!(out.status.success());
    assert_eq!(record(&out)["length"], 3);

    let out = striclcs(&[
        "solve", "--a", "abc", "--b", "abc", "--p", "xyz", "--format", "json",
    ]);
    assert!(out.status.success(), "bottom is not an error");
    assert_eq!(record(&out)["length"], -1);
}

#[test]
fn algorithms_selectable() {
    for algo in ["space-efficient", "deorowicz", "brute"] {
        let out = striclcs(&[
            "solve",
            "--a",
            "bcdababcb",
            "--b",
            "cbacbaaba",
            "--p",
            "abb",
            "--algo",
            algo,
            "--format",
            "json",
        ]);
        assert!(out.status.success());
        let v = record(&out);
        assert_eq!(v["length"], 5);
        assert_eq!(v["algo"], algo);
    }
}

#[test]
fn structured_output_is_reproducible() {
    let args = [
        "solve",
        "--a",
        "bcdababcb",
        "--b",
        "cbacbaaba",
        "--p",
        "ab",
        "--witness",
        "--no-timing",
        "--format",
        "json",
    ];
    assert_eq!(striclcs(&args).stdout, striclcs(&args).stdout);
}

#[test]
fn reads_stdin_and_files() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_striclcs"))
        .args(["solve", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"bcdababcb\ncbacbaaba\nabb\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(record(&out)["length"], 5);

    let dir = std::env::temp_dir().join(format!("striclcs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.txt"), dir.join("b.txt"));
    std::fs::write(&a, "bcdababcb\n").unwrap();
    std::fs::write(&b, "cbacbaaba\r\n").unwrap();
    let out = striclcs(&[
        "solve",
        "--a-file",
        a.to_str().unwrap(),
        "--b-file",
        b.to_str().unwrap(),
        "--p",
        "abb",
        "--format",
        "json",
    ]);
    std::fs::remove_dir_all(&dir).ok();
    assert!(out.status.success());
    assert_eq!(record(&out)["length"], 5);
}

#[test]
fn input_errors_fail() {
    assert!(!striclcs(&["solve", "--a", "abc"]).status.success());
    assert!(
        !striclcs(&["solve", "--a-file", "/definitely/missing", "--b", "x"])
            .status
            .success()
    );
    assert!(
        !striclcs(&["solve", "--a", "a", "--b", "b", "--algo", "fastest"])
            .status
            .success()
    );
}

#[test]
fn bench_flags() {
    let out = striclcs(&["bench", "--sizes", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = striclcs(&[
        "bench",
        "--sizes",
        "300,600",
        "--mutations",
        "5",
        "--sigma",
        "4",
        "--reps",
        "1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    for row in &lines[..2] {
        let n = row["n"].as_u64().unwrap();
        assert!(row["ell"].as_u64().unwrap() + 5 >= n);
        assert!(row["cells_allocated"].as_u64().unwrap() <= 50 * n);
    }
    assert!(lines[2]["slope"].is_number());
}

#[test]
fn selftest_exit_status() {
    let out = striclcs(&["selftest", "--cases", "0", "--frontier-pairs", "0"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok"));

    let out = striclcs(&[
        "selftest",
        "--cases",
        "300",
        "--frontier-pairs",
        "10",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());

    let out = striclcs(&["selftest", "--cases", "300", "--inject-fault"]);
    assert!(!out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAILED") && text.contains("A = "));
}

#[test]
fn dump_table_layout() {
    let out = striclcs(&["dump-table", "--a", "bcdababcb", "--b", "cbacbaaba"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 2 + 5);
    assert!(rows[2].contains("2 1 1 1 1"));
    assert!(text.contains('∞') && text.contains('·'));
}
