//! Exit-code and determinism contract for the command-line surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn oct_table_is_csv() {
    let out = run(&["oct", "table"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with(",e0,e1,e2,e3,e4,e5,e6,e7\n"));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn passing_checks_exit_zero() {
    for args in [
        vec!["f4", "roots"],
        vec!["f4", "table", "--verify"],
        vec!["f4", "project", "--which", "p34", "--ell", "12", "--c", "11,12"],
        vec!["orbit", "rep", "--which", "X34"],
        vec!["orbit", "lift", "--which", "X4"],
        vec!["uniton", "build", "--form", "iii", "--ell", "12", "--c", "11,12"],
        vec!["uniton", "example53"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}: {:?}", out);
    }
}

#[test]
fn rep_report_carries_the_nilorder() {
    let out = run(&["orbit", "rep", "--which", "X34"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let nilorder = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == "nilorder")
        .unwrap();
    assert_eq!(nilorder["actual"], "5");
    assert_eq!(nilorder["pass"], true);
}

#[test]
fn malformed_inputs_exit_three() {
    let out = run(&["uniton", "check", "--file", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(3));

    let dir = std::env::temp_dir().join("cayley_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{\"s\": 1").unwrap();
    let out = run(&["uniton", "check", "--file", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["jordan", "decompose", "--x", "e9", "--y", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_checks_exit_one() {
    let dir = std::env::temp_dir().join("cayley_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad_lattice.json");
    // a chain that is not monotone
    std::fs::write(
        &path,
        r#"{"s": 0, "r": 2, "pieces": [
            {"exp": 0, "support": [1, 2], "w0": "empty"},
            {"exp": 1, "support": [3], "w0": "empty"}
        ]}"#,
    )
    .unwrap();
    let out = run(&["uniton", "check", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = run(&["jordan", "chi", "--x", "e1", "--y", "e2", "--seed", "5"]);
    let b = run(&["jordan", "chi", "--x", "e1", "--y", "e2", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let a = run(&["jordan", "nilorder", "--samples", "3", "--seed", "9"]);
    let b = run(&["jordan", "nilorder", "--samples", "3", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}
