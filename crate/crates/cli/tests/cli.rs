//! End-to-end checks of the binary: exit codes, envelope shape, and DOT output.

use std::process::{Command, Output};

fn regneck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regneck"))
        .args(args)
        .env_remove("REGNECK_GUARD_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn regular_prints_chars_and_word() {
    let out = regneck(&["regular", "6", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[1,2,1,2]"));
    assert!(text.contains("0101101011"));
}

#[test]
fn regular_rejects_empty_necklace() {
    let out = regneck(&["regular", "0", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn regular_json_envelope_round_trips() {
    let out = regneck(&["regular", "8", "4", "--format", "json"]);
    assert!(out.status.success());
    let raw = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(raw.trim()).unwrap();
    assert_eq!(value["command"], "regular");
    assert_eq!(value["result"]["chars"], serde_json::json!([2, 2, 2, 2]));
    // byte-identical re-serialization
    assert_eq!(serde_json::to_string(&value).unwrap(), raw.trim());
}

#[test]
fn check_reports_predicates() {
    let out = regneck(&["check", "--chars", "3,0,3,0", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["result"]["regular"], false);
    assert_eq!(value["result"]["symmetric"], true);
    assert_eq!(value["result"]["rot_order"], 2);

    let out = regneck(&["check", "--word", "0011", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["result"]["balanced"], false);
    assert_eq!(value["result"]["regular"], false);
}

#[test]
fn check_input_validation() {
    assert_eq!(regneck(&["check"]).status.code(), Some(2));
    assert_eq!(
        regneck(&["check", "--chars", "1,x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        regneck(&["check", "--chars", "1,2", "--word", "01"]).status.code(),
        Some(2)
    );
    assert_eq!(regneck(&["check", "--word", "01a"]).status.code(), Some(2));
}

#[test]
fn pack_reports_cycles_and_writes_dot() {
    let dir = std::env::temp_dir().join("regneck-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let dot_path = dir.join("shift93.dot");
    let out = regneck(&[
        "pack",
        "9",
        "3",
        "--verify",
        "--dot",
        dot_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["result"]["k"], 3);
    assert_eq!(value["result"]["d"], 3);
    assert_eq!(value["result"]["disjoint"], true);
    assert_eq!(value["result"]["reverified"], true);
    assert_eq!(
        value["result"]["cycles"],
        serde_json::json!([[0, 3, 6], [2, 5, 8], [4, 7, 1]])
    );

    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.contains("digraph \"Shift(9,3)\""));
    assert!(dot.contains("[style=solid]"));
    assert!(dot.contains("[style=dashed]"));
    assert!(dot.contains("colorscheme=set19"));
    std::fs::remove_file(&dot_path).ok();
}

#[test]
fn pack_rejects_bad_stride() {
    assert_eq!(regneck(&["pack", "9", "9"]).status.code(), Some(2));
    assert_eq!(regneck(&["pack", "9", "1"]).status.code(), Some(2));
}

#[test]
fn oracle_nu0_is_tight_on_the_worked_example() {
    let out = regneck(&["oracle", "nu0", "9", "3", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["result"]["exact"], 3);
    assert_eq!(value["result"]["constructive"], 3);
    assert_eq!(value["result"]["tight"], true);
}

#[test]
fn oracle_guard_exceeded_exits_4() {
    let out = regneck(&["oracle", "nu0", "15", "4"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn guard_env_override_raises_limits() {
    let out = Command::new(env!("CARGO_BIN_EXE_regneck"))
        .args(["oracle", "nu0", "15", "4", "--format", "json"])
        .env("REGNECK_GUARD_N", "15")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let value: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert!(value["result"]["exact"].as_u64().unwrap() >= value["result"]["constructive"].as_u64().unwrap());
}

#[test]
fn sweeps_pass_at_small_scale() {
    for suite in ["regularity", "duality", "symmetry", "balance"] {
        let out = regneck(&["sweep", "--suite", suite, "--max-n", "9", "--format", "json"]);
        assert!(out.status.success(), "suite {suite}");
        let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(value["result"]["violations"], 0, "suite {suite}");
    }
    let out = regneck(&["sweep", "--suite", "shift", "--max-n", "16"]);
    assert!(out.status.success());
}

#[test]
fn sweep_with_zero_range_is_vacuous() {
    let out = regneck(&["sweep", "--suite", "regularity", "--max-n", "0", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["result"]["instances"], 0);
}

#[test]
fn unknown_arguments_exit_2() {
    assert_eq!(regneck(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(regneck(&["regular", "6"]).status.code(), Some(2));
}
