// SPDX-License-Identifier: Apache-2.0

//! The `whapar` binary: exit codes, headline output and the JSON report.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures")).join(name).display().to_string()
}

fn whapar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whapar")).args(args).env("WHAPAR_THREADS", "2").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn check_passes_on_the_sweedler_pair() {
    let o = whapar(&["check", &fixture("sweedler_pair.json")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).ends_with("status: pass\n"));
}

#[test]
fn check_prints_a_witness_for_the_broken_fixture() {
    let o = whapar(&["check", &fixture("broken.json")]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("FAIL weak-hopf.ii.counit.left"), "{out}");
    assert!(out.contains("witness indices="), "{out}");
}

#[test]
fn parse_errors_exit_2_with_a_location() {
    let o = whapar(&["check", &fixture("malformed.json")]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("malformed.json:5:"), "{}", stdout(&o));
    let o = whapar(&["check", &fixture("z2_missing_composite.groupoid.json")]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("missing composition"));
    let o = whapar(&["check", &fixture("no_such_file.json")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn hpar_headlines() {
    let o = whapar(&["hpar", &fixture("z2.groupoid.json"), "--oracle"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("dim=3, oracle=3, certified\n"), "{}", stdout(&o));
    let o = whapar(&["hpar", &fixture("trivial.groupoid.json")]);
    assert!(stdout(&o).starts_with("dim=1"));
    let o = whapar(&["hpar", &fixture("z3.groupoid.json"), "--oracle"]);
    assert!(stdout(&o).starts_with("dim=8, oracle=8"));
}

#[test]
fn non_stabilization_exits_3_with_the_trajectory() {
    let o = whapar(&["hpar", &fixture("sweedler_pair.json"), "--json"]);
    assert_eq!(code(&o), 3);
    let r = json(&o);
    assert_eq!(r["status"], "not_stabilized");
    assert_eq!(r["facts"]["trajectory"], serde_json::json!([8, 57, 244, 1124, 5676]));
    let o = whapar(&["hpar", &fixture("z3.groupoid.json"), "--max-degree", "2"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("trajectory"));
}

#[test]
fn qisg_skips_the_sweedler_pair() {
    let o = whapar(&["qisg", &fixture("sweedler_pair.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("skipped: not cocommutative\n"));
    let o = whapar(&["qisg", &fixture("z2.groupoid.json")]);
    assert_eq!(code(&o), 0);
}

#[test]
fn algebroid_smash_and_parrep_pass_on_the_fixtures() {
    for args in [
        ["algebroid", "z2.groupoid.json"],
        ["smash", "z2_dual.action.json"],
        ["smash", "sweedler_block.action.json"],
        ["parrep", "sweedler_block.rep.json"],
        ["parrep", "sweedler_block.action.json"],
    ] {
        let o = whapar(&[args[0], &fixture(args[1])]);
        assert_eq!(code(&o), 0, "{args:?}: {}", stdout(&o));
    }
    let o = whapar(&["parrep", &fixture("sweedler_both_units.rep.json")]);
    assert_eq!(code(&o), 1);
}

#[test]
fn json_reports_are_identical_apart_from_timing() {
    let args = ["algebroid", &fixture("z3.groupoid.json"), "--json", "--seed", "7"];
    let strip = |o: &Output| {
        let mut v = json(o);
        assert!(v["elapsed_ms"].is_u64());
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string(&v).unwrap()
    };
    let (a, b) = (whapar(&args), whapar(&args));
    assert_eq!(strip(&a), strip(&b));
    let r = json(&a);
    assert_eq!(r["seed"], 7);
    assert_eq!(r["tool"], "whapar");
    assert_eq!(r["facts"]["certified"], true);
    assert_eq!(r["input_sha256"].as_str().map(str::len), Some(64));
}

#[test]
fn exhaustive_flag_is_recorded() {
    let o = whapar(&["check", &fixture("z3.groupoid.json"), "--json", "--exhaustive"]);
    assert_eq!(json(&o)["exhaustive"], true);
}
