//! End-to-end runs of the `halfder` binary.

use std::process::Command;

use serde_json::Value;

fn run(args: &str) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_halfder"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &str) -> (i32, Value, String) {
    let (code, stdout, _) = run(&format!("{args} --format json"));
    let v: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args}: {e}\n{stdout}"));
    (code, v, stdout)
}

#[test]
fn virasoro_solve_report() {
    let (code, v, _) = json("derive-solve --algebra virasoro --delta 1/2 --window 8 --shift 2");
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["result"]["dimension"], 1);
    assert_eq!(v["result"]["trivial_only"], true);
    assert_eq!(v["result"]["stable"], true);
}

#[test]
fn witt_solve_and_raw_flag() {
    let (_, v, _) = json("derive-solve --algebra witt --window 6 --shift 2");
    assert_eq!(v["result"]["dimension"], 5);
    assert_eq!(v["result"]["trivial_only"], false);
    let (_, raw, _) = json("derive-solve --algebra thin --window 2 --shift 1 --raw");
    assert_eq!(raw["result"]["stable"], false);
    assert_eq!(raw["result"]["dimension"], 5);
    let (_, st, _) = json("derive-solve --algebra thin --window 2 --shift 1");
    assert_eq!(st["result"]["dimension"], 4);
}

#[test]
fn finite_solve_has_null_window() {
    let (code, v, _) = json("derive-solve --algebra sl2 --delta 1");
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dimension"], 3);
    assert!(v["result"]["window"].is_null());
}

#[test]
fn tpa_verify_passes() {
    let (code, stdout, _) = run("tpa-verify --algebra witt --product mutation:w=e_0+2*e_3 --window 5");
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS"));
    assert!(stdout.contains("726 tuples checked"));
}

#[test]
fn witness_exit_codes() {
    let args = "tpa-witness --algebra witt --product mutation:w=e_0 --window 4";
    let (code, v, _) = json(&format!("{args} --expect-witness"));
    assert_eq!(code, 0);
    assert_eq!(v["status"], "witness-found");
    assert_eq!(v["result"]["witness"]["triple"].as_array().unwrap().len(), 3);
    let (code, _, _) = run(args);
    assert_eq!(code, 1);
}

#[test]
fn normal_form_and_closure() {
    let (code, v, _) = json("tpa-normal-form --product table:solvable:1");
    assert_eq!(code, 0);
    assert_eq!(v["result"]["algebra"], "solvable");
    assert!(v["result"]["tpa_failure"].is_null());
    let (code, v, _) = json("closure-check --algebra witt --product mutation:w=e_1+e_-1 --mutate-by e_1 --window 4");
    assert_eq!(code, 0);
    assert_eq!(v["result"]["closed"], true);
}

#[test]
fn algebra_commands() {
    let (code, v, _) = json("algebra-list");
    assert_eq!(code, 0);
    assert_eq!(v["result"]["algebras"].as_array().map(Vec::len), Some(13));
    let (code, stdout, _) = run("algebra-check --algebra svir --param sector=ramond --window 4");
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "bogus",
        "derive-solve",
        "derive-solve --algebra nope",
        "derive-solve --algebra witt --window -1",
        "derive-solve --algebra witt --delta x",
        "derive-solve --algebra witt --window 2 --shift 2",
        "tpa-verify --algebra witt",
        "tpa-verify --algebra witt --product table:thin_k:3",
        "derive-solve --algebra wab --param a=1",
        "derive-solve --algebra witt --param k",
    ] {
        let (code, stdout, stderr) = run(args);
        assert_eq!(code, 2, "{args}: {stdout}");
        assert!(!stderr.is_empty(), "{args}");
        assert!(stdout.is_empty(), "{args}");
    }
}

#[test]
fn json_is_deterministic_and_round_trips() {
    for args in [
        "derive-solve --algebra wab --param a=3 --param b=-1 --window 5 --shift 2",
        "tpa-verify --algebra witt --product mutation:random --seed 4 --window 4",
        "tpa-witness --algebra thin --product table:thin_k:2 --window 4",
        "algebra-check --algebra nary_simple --param n=3 --window 6",
    ] {
        let (_, v, first) = json(args);
        let (_, _, second) = json(args);
        assert_eq!(first, second, "{args}");
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, first, "{args}");
    }
}

#[test]
fn timing_is_opt_in() {
    let (_, v, _) = json("algebra-check --algebra sl2");
    assert!(v.get("timing_ms").is_none());
    let (_, v, _) = json("algebra-check --algebra sl2 --timing");
    assert!(v["timing_ms"].is_u64());
}
