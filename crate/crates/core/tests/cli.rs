//! End-to-end tests of the command-line interface: flag parsing, the JSON
//! schemas, determinism across runs and thread counts, and exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tautcalc"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn class_prym_json_schema() {
    let out = run(&["class", "prym", "--r", "3", "--emit", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("valid json");
    assert_eq!(value["g"], 6);
    assert_eq!(value["lambda"], "7");
    assert_eq!(value["delta"]["0p"], "1");
    assert_eq!(value["delta"]["0pp"], "4");
    assert_eq!(value["delta"]["0ram"], "3/2");
    assert_eq!(value["delta"]["1"], "15");
    assert_eq!(value["delta"]["5"], "5");
    let unknown: Vec<&str> = value["unknown"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(unknown, vec!["1:5", "2:4", "3:3"]);
}

#[test]
fn class_strongly_bn_json() {
    let out = run(&["class", "strongly-bn", "--r", "3", "--emit", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("valid json");
    assert_eq!(value["g"], 5);
    assert_eq!(value["psi1"], "4");
    assert_eq!(value["psi2"], "4");
    assert_eq!(value["lambda"], "7");
    assert_eq!(value["delta"]["0"], "1");
    assert_eq!(value["delta"]["0,{1,2}"], "15");
    assert_eq!(value["c_scale"], "1");
    assert_eq!(value["c_scale_for_point_slice"], "2");
}

#[test]
fn fp_intersections_are_independent_of_m() {
    let a = run(&["fp", "--r", "3", "--m", "2", "--emit", "json"]);
    let b = run(&["fp", "--r", "3", "--m", "9", "--emit", "json"]);
    assert!(a.status.success() && b.status.success());
    let va: serde_json::Value = serde_json::from_str(&stdout_str(&a)).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&stdout_str(&b)).unwrap();
    assert_eq!(va["diagonal"], "240");
    assert_eq!(va["diagonal"], vb["diagonal"]);
    assert_eq!(va["point_slice"], vb["point_slice"]);
    assert_eq!(va["chern_cross_check"], "pass");
}

#[test]
fn output_is_byte_identical_across_runs_and_threads() {
    let one = run(&["--threads", "1", "fp", "--r", "3", "--emit", "json"]);
    let again = run(&["--threads", "1", "fp", "--r", "3", "--emit", "json"]);
    let four = run(&["--threads", "4", "fp", "--r", "3", "--emit", "json"]);
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(one.stdout, four.stdout);

    let env_threads = bin()
        .env("TAUTCALC_THREADS", "3")
        .args(["fp", "--r", "3", "--emit", "json"])
        .output()
        .expect("binary runs");
    assert_eq!(one.stdout, env_threads.stdout);
}

#[test]
fn rho_with_profiles() {
    let dir = tempfile::tempdir().unwrap();
    let ram_path = dir.path().join("ram.json");
    writeln!(
        std::fs::File::create(&ram_path).unwrap(),
        "{{\"orders\": [2, 4, 6, 8]}}"
    )
    .unwrap();
    let multi_path = dir.path().join("multi.json");
    writeln!(
        std::fs::File::create(&multi_path).unwrap(),
        "{{\"orders\": [0, 2, 4, 6], \"divisor_degrees\": [2, 4, 6, 8]}}"
    )
    .unwrap();

    let out = run(&[
        "rho",
        "--g",
        "5",
        "--r",
        "3",
        "--d",
        "10",
        "--ram",
        ram_path.to_str().unwrap(),
        "--emit",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["rho_ramified"], "-1");

    let out = run(&[
        "rho",
        "--g",
        "5",
        "--r",
        "3",
        "--d",
        "8",
        "--multi",
        multi_path.to_str().unwrap(),
        "--emit",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["rho_multivanishing"], "-1");
}

#[test]
fn kodaira_json() {
    let out = run(&["kodaira", "r14-2", "--emit", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["psi"], "22963/25428");
    assert_eq!(value["psi_below_one"], true);
    assert_eq!(value["coefficients"][0], "4603/63570");
}

#[test]
fn nikulin_and_testcurve() {
    let out = run(&["nikulin", "--r", "3", "--emit", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["pairing"], "-1");
    assert_eq!(value["negative"], true);

    let out = run(&["testcurve", "--name", "xi", "--r", "3", "--emit", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["pairing"], "-1");

    // the elliptic-pencil relations pair to zero with the solved class
    for name in ["a1", "a-g-minus-1"] {
        let out = run(&["testcurve", "--name", name, "--r", "4", "--emit", "json"]);
        assert!(out.status.success(), "{name}");
        let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
        assert_eq!(value["pairing"], "0", "{name}");
    }
}

#[test]
fn identities_subcommand() {
    let out = run(&["identities", "--r-max", "12", "--emit", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["all_pass"], true);
}

#[test]
fn verify_all_exits_zero() {
    let out = run(&["verify-all", "--r-max", "3", "--emit", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["all_passed"], true);
    // table mode prints one line per criterion
    let table = run(&["verify-all", "--r-max", "3"]);
    let text = stdout_str(&table);
    for index in 1..=10 {
        assert!(
            text.contains(&format!("criterion {index:>2} [PASS]")),
            "missing line for criterion {index}"
        );
    }
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["fp", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["class", "prym"]); // missing --r
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_emits_header_and_rows() {
    let out = run(&["class", "prym", "--r", "3", "--emit", "csv"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("name,value"));
    assert!(text.lines().any(|l| l == "lambda,7"));
    assert!(text.lines().any(|l| l == "delta.0ram,3/2"));
}
