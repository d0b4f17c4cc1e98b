use std::process::{Command, Output};

use serde_json::Value;

fn ribbonrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbonrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = ribbonrep(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn quotient_of_the_worked_example() {
    let out = ribbonrep(&["quotient", "-r", "3", "10,6,6,6,4,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[4,3|2|1,1]\n");
    let out = ribbonrep(&["compose", "[4,3|2|1,1]"]);
    assert_eq!(stdout(&out), "10,6,6,6,4,1\n");
}

#[test]
fn sign_reports_json() {
    let out = ribbonrep(&["sign", "-r", "3", "5,5,4,3,1"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "ribbonrep.sign/1");
    assert_eq!(v["d"], 4);
    assert_eq!(v["sign"], 1);
    let wide = json(&["sign", "-r", "3", "-k", "7", "5,5,4,3,1"]);
    assert_eq!(
        (wide["k"].as_u64(), wide["sign"].as_i64()),
        (Some(7), Some(1))
    );
    let plain = ribbonrep(&["sign", "-f", "plain", "-r", "2", "1,1"]);
    assert_eq!(
        stdout(&plain),
        "k=2 inv=0 inv_empty=1 d=1 sign=-1 sign2_closed=-1\n"
    );
}

#[test]
fn small_verification_passes() {
    let out = ribbonrep(&["verify", "-r", "2", "-n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "r=2 n=1 pairs=2 failures=0\n");
    for args in [
        &["verify", "-g", "2x2", "-n", "2"][..],
        &["verify", "--degree", "-n", "3"][..],
    ] {
        assert_eq!(ribbonrep(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn verify_json_is_byte_stable() {
    let args = [
        "--format",
        "json",
        "verify",
        "-r",
        "3",
        "-n",
        "3",
        "--compositions",
    ];
    let single = ribbonrep(&[&args[..], &["--jobs", "1"]].concat());
    let many = ribbonrep(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(single.stdout, many.stdout);
    let v: Value = serde_json::from_slice(&single.stdout).unwrap();
    assert_eq!(v["schema"], "ribbonrep.verify/1");
    assert!(v.get("elapsed_ms").is_none());
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let timed = json(&["verify", "-r", "2", "-n", "2", "--timing"]);
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn values_and_twins() {
    assert_eq!(stdout(&ribbonrep(&["chi", "3,2", "2,2,1"])), "1\n");
    assert_eq!(json(&["chi", "3,2", "2,2,1"])["value"], "1");
    assert_eq!(stdout(&ribbonrep(&["psi", "-r", "2", "1,1", "1"])), "1\n");
    assert_eq!(stdout(&ribbonrep(&["core", "-r", "2", "3,2,1,1"])), "1\n");
    assert_eq!(stdout(&ribbonrep(&["boundary", "2,1"])), "10|10\n");
    let b = json(&["boundary", "-k", "4", "2,1"]);
    assert_eq!(b["word"], "001010");
    let psi = json(&["psi", "-g", "3", "[1|-|-]", "[-|1|-]"]);
    assert_eq!(psi["order"], 3);
    assert_eq!(psi["coeffs"], serde_json::json!(["1", "0"]));
    let peel = ribbonrep(&["peel", "-r", "3", "10,6,6,6,4,1", "3,2,4,2"]);
    assert!(stdout(&peel)
        .contains("q=5 len=6 ht=0\nq=4 len=12 ht=1\nq=3 len=6 ht=1\nq=1 len=9 ht=1\nsign=-1"));
}

#[test]
fn tables_in_every_format() {
    let tsv = stdout(&ribbonrep(&[
        "--format", "tsv", "table", "-g", "1", "-n", "3",
    ]));
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines[0], "character\t[3]\t[2,1]\t[1,1,1]");
    assert_eq!(lines[1], "size\t2\t3\t1");
    assert_eq!(lines[3], "[2,1]\t-1\t0\t2");
    let v = json(&["table", "-g", "2", "-n", "2"]);
    assert_eq!(v["schema"], "ribbonrep.table/1");
    assert_eq!(v["labels"].as_array().unwrap().len(), 5);
    let plain = stdout(&ribbonrep(&["table", "-g", "2", "-n", "1"]));
    assert!(plain.starts_with("character  [1|-]  [-|1]"));
}

#[test]
fn bad_input_exits_2_naming_the_token() {
    for (args, token) in [
        (&["chi", "2,1", "1,x"][..], "`x`"),
        (&["quotient", "-r", "2", "1,2"][..], "`1,2`"),
        (&["psi", "-g", "2y2", "[1|-]", "[1|-]"][..], "2y2"),
        (&["compose", "[1|2"][..], "[1|2"),
    ] {
        let out = ribbonrep(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.contains(token), "{args:?}: {err}");
    }
    let out = ribbonrep(&["quotient", "-r", "2", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(ribbonrep(&["verify", "-n", "1"]).status.code(), Some(2));
    assert_eq!(
        ribbonrep(&["--format", "tsv", "chi", "1", "1"])
            .status
            .code(),
        Some(2)
    );
}
