use std::process::{Command, Output};

use ramastir::algebra::{Rat, Sqrt2Rat};
use ramastir::sequences::{Sequence, Value};
use ramastir::triangles::{Triangle, TriangleKind};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramastir"))
        .args(args)
        .env_remove("RAMASTIR_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

fn parse_value(s: &str) -> Value {
    if s.ends_with("*sqrt2") {
        Value::Sqrt2(s.parse::<Sqrt2Rat>().expect("sqrt2 rendering"))
    } else {
        Value::Rat(s.parse::<Rat>().expect("rational rendering"))
    }
}

#[test]
fn gamma_csv_golden() {
    let text = stdout(&["table", "gamma", "0", "3", "csv"]);
    assert_eq!(text, "n,value\n0,1\n1,1/12\n2,1/288\n3,-139/51840\n");
}

#[test]
fn psi_json_golden() {
    let text = stdout(&["table", "psi", "0", "2", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let values: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["-1/3", "4/135", "8/2835"]);
}

#[test]
fn omega_head() {
    assert_eq!(stdout(&["table", "omega", "0", "0", "csv"]), "n,value\n0,1\n");
}

#[test]
fn csv_round_trip_every_sequence() {
    for seq in Sequence::ALL {
        let text = stdout(&["table", seq.name(), "0", "6", "csv"]);
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        let mut count = 0;
        for rec in rd.records() {
            let rec = rec.unwrap();
            let n: usize = rec[0].parse().unwrap();
            assert_eq!(parse_value(&rec[1]), seq.value(n, None).unwrap().value, "{seq} {n}");
            count += 1;
        }
        assert_eq!(count, 7);
    }
}

#[test]
fn json_round_trip_with_methods() {
    for seq in [Sequence::Gamma, Sequence::C, Sequence::AlphaStar] {
        for m in seq.methods() {
            let text = stdout(&["table", seq.name(), "2", "5", "json", "--method", m]);
            let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
            assert_eq!(rows.len(), 4);
            for r in rows {
                let n = r["n"].as_u64().unwrap() as usize;
                assert_eq!(r["method"], m);
                assert_eq!(parse_value(r["value"].as_str().unwrap()), seq.value(n, None).unwrap().value);
            }
        }
    }
}

#[test]
fn triangle_rows_and_round_trip() {
    let text = stdout(&["triangle", "eulerian2", "5"]);
    let row5: Vec<&str> = text.lines().filter(|l| l.starts_with("5,")).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(row5, ["1", "52", "328", "444", "120"]);

    let text = stdout(&["triangle", "stirling_cycle_star", "5", "csv"]);
    assert!(text.contains("5,5,4/5\n") && text.contains("5,2,12\n"));

    for kind in TriangleKind::ALL {
        let text = stdout(&["triangle", kind.name(), "7", "json"]);
        let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
        assert!(!rows.is_empty());
        for r in rows {
            let (n, k) = (r["n"].as_u64().unwrap() as usize, r["k"].as_i64().unwrap());
            let v: Rat = r["value"].as_str().unwrap().parse().unwrap();
            assert_eq!(v, Triangle::new(kind).get(n, k).unwrap());
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["table", "zeta", "0", "3"]), 2);
    assert_eq!(code(&["table", "gamma", "4", "3"]), 2);
    assert_eq!(code(&["table", "gamma", "0", "3", "csv", "--method", "nope"]), 2);
    assert_eq!(code(&["triangle", "pascal", "3"]), 2);
    assert_eq!(code(&["check", "bogus-id"]), 2);
    assert_eq!(code(&["cross", "psi", "3"]), 2);
    assert_eq!(code(&["validate", "zeta", "--n", "20", "--terms", "3"]), 2);
    assert_eq!(code(&["validate", "theta", "--n", "20", "--terms", "3", "--eps", "junk"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn checks_and_cross() {
    assert_eq!(code(&["check", "eq-1.7", "--max-order", "40"]), 0);
    assert_eq!(code(&["check", "thm-1.1", "--max-order", "12"]), 0);
    assert_eq!(code(&["check", "ggd"]), 0);
    assert_eq!(code(&["cross", "gamma", "8"]), 0);
    assert_eq!(code(&["cross", "c", "20"]), 0);
    let text = stdout(&["check", "all", "--max-order", "3"]);
    assert!(text.lines().count() >= 40);
    assert!(text.lines().all(|l| l.split('\t').nth(1) == Some("pass")));
}

#[test]
fn env_overrides_default_range() {
    let out = Command::new(env!("CARGO_BIN_EXE_ramastir"))
        .args(["check", "eq-2.9"])
        .env("RAMASTIR_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("max=4"));
    let out = Command::new(env!("CARGO_BIN_EXE_ramastir"))
        .args(["check", "eq-2.9", "--max-order", "5"])
        .env("RAMASTIR_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("max=5"));
}

#[test]
fn validate_exit_codes() {
    assert_eq!(code(&["validate", "stirling", "--n", "20", "--terms", "4"]), 0);
    assert_eq!(code(&["validate", "theta", "--n", "20", "--terms", "3"]), 0);
    assert_eq!(code(&["validate", "stirling", "--n", "20", "--terms", "1"]), 0);
    // A budget too loose to separate the error from the bound.
    assert_eq!(code(&["validate", "stirling", "--n", "20", "--terms", "4", "--eps", "1"]), 3);
}

#[test]
fn stdout_is_data_only() {
    let out = run(&["check", "bogus-id"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}
