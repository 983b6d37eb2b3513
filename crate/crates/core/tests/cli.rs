//! End-to-end runs of the binary: worked examples, exit codes, formats.

use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery-cong"))
        .args(args)
        .env_remove("APERY_CONG_PARALLEL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn verify(claim: &str, params: &[(&str, &str)]) -> Value {
    let mut args = vec!["verify", "--claim", claim];
    for (k, v) in params {
        args.push(k);
        args.push(v);
    }
    let o = run(&args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{claim} {params:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(stdout(&o).trim()).unwrap()
}

/// claim, flags, lhs (empty to skip), residue
type Example<'a> = (&'a str, &'a [(&'a str, &'a str)], &'a str, &'a str);

#[test]
fn worked_examples_round_trip() {
    let cases: &[Example] = &[
        ("thm1.3b", &[("--p", "5")], "24562625", "125"),
        ("thm1.3a", &[("--n", "2")], "136", "0"),
        ("thm1.3a", &[("--n", "1")], "1", "0"),
        ("thm1.1a", &[("--n", "4"), ("--r", "1")], "123600", "0"),
        ("thm1.1a", &[("--n", "2"), ("--r", "0")], "16", "0"),
        ("thm1.1a", &[("--n", "1"), ("--r", "3")], "", "0"),
        (
            "thm1.2a",
            &[("--n", "3"), ("--r", "0"), ("--eps", "-1")],
            "57",
            "0",
        ),
        (
            "thm1.2a",
            &[("--n", "3"), ("--r", "0"), ("--eps", "1")],
            "75",
            "0",
        ),
        (
            "thm1.2a",
            &[("--n", "1"), ("--r", "5"), ("--eps", "-1")],
            "",
            "0",
        ),
        ("thm3.1b", &[("--n", "3"), ("--r", "0")], "57", "3"),
        ("thm3.1b", &[("--n", "2"), ("--r", "0")], "-8", "0"),
        ("thm3.1a", &[("--n", "3"), ("--r", "0")], "75", "3"),
        (
            "lem2.2",
            &[("--n", "3"), ("--k", "1"), ("--a", "0")],
            "48",
            "48",
        ),
        ("lem3.1-", &[("--n", "3"), ("--k", "1")], "12", "12"),
        ("lem4.1", &[("--n", "2"), ("--k", "1")], "27", "27"),
        (
            "thm1.4",
            &[("--n", "3"), ("--a", "3"), ("--b", "0")],
            "",
            "0",
        ),
        (
            "thm1.4",
            &[("--n", "3"), ("--a", "[]"), ("--b", "[]")],
            "6",
            "0",
        ),
        (
            "thm1.4",
            &[("--n", "1"), ("--a", "7"), ("--b", "2")],
            "",
            "0",
        ),
        (
            "thm5.3",
            &[("--n", "3"), ("--a", "-3,-3"), ("--b", "0,0")],
            "",
            "0",
        ),
        (
            "thm5.3",
            &[("--n", "3"), ("--a", "3"), ("--b", "0")],
            "0",
            "0",
        ),
        (
            "thm5.3",
            &[("--n", "5"), ("--a", "5,-5"), ("--b", "0,0")],
            "",
            "0",
        ),
        ("calkin", &[("--n", "4"), ("--s", "1")], "70", "0"),
        (
            "cor5.1a",
            &[("--n", "3"), ("--r", "0"), ("--s", "1")],
            "6",
            "0",
        ),
        (
            "cor5.2",
            &[("--n", "2"), ("--r", "2"), ("--s", "0")],
            "2",
            "0",
        ),
        ("wolst1", &[("--p", "5")], "25", "0"),
        ("lem4.2a", &[("--p", "5")], "82505", "5"),
        ("lem4.2b", &[("--p", "5")], "106501", "1"),
        ("alt-unit", &[("--n", "2")], "-1", "-1"),
        ("alt-n", &[("--n", "2")], "-2", "-2"),
        ("alt-unit", &[("--n", "1")], "1", "1"),
        ("conj3.1", &[("--n", "4")], "-20064", "32"),
        ("conj5.pow2a", &[("--n", "4"), ("--r", "1")], "20", "4"),
        (
            "conj5.cases",
            &[("--n", "2"), ("--s", "1"), ("--t", "1")],
            "-2",
            "2",
        ),
        (
            "qchu",
            &[("--m", "1"), ("--n", "1"), ("--h", "1")],
            "1 + 1*q",
            "1 + 1*q",
        ),
        (
            "qchu",
            &[("--m", "3"), ("--n", "0"), ("--h", "0")],
            "1",
            "1",
        ),
        (
            "qlucas",
            &[
                ("--a", "1"),
                ("--b", "0"),
                ("--r", "0"),
                ("--s", "0"),
                ("--d", "2"),
            ],
            "",
            "1",
        ),
        (
            "qlucas",
            &[
                ("--a", "1"),
                ("--b", "1"),
                ("--r", "0"),
                ("--s", "1"),
                ("--d", "2"),
            ],
            "",
            "1",
        ),
        (
            "thm5.1v1",
            &[("--n", "2"), ("--a", "0"), ("--b", "0")],
            "",
            "0",
        ),
        (
            "thm5.1v3",
            &[("--n", "2"), ("--a", "2"), ("--b", "0")],
            "",
            "0",
        ),
        (
            "thm5.1v2",
            &[("--n", "5"), ("--a", "3"), ("--b", "1")],
            "",
            "0",
        ),
        ("lem5.5", &[("--n", "1")], "2", "2"),
        (
            "lem5.5",
            &[("--n", "2")],
            "2 + 2*q + 2*q^2",
            "2 + 2*q + 2*q^2",
        ),
        ("thm5.4", &[("--n", "2")], "", "2"),
        ("thm5.4", &[("--n", "1")], "", "0"),
    ];
    for (claim, params, lhs, residue) in cases {
        let v = verify(claim, params);
        assert_eq!(v["pass"], Value::Bool(true), "{claim} {params:?}");
        assert_eq!(v["claim"], Value::String(claim.to_string()));
        if !lhs.is_empty() {
            assert_eq!(
                v["lhs"],
                Value::String(lhs.to_string()),
                "{claim} {params:?}"
            );
        }
        assert_eq!(
            v["residue"],
            Value::String(residue.to_string()),
            "{claim} {params:?}"
        );
    }
}

#[test]
fn verify_record_matches_schema() {
    let o = run(&["verify", "--claim", "thm1.3b", "--p", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"claim\":\"thm1.3b\",\"params\":{\"p\":5},\"modulus\":\"31250\",\"lhs\":\"24562625\",\"residue\":\"125\",\"expected\":\"125\",\"pass\":true}\n"
    );
    let v = verify("thm5.3", &[("--n", "3"), ("--a", "3,-3"), ("--b", "0,0")]);
    assert_eq!(v["params"]["a"], serde_json::json!([3, -3]));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--claim", "thm1.3b", "--p", "6"][..],
        &["verify", "--claim", "thm1.3b", "--p", "3"],
        &["verify", "--claim", "nope", "--p", "5"],
        &["verify", "--claim", "thm1.3b"],
        &["verify", "--claim", "thm1.3b", "--p", "5", "--q", "1"],
        &["verify", "--claim", "conj3.1", "--n", "6"],
        &["scan", "--claim", "thm1.1a", "--n", "1..x"],
        &[
            "scan",
            "--claim",
            "thm1.1a",
            "--n",
            "1..100000",
            "--r",
            "0..200",
        ],
        &["scan", "--claim", "thm1.1a", "--parallel", "0"],
        &["scan"],
        &["sequence", "fibonacci", "--max", "3"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?} printed no diagnostic");
    }
}

#[test]
fn sequence_csv() {
    let o = run(&["sequence", "apery", "--max", "10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,value");
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[3], "2,73");
    let o = run(&[
        "sequence",
        "delannoy",
        "--max",
        "4",
        "--method",
        "recurrence",
    ]);
    let last = stdout(&o).lines().last().unwrap().to_string();
    assert_eq!(last, r#"{"sequence":"delannoy","n":4,"value":"321"}"#);
}

#[test]
fn list_claims_is_the_registry() {
    let o = run(&["list-claims"]);
    assert_eq!(o.status.code(), Some(0));
    let ids: BTreeSet<String> = stdout(&o)
        .lines()
        .map(|l| l.split('\t').next().unwrap().to_string())
        .collect();
    let expected: BTreeSet<String> = [
        "thm1.1a",
        "thm1.1b",
        "thm1.2a",
        "thm1.2b",
        "thm1.3a",
        "thm1.3b",
        "thm1.4",
        "thm3.1a",
        "thm3.1b",
        "thm5.3",
        "cor5.1a",
        "cor5.1b",
        "cor5.2",
        "calkin",
        "lem2.2",
        "lem2.3",
        "lem3.1+",
        "lem3.1-",
        "lem4.1",
        "lem4.2a",
        "lem4.2b",
        "wolst1",
        "wolst2",
        "eq-particular1",
        "alt-unit",
        "alt-n",
        "qchu",
        "qlucas",
        "thm5.1v1",
        "thm5.1v2",
        "thm5.1v3",
        "thm5.1v4",
        "lem5.5",
        "thm5.4",
        "conj5.6",
        "conj3.1",
        "conj5.gen",
        "conj5.pow2a",
        "conj5.pow2b",
        "conj5.cases",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    assert_eq!(ids, expected);
    assert_eq!(stdout(&o).lines().count(), expected.len());
}

#[test]
fn scan_ranges_and_summary() {
    let o = run(&[
        "scan",
        "--claim",
        "thm1.1a",
        "--n",
        "1..50",
        "--r",
        "0..2",
        "--parallel",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["total"], 150);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["pass"], true);
    assert!(v.get("elapsed_ms").is_none());

    let o = run(&[
        "scan",
        "--claim",
        "thm1.3b",
        "--p",
        "primes:5..30",
        "--records",
        "--timing",
    ]);
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0]["residue"], "125");
    assert!(lines[8]["elapsed_ms"].is_number());

    let o = run(&[
        "scan",
        "--claim",
        "conj3.1",
        "--n",
        "pow2:2..64",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "claim,params,modulus,lhs,residue,expected,pass\n"
    );

    let o = run(&[
        "scan",
        "--claim",
        "thm5.3",
        "--n",
        "{4,6}",
        "--a",
        "2,2",
        "--b",
        "0,0",
        "--records",
        "--format",
        "csv",
    ]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.contains("\"n=4;a=[2,2];b=[0,0]\""));
}

#[test]
fn parallel_env_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.jsonl");
    let o = Command::new(env!("CARGO_BIN_EXE_apery-cong"))
        .args([
            "scan", "--claim", "lem2.2", "--n", "1..10", "--k", "0..n-1", "--a", "0..3",
        ])
        .args(["--out", path.to_str().unwrap()])
        .env("APERY_CONG_PARALLEL", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(std::fs::read_to_string(&path).unwrap().trim()).unwrap();
    assert_eq!(v["claim"], "lem2.2");
    assert_eq!(v["total"], 220);

    let bad = dir.path().join("no/such/dir/out.jsonl");
    let o = run(&["list-claims"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["scan", "--claim", "conj3.1", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no/such/dir"));
}
