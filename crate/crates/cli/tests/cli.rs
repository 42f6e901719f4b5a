use polyolab::{BiSymF, QTPoly, SymF};
use serde_json::Value;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_polyolab")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn enumeration() {
    let out = ok(&["enum", "polyominoes", "2", "2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[3], "count=3");
    let v: Value = serde_json::from_str(&ok(&["enum", "labelled", "2", "2", "--format", "json"])).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 4);
    assert_eq!(v["count"], 4);
    assert_eq!(ok(&["enum", "paths", "0", "3"]), "NNN\ncount=1\n");
    let limited = ok(&["enum", "doubly", "3", "2", "--limit", "2"]);
    assert_eq!(limited.lines().count(), 3);
    assert!(limited.ends_with("count=17\n"));
    assert!(ok(&["enum", "star", "3", "2"]).ends_with("count=12\n"));
    assert_eq!(ok(&["enum", "polyominoes", "3", "3"]), ok(&["enum", "polyominoes", "3", "3"]));
}

#[test]
fn statistics() {
    assert_eq!(ok(&["stat", "area", "NNEEENNEENEEENEE"]), "41\n");
    assert_eq!(ok(&["stat", "aword", "NNNEENEEE|ENEENENEN"]), "0~,1,1,1~,2,2~,1~,2,1~\n");
    assert_eq!(ok(&["stat", "motzkin", "NNNEENEEE|ENEENENEN"]), "d r d b d~ d d~ b d~\n");
    assert_eq!(ok(&["stat", "dinv", "NNNEENEEE|ENEENENEN"]), "12\n");
    assert_eq!(ok(&["stat", "gamma", "NNEE|EENN"]), "(2)\n");
    assert_eq!(ok(&["stat", "area", "yyxx|xxyy"]), "1\n");
    let (code, _, err) = run(&["stat", "area", "NNEE|ENQN"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte 7"), "{err}");
}

#[test]
fn characters() {
    assert_eq!(ok(&["frob", "L", "3", "2", "--basis", "h"]), "3*h[1,1] + 3*h[2]\n");
    assert_eq!(ok(&["frob", "L", "1", "4", "--basis", "h"]), "h[4]\n");
    assert_eq!(ok(&["frob", "L", "3", "3", "--basis", "h"]), ok(&["frob", "L", "3", "3", "--basis", "h", "--brute"]));
    let l2: BiSymF = ok(&["frob", "L2", "3", "2"]).trim().parse().unwrap();
    let y = |s: &str| s.parse::<SymF>().unwrap();
    let want = BiSymF::tensor(&y("6*s[3] + 3*s[2,1]"), &SymF::s(&[2]))
        .add(&BiSymF::tensor(&y("3*s[3] + s[2,1]"), &SymF::s(&[1, 1])));
    assert_eq!(l2, want);
    assert_eq!(ok(&["frob", "littlewood", "0", "4", "--basis", "h"]), "h[4]\n");
    assert_eq!(ok(&["frob", "srho", "1", "2", "--basis", "h"]), "h[2]\n");
    let lq = ok(&["frob", "Lq", "2", "2", "--basis", "h"]);
    assert!(lq.contains('q'), "{lq}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["enum", "polyominoes", "0", "2"]).0, 2);
    assert_eq!(run(&["enum", "polyominoes", "7", "2"]).0, 3);
    assert_eq!(run(&["--brute-cap", "7", "enum", "polyominoes", "7", "1"]).0, 0);
    assert_eq!(run(&["--degree-cap", "3", "frob", "L", "2", "4"]).0, 3);
    assert_eq!(run(&["--generic-cap", "1", "verify", "nablaE2"]).0, 4);
    assert_eq!(run(&["verify", "nope"]).0, 2);
    assert_eq!(run(&["verify"]).0, 2);
    assert_eq!(run(&["frob", "L", "3", "2", "--basis", "x"]).0, 2);
}

#[test]
fn verify_report() {
    let out = ok(&["verify", "eqFrob", "--max-k", "3", "--max-n", "3"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.len(), 9);
    for r in recs {
        assert_eq!(r["equal"], true);
        assert_eq!(r["status"], "theorem");
        assert_eq!(r["lhs_digest"], r["rhs_digest"]);
        assert!(r.get("time_ms").is_none());
        for key in ["k", "n", "r", "d"] {
            assert!(r["params"].get(key).is_some());
        }
    }
    assert!(v["time_ms"].is_u64());
    let again: Value =
        serde_json::from_str(&ok(&["--threads", "1", "verify", "eqFrob", "--max-k", "3", "--max-n", "3"])).unwrap();
    assert_eq!(again["records"], v["records"]);
    let ev: Value =
        serde_json::from_str(&ok(&["verify", "qangela", "--max-k", "3", "--max-n", "3", "--mode", "evaluation"]))
            .unwrap();
    assert!(ev["records"].as_array().unwrap().iter().all(|r| r["equal"] == true && r["proof"]["deg_q"].is_u64()));
    let listed = ok(&["verify", "--list"]);
    assert!(listed.lines().any(|l| l.starts_with("michele") && l.contains("conjecture")));
}

#[test]
fn series_tables() {
    let v: Value = serde_json::from_str(&ok(&["series", "Pxy", "--trunc", "4", "--format", "json"])).unwrap();
    let cells = v.as_array().unwrap();
    assert_eq!(cells.len(), 6);
    let c22 = cells.iter().find(|c| c["k"] == 2 && c["n"] == 2).unwrap();
    assert_eq!(c22["coeff"].as_str().unwrap().parse::<QTPoly>().unwrap(), "2 + q".parse().unwrap());
    assert!(ok(&["series", "labelledGF", "--trunc", "5"]).contains("closed_form_agrees=true"));
    let h: Value =
        serde_json::from_str(&ok(&["series", "hilbert", "--n", "3", "--trunc", "4", "--format", "json"])).unwrap();
    assert_eq!(h["series_a"][1], "3");
    assert_eq!(run(&["series", "Pxy", "--trunc", "13"]).0, 3);
}
