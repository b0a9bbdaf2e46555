use std::process::Command;

use num_bigint::BigUint;
use partition_cli::{run, Func, Point, Registry, Settings, StrategyName};
use partition_core::partition_fn::p_recursive;
use partition_core::Error;
use proptest::prelude::*;

fn partk(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_partk"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_with(reg: &Registry, args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["partk"];
    full.extend_from_slice(args);
    let code = run(full, reg, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json_value(line: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    v["value"].as_str().unwrap().to_string()
}

#[test]
fn compute_examples() {
    let (code, out, _) = partk(&["compute", "--fn", "pk", "--n", "11", "--k", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(json_value(out.trim()), "10");
    let (_, out, _) = partk(&["compute", "--fn", "spt", "--a", "3", "--b", "2", "--n", "5", "--format", "json"]);
    assert_eq!(json_value(out.trim()), "173");
    let (_, out, _) = partk(&[
        "compute", "--fn", "lambda", "--n", "30", "--k", "2", "--strategy", "inclexcl", "--format", "json",
    ]);
    assert_eq!(json_value(out.trim()), "11");
}

#[test]
fn json_schema_and_key_order() {
    let (_, out, _) = partk(&["compute", "--fn", "spt", "--n", "5", "--k", "2", "--format", "json"]);
    assert_eq!(
        out,
        "{\"fn\":\"spt\",\"n\":5,\"k\":2,\"a\":0,\"b\":1,\"strategy\":\"recursive\",\"value\":\"2\"}\n"
    );
    let (_, out, _) = partk(&["compute", "--fn", "psi", "--n", "10", "--format", "csv"]);
    assert_eq!(out, "fn,n,k,a,b,strategy,value\npsi,10,,,,,18\n");
}

#[test]
fn big_values_stay_exact() {
    let (_, out, _) = partk(&["compute", "--fn", "p", "--n", "1000", "--strategy", "pentagonal", "--format", "json"]);
    assert_eq!(json_value(out.trim()), "24061467864032622473692149727991");
}

#[test]
fn oracle_diff_agrees_on_clean_build() {
    for f in ["p", "pk", "lambda", "ppsi"] {
        let (code, out, err) = partk(&["oracle-diff", "--fn", f, "--n-hi", "40"]);
        assert_eq!(code, 0, "{f}: {err}");
        assert!(out.is_empty());
        assert!(err.contains("0 mismatches"));
    }
    let (code, _, _) = partk(&["oracle-diff", "--fn", "spt", "--a", "1", "--b", "2", "--n-hi", "20"]);
    assert_eq!(code, 0);
}

fn off_by_one(pt: &Point, _: &Settings) -> Result<BigUint, Error> {
    let v = p_recursive(pt.n as i64, pt.k.unwrap_or(1) as i64);
    Ok(if pt.n == 9 && pt.k == Some(3) { v + 1u8 } else { v })
}

#[test]
fn oracle_diff_reports_a_corrupted_strategy() {
    let reg = Registry::standard().with_override(Func::Pk, StrategyName::Closed, off_by_one);
    let (code, out, err) = run_with(&reg, &["oracle-diff", "--fn", "pk", "--n-hi", "12", "--format", "json"]);
    assert_eq!(code, 1, "{err}");
    let rows: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["n"], 9);
    assert_eq!(rows[0]["k"], 3);
    assert_eq!(rows[0]["strategy"], "closed");
    assert_eq!(rows[0]["value"], "8");
    assert_eq!(rows[0]["reference_value"], "7");
    assert!(err.contains("1 mismatches"));
}

#[test]
fn identity_sweeps() {
    let (code, _, _) = partk(&["verify-identities", "--n-hi", "500"]);
    assert_eq!(code, 0);
    let (code, out, _) = partk(&["verify-identities", "--identity", "EB-PHI", "--n-lo", "1", "--n-hi", "50", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["exceptions"][0]["n"], 1);
    assert_eq!(v["exceptions"][1]["lhs"], "1");
    assert_eq!(v["exceptions"][1]["rhs"], "2");
    assert_eq!(v["passed"], true);
    let (code, _, _) = partk(&["verify-identities", "--identity", "HARDY-SUM", "--n-hi", "1000"]);
    assert_eq!(code, 0);
    let (code, _, err) = partk(&["verify-identities", "--identity", "NOPE"]);
    assert_eq!(code, 2);
    assert!(err.contains("NOPE"));
    let (code, _, _) = partk(&["verify-identities", "--n-lo", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn generating_function_checks() {
    for (a, b, n) in [("0", "1", "40"), ("1", "1", "40"), ("2", "1", "25")] {
        let (code, out, _) = partk(&["gf-check", "--a", a, "--b", b, "--n", n]);
        assert_eq!(code, 0, "({a},{b})");
        assert!(out.contains("agree"));
    }
    // report only: disagreement does not fail
    let (code, out, _) = partk(&["gf-check", "--a", "0", "--b", "2", "--n", "10"]);
    assert_eq!(code, 0);
    assert!(out.contains("first mismatch"));
    let (code, _, _) = partk(&["gf-check", "--b", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["compute"],
        vec!["compute", "--fn", "pk", "--n", "3", "--strategy", "pentagonal"],
        vec!["compute", "--fn", "p", "--n", "3", "--k", "1"],
        vec!["compute", "--fn", "pk", "--n", "3", "--format", "xml"],
        vec!["table", "--fn", "phi", "--n-hi", "3"],
        vec!["oracle-diff", "--fn", "pk", "--n-hi", "3", "--strategy", "closed"],
        vec!["compute", "--fn", "pk", "--n", "90", "--k", "3", "--strategy", "brute"],
        vec!["compute", "--fn", "pk", "--n", "3", "--jobs", "0"],
    ] {
        let (code, _, err) = partk(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn table_human_layout() {
    let (code, out, _) = partk(&["table", "--fn", "pk", "--n-lo", "5", "--n-hi", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "   5 | 1 2 2 1 1\n   6 | 1 3 3 2 1 1\n");
}

#[test]
fn output_is_deterministic() {
    for format in ["json", "csv"] {
        let args = ["table", "--fn", "lambda", "--n-hi", "30", "--format", format];
        let (_, first, _) = partk(&[&args[..], &["--jobs", "1"]].concat());
        let (_, second, _) = partk(&[&args[..], &["--jobs", "4"]].concat());
        let (_, third, _) = partk(&args);
        assert_eq!(first, second);
        assert_eq!(first, third);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn compute_matches_library(n in 1u64..150, k in 1u64..20) {
        let reg = Registry::standard();
        let (n, k) = (n.to_string(), k.to_string());
        let (code, out, _) = run_with(&reg, &["compute", "--fn", "pk", "--n", &n, "--k", &k, "--format", "json"]);
        prop_assert_eq!(code, 0);
        let expected = p_recursive(n.parse().unwrap(), k.parse().unwrap()).to_string();
        prop_assert_eq!(json_value(out.trim()), expected);
    }
}
