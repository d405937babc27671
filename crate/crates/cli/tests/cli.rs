use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const LAMBDA3_SQUARED: &str = "(0010)⊗(0010)=(0000)+(0001)+(1000)+2(0010)+2(0002)+2(1001)+(2000)+(0100)+(0003)+2(0011)+(1010)+(1002)+(0101)+(0020)";

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_liefusion"));
    cmd.env_remove("LIEFUSION_CACHE_DIR");
    match cache {
        Some(dir) => {
            cmd.arg("--cache-dir").arg(dir);
        }
        None => {
            cmd.arg("--no-cache");
        }
    }
    cmd.args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tensor_matches_golden_line() {
    let o = run(&["tensor", "F4", "0,0,1,0", "0,0,1,0"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), LAMBDA3_SQUARED);
}

#[test]
fn tensor_json_dimensions_add_up() {
    let o = run(&["--format", "json", "tensor", "F4", "0,0,1,0", "0,0,1,0"], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let total: u64 = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["multiplicity"].as_u64().unwrap() * c["dim"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 273 * 273);
    assert_eq!(v["notation"], LAMBDA3_SQUARED);
}

#[test]
fn roots_json_lists_24_positive_roots() {
    let o = run(&["roots", "F4", "--format", "json"], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 24);
    let simple: Vec<&str> = v["simple_roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["orthogonal"].as_str().unwrap())
        .collect();
    assert_eq!(simple, ["[0,1,-1,0]", "[0,0,1,-1]", "[0,0,0,1]", "1/2[1,-1,-1,-1]"]);
}

#[test]
fn level_two_fusion_table_contains_lambda3() {
    let o = run(&["--format", "json", "fusion", "F4", "--level", "2", "--charge", "0,0,0,1", "0,0,0,2"], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let lambda3 = v["rules"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["nu"] == serde_json::json!([0, 0, 1, 0]))
        .expect("(0010) present");
    assert_eq!(lambda3["value"], 1);
}

#[test]
fn fusion_methods_agree_on_case_seven() {
    let mut values = Vec::new();
    for m in ["auto", "kac-walton", "kspace-corank"] {
        let o = run(&["fusion", "F4", "--level", "3", "--charge", "0,0,0,1", "0,0,1,1", "0,0,1,1", "--method", m], None);
        assert_eq!(o.status.code(), Some(0), "{m}");
        values.push(stdout(&o).split_whitespace().nth(2).unwrap().to_string());
    }
    assert_eq!(values, ["2", "2", "2"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"], None).status.code(), Some(0));
    assert_eq!(run(&["no-such-command"], None).status.code(), Some(2));
    assert_eq!(run(&["tensor", "F4", "1,0", "0,0,0,1"], None).status.code(), Some(2));
    assert_eq!(run(&["dim", "X9", "1"], None).status.code(), Some(2));
    assert_eq!(run(&["verify-paper", "--only", "not-a-check"], None).status.code(), Some(2));
    assert_eq!(run(&["verify-paper", "--only", "appendixB"], None).status.code(), Some(0));
}

#[test]
fn verify_report_schema_and_statuses() {
    let o = run(&["verify-paper", "--json", "--no-timings"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["version"].is_string());
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 20);
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for c in checks {
        for field in ["id", "anchor", "status", "expected", "computed", "ms"] {
            assert!(c.get(field).is_some(), "{field} missing in {}", c["id"]);
        }
        assert!(c["ms"].is_u64());
        let want = if c["id"] == "cc-f4-level2-coset" { "paper-discrepancy" } else { "pass" };
        assert_eq!(c["status"], want, "{}", c["id"]);
    }
    let coset = checks.iter().find(|c| c["id"] == "cc-f4-level2-coset").unwrap();
    assert_eq!(coset["expected"]["c9"], "14/15");
    assert_eq!(coset["computed"]["defect"], "21/22");
}

#[test]
fn only_pairing_check_reports_three_values() {
    let o = run(&["verify-paper", "--json", "--only", "appendixB"], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(
        checks[0]["computed"],
        serde_json::json!({"norm_rho3": "2", "norm_rho4": "2", "cross_abs": "1"})
    );
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["verify-paper", "--json", "--no-timings"];
    let a = run(&args, None);
    let b = run(&args, None);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn warm_cache_matches_cold() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify-paper", "--json", "--no-timings"];
    let cold = run(&args, Some(dir.path()));
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(entries > 0, "cache was not populated");
    let warm = run(&args, Some(dir.path()));
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, run(&args, None).stdout);

    let t_cold = run(&["tensor", "F4", "0,0,1,0", "0,0,1,0"], Some(dir.path()));
    let t_warm = run(&["tensor", "F4", "0,0,1,0", "0,0,1,0"], Some(dir.path()));
    assert_eq!(t_cold.stdout, t_warm.stdout);
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let first = run(&["appendix-b"], Some(dir.path()));
    for e in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(e.unwrap().path(), b"{ not json").unwrap();
    }
    let second = run(&["appendix-b"], Some(dir.path()));
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn reduce_and_kspace_subcommands() {
    let o = run(&["--format", "json", "reduce", "--level", "4", "0,0,1,2", "0,0,1,2"], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["target"], serde_json::json!({"kind": "fundamental", "type": 7}));
    assert_eq!(v["rho"], serde_json::json!([0, 0, 0, 1]));

    let o = run(&["--format", "json", "kspace", "0,0,0,1", "0,0,1,1", "0,0,1,1"], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rank"], 0);
    assert_eq!(v["corank"], 2);
}
