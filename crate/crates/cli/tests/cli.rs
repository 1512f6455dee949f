use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sphalg(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sphalg"));
    cmd.args(args).env_remove("SPHALG_CACHE_DIR");
    match cache {
        Some(dir) => cmd.env("SPHALG_CACHE_DIR", dir),
        None => cmd.arg("--no-cache"),
    };
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

/// Runs uncached, expects success, returns the payload.
fn payload(args: &[&str]) -> Value {
    let out = sphalg(args, None);
    assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let envelope: Value = serde_json::from_slice(&out.stdout).unwrap();
    envelope["payload"].clone()
}

fn ints(v: &Value) -> Vec<u64> {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

#[test]
fn bipar_counts_and_listings() {
    assert_eq!(payload(&["bipar", "--k", "2", "--count-only"])["count"], 9);
    let one = payload(&["bipar", "--k", "1"]);
    assert_eq!(one["bipartitions"], serde_json::json!([[[1, 1]], [[1, 0], [0, 1]]]));
    let zero = payload(&["bipar", "--k", "0"]);
    assert_eq!(zero["bipartitions"], serde_json::json!([[]]));
    let gg = payload(&["bipar", "--k", "2", "--gg"]);
    assert_eq!(gg["gg"].as_array().unwrap().len(), 9);
    assert_eq!(gg["passed"], true);
}

#[test]
fn schur_weyl_table() {
    let p = payload(&["dims", "--k", "3", "--n", "6", "--schur-weyl"]);
    let g: Vec<u64> = p["rows"].as_array().unwrap().iter().map(|r| r["g_dim"].as_u64().unwrap()).collect();
    assert_eq!(g, vec![3, 4, 2, 1, 1]);
    assert_eq!(p["square_sum"], 31);
    assert_eq!(p["pairing_sum"], 56);
    assert_eq!(p["passed"], true);
}

#[test]
fn cell_dimension_tables() {
    let sph = payload(&["dims", "--k", "3", "--spherical"]);
    assert_eq!(sph["labels"], serde_json::json!([[], [1], [2], [1, 1], [3]]));
    assert_eq!(ints(&sph["dims"]), vec![3, 4, 2, 1, 1]);
    assert_eq!(sph["square_sum"], 31);
    let full = payload(&["dims", "--k", "3"]);
    assert_eq!(full["square_sum"], 203);
    assert_eq!(full["passed"], true);
}

#[test]
fn decomposition_reports() {
    let p = payload(&["decomp", "--k", "3", "--n", "3", "--spherical"]);
    let labels = p["labels"].as_array().unwrap();
    let at = |l: Value| labels.iter().position(|x| *x == l).unwrap() as u64;
    let (one, three) = (at(serde_json::json!([1])), at(serde_json::json!([3])));
    assert!(p["chains"].as_array().unwrap().iter().any(|c| ints(c) == vec![one, three]));
    assert_eq!(p["simple_dims"][one as usize], 3);

    let identity = |p: &Value| {
        p["matrix"]
            .as_array()
            .unwrap()
            .iter()
            .enumerate()
            .all(|(i, row)| ints(row).iter().enumerate().all(|(j, &v)| v == u64::from(i == j)))
    };
    assert!(identity(&payload(&["decomp", "--k", "3", "--n", "7"])));
    assert!(!identity(&payload(&["decomp", "--k", "2", "--n", "1", "--spherical"])));
}

#[test]
fn zero_parameter_is_refused() {
    let out = sphalg(&["decomp", "--k", "3", "--n", "0"], None);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("n = 0"));
    assert_eq!(code(&sphalg(&["dims", "--k", "3", "--n", "0"], None)), 2);
}

#[test]
fn rank_takes_exact_rationals() {
    let p = payload(&["rank", "--k", "2", "--t", "2/4"]);
    assert_eq!(p["t"], "1/2");
    assert_eq!(p["rank"], 9);
    assert_eq!(payload(&["rank", "--k", "3"])["t"], "7/1");
    assert_eq!(payload(&["rank", "--k", "2", "--t", "-1"])["full_rank"], true);
    assert_eq!(code(&sphalg(&["rank", "--k", "2", "--t", "1/0"], None)), 2);
    assert_eq!(code(&sphalg(&["rank", "--k", "2", "--t", "0.5"], None)), 2);
}

#[test]
fn verification_suites() {
    let bp = payload(&["verify", "--suite", "bp-identity", "--max-k", "10"]);
    assert_eq!(bp["passed"], true);
    let rank = payload(&["verify", "--suite", "rank", "--max-k", "4"]);
    let details: Vec<&str> = rank["checks"].as_array().unwrap().iter().map(|c| c["detail"].as_str().unwrap()).collect();
    assert_eq!(details, ["rank 2, bp_k 2", "rank 9, bp_k 9", "rank 31, bp_k 31", "rank 109, bp_k 109"]);
    let conj = payload(&["verify", "--suite", "conjecture", "--max-k", "6"]);
    assert_eq!(conj["failed"], 0);
    assert_eq!(conj["total"], (1..=6).map(|k| 2 * k).sum::<u64>());
}

#[test]
fn usage_and_bound_errors() {
    assert_eq!(code(&sphalg(&["verify", "--suite", "bogus"], None)), 2);
    assert_eq!(code(&sphalg(&["bipar", "--k", "9"], None)), 2);
    assert_eq!(code(&sphalg(&["verify", "--suite", "rank", "--max-k", "6"], None)), 2);
    assert_eq!(code(&sphalg(&["dims", "--k", "3", "--schur-weyl"], None)), 2);
    assert_eq!(code(&sphalg(&["--version"], None)), 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["decomp", "--k", "4", "--n", "3", "--spherical"];
    assert_eq!(sphalg(&args, None).stdout, sphalg(&args, None).stdout);
}

#[test]
fn cached_and_fresh_output_match() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["dims", "--k", "3", "--n", "6"];
    let fresh = sphalg(&args, None);
    let first = sphalg(&args, Some(dir.path()));
    let second = sphalg(&args, Some(dir.path()));
    assert_eq!(fresh.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let csv = ["dims", "--k", "3", "--n", "6", "--format", "csv"];
    assert_eq!(sphalg(&csv, None).stdout, sphalg(&csv, Some(dir.path())).stdout);
    let text = String::from_utf8(sphalg(&csv, Some(dir.path())).stdout).unwrap();
    assert!(text.starts_with("lambda,\"K[(5,1)]\",\"K[(4,1,1)]\",\"K[(3,3)]\",specht_dim,g_dim\n"), "{text}");
}

#[test]
fn failed_checks_exit_one() {
    // a stored envelope recording a failure is reported as one
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--suite", "pairing", "--max-k", "2"];
    assert_eq!(code(&sphalg(&args, Some(dir.path()))), 0);
    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let stored = std::fs::read_to_string(&entry).unwrap();
    assert!(stored.contains("\"passed\":true"));
    std::fs::write(&entry, stored.replace("\"passed\":true", "\"passed\":false")).unwrap();
    assert_eq!(code(&sphalg(&args, Some(dir.path()))), 1);
}

#[test]
fn timing_is_opt_in() {
    let plain: Value = serde_json::from_slice(&sphalg(&["bipar", "--k", "1"], None).stdout).unwrap();
    assert!(plain.get("timing").is_none());
    let keys: Vec<&String> = plain.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["version", "config", "payload", "provenance"]);
    let timed: Value = serde_json::from_slice(&sphalg(&["bipar", "--k", "1", "--timing"], None).stdout).unwrap();
    assert!(timed["timing"]["elapsed_ms"].is_u64());
}
