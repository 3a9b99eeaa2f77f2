//! End-to-end tests of the command-line interface: golden outputs, JSON
//! round trips, and the exit-code contract (0 success, 1 usage error,
//! 2 verification or cross-check failure).

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polybases"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn compute_ykey_all_routes() {
    let out = stdout(&["compute", "ykey", "2,3,0", "--n", "3", "--via", "all"]);
    assert!(out.contains("agreed across 6 routes"));
    assert_eq!(out.matches("x^(").count(), 9);
    assert!(out.contains("x^(2,3,0)"));
    assert!(out.contains("x^(0,2,3)"));
}

#[test]
fn compute_trivial_key() {
    let out = stdout(&["compute", "key", "0,0,0", "--n", "3"]);
    assert_eq!(out.trim(), "x^(0,0,0)");
}

#[test]
fn compute_schur() {
    let out = stdout(&["compute", "schur", "2,1", "--n", "3"]);
    assert!(out.contains("2*x^(1,1,1)"));
    assert_eq!(out.matches("x^(").count(), 7);
}

#[test]
fn json_round_trip() {
    let out = stdout(&["compute", "key", "0,3,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    let p = polybases::polynomial::Polynomial::from_json(&v).unwrap();
    assert_eq!(p.num_terms(), 9);
    assert_eq!(p.to_json(), v);
}

#[test]
fn enumerate_counts() {
    let out = stdout(&["enumerate", "KSSF", "0,3,2"]);
    assert!(out.starts_with("9 fillings"));
    let out = stdout(&["enumerate", "RCT", "1,3", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["count"], 10);
    assert_eq!(v["fillings"].as_array().unwrap().len(), 10);
    assert_eq!(v["fillings"][0]["shape"], serde_json::json!([1, 3]));
}

#[test]
fn enumerate_row_frank_words() {
    let out = stdout(&["enumerate", "W", "0,3,2"]);
    assert!(out.starts_with("9 words"));
    assert!(out.contains("33|222|"));
    assert!(out.contains("22|111|"));
    let out = stdout(&["enumerate", "YW", "2,3,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["count"], 9);
    assert_eq!(v["words"][0], serde_json::json!([2, 2, 2, 1, 1]));
}

#[test]
fn expand_schubert_into_keys() {
    let out = stdout(&["expand", "schubert", "31524", "key"]);
    assert!(out.contains("key["));
    let out = stdout(&["expand", "yschubert", "43512", "ykey"]);
    assert!(out.contains("ykey[0,0,0,0,3]"));
    assert!(out.contains("ykey[0,0,2,0,1]"));
}

#[test]
fn expand_not_in_span_exits_2() {
    let out = run(&["expand", "key", "1,0,0", "schur", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in span"));
}

#[test]
fn crystal_dot_and_rf() {
    let out = stdout(&[
        "crystal",
        "--demazure",
        "2,0,1",
        "--from",
        "lowest",
        "--format",
        "dot",
    ]);
    assert!(out.starts_with("digraph crystal {"));
    assert!(out.matches("v").count() >= 5);

    let out = stdout(&["crystal", "--rf", "21534", "--cutoff"]);
    assert!(out.starts_with("6 factorizations"));
    assert!(out.contains("(431)()()"));
    let out = stdout(&["crystal", "--rf", "21534"]);
    assert!(out.starts_with("18 factorizations"));
}

#[test]
fn pipedreams_young() {
    let out = stdout(&["pipedreams", "42513", "--young"]);
    assert!(out.starts_with("5 pipe dreams"));
    assert!(out.contains("x^(0,0,0,1,3)"));
}

#[test]
fn verify_pass_and_exit_codes() {
    let out = run(&["verify", "crystal-b21"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS crystal-b21"));

    let out = run(&[
        "verify",
        "key-equals-atom-sum",
        "--max-size",
        "5",
        "--n",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", "yqs-qs", "--max-size", "4", "--max-len", "3"]);
    assert_eq!(out.status.code(), Some(0));

    // unknown check and bad flags are usage errors
    let out = run(&["verify", "does-not-exist"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["compute"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["compute", "nope", "1,2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_sequential_matches() {
    let out = run(&["verify", "rfyc-ysch", "--sequential"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn classify_brute() {
    let out = run(&["classify", "yqs-qs", "1,3", "--n", "3", "--brute"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("false"));

    let out = run(&["classify", "key-ykey", "0,2,3", "--brute"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("true"));
}

#[test]
fn apply_op_golden() {
    let out = stdout(&["apply-op", "pihat:2,pihat:1", "0,2,3"]);
    let computed: Vec<&str> = out.trim().split(" + ").collect();
    assert_eq!(computed.len(), 9);
    assert!(out.contains("x^(2,3,0)"));
}

#[test]
fn output_to_file() {
    let dir = std::env::temp_dir().join("polybases-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("key032.json");
    let path_str = path.to_str().unwrap();
    stdout(&[
        "compute", "key", "0,3,2", "--format", "json", "--out", path_str,
    ]);
    let content = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(content.trim()).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 9);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn perm_list_fallback() {
    let a = stdout(&["compute", "schubert", "31524"]);
    let b = stdout(&["compute", "schubert", "ignored", "--perm-list", "3,1,5,2,4"]);
    assert_eq!(a, b);
}
