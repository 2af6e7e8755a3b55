use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn gallai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallai")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_input(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("gallai-cli-{}-{name}.json", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

#[test]
fn circuits_of_a2() {
    let out = gallai(&["circuits", "--root", "A", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["circuits"], serde_json::json!([{"pos": [0, 1], "neg": [2]}]));
    assert_eq!(v["acyclic"], true);
}

#[test]
fn forest_has_no_circuits() {
    let path = temp_input("forest", r#"{"type":"digraph","n":3,"edges":[[1,2],[2,3]]}"#);
    let out = gallai(&["circuits", "--input", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("no circuits"));
}

#[test]
fn malformed_input_exits_2() {
    let path = temp_input("bad", "{\"type\": ");
    let out = gallai(&["circuits", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn transitive_mode_needs_orientation() {
    let path = temp_input("graph", r#"{"type":"graph","n":3,"edges":[[1,2],[2,3],[1,3]]}"#);
    let out = gallai(&["count", "--input", path.to_str().unwrap(), "--mode", "transitive"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tournament_polynomial() {
    let out = gallai(&["count", "--root", "A", "4", "--mode", "transitive", "--poly", "-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["a"], serde_json::json!([1, 11, 5]));
    assert_eq!(v["polynomial"]["falling"], serde_json::json!([0, 1, 11, 5]));
    assert_eq!(v["count"], 24);
}

#[test]
fn simple_graph_gallai_two_colorings() {
    let path = temp_input("c4", r#"{"type":"graph","n":4,"edges":[[1,2],[2,3],[3,4],[1,4],[1,3]]}"#);
    let out = gallai(&["count", "--input", path.to_str().unwrap(), "--mode", "gallai", "-k", "2"]);
    assert_eq!(json(&out)["count"], 32);
}

#[test]
fn maximal_partitions_of_k5() {
    let out = gallai(&["count", "--root", "A", "5", "--maxpart"]);
    assert_eq!(json(&out)["maxpart"], 105);
}

#[test]
fn verify_suites() {
    let out = gallai(&["verify", "m3d", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);
    let out = gallai(&["verify", "typeB", "--n", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("type B n=4: enumerated vs formula,29,29,true"));
    assert_eq!(gallai(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn qsym_with_schur() {
    let out = gallai(&["qsym", "--family", "T", "--n", "4", "--k", "3", "--schur"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degree"], 4);
    assert_eq!(v["positive"], true);
    assert_eq!(v["schur"], serde_json::json!({"(2,2)": 1, "(3,1)": 1}));
}

#[test]
fn hilbert_of_tournament() {
    let out = gallai(&["hilbert", "--root", "A", "4", "--mode", "transitive", "-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["increments"], serde_json::json!([1, 6, 11, 6]));
    assert_eq!(v["agreed"], true);
    assert_eq!(v["primes"].as_array().unwrap().len(), 3);
}

#[test]
fn hilbert_budget_exits_3() {
    let out = gallai(&["hilbert", "--root", "A", "5", "-k", "3", "--budget-points", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bijection_round_trips() {
    let out = gallai(&["bijection", "gallai-matching", "--n", "4", "--check", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "15 round trips OK");
    for name in ["gallai-tree", "tournament-rainbow", "transitive-permutation", "syt-dyck"] {
        let out = gallai(&["bijection", name, "--n", "4", "--check"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(json(&out)["pass"], true);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "rank-theorems", "--small", "--seed", "7"];
    assert_eq!(gallai(&args).stdout, gallai(&args).stdout);
    let args = ["qsym", "--family", "G", "--n", "5", "--k", "3", "--schur"];
    assert_eq!(gallai(&args).stdout, gallai(&args).stdout);
}
