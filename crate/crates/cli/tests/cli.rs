use std::process::{Command, Output};

use parcat_core::algebra::AlgebraElement;
use parcat_core::{PartitionDiagram, Poly};

fn parcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parcat")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = parcat(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn closed_loop() {
    assert_eq!(stdout(&["compose", "1 x 0 : {1'}", "0 x 1 : {1}"]).trim(), "0 x 0 : (empty), loops=1");
    assert_eq!(
        stdout(&["compose", "1 x 0 : {1'}", "0 x 1 : {1}", "--t", "5/2"]).trim(),
        "0 x 0 : (empty), loops=1, scalar=5/2"
    );
}

#[test]
fn first_left_dot() {
    assert_eq!(stdout(&["jm", "--n", "1", "--j", "1", "--left"]).trim(), "1 x 1 : {1}{1'} * 1");
}

#[test]
fn basis_round_trips() {
    let text = stdout(&["basis", "1", "2", "--format", "tsv"]);
    let ds: Vec<PartitionDiagram> = text.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(ds.len(), 5);
    for (d, l) in ds.iter().zip(text.lines()) {
        assert_eq!(d.to_string(), l);
    }
    assert_eq!(stdout(&["basis", "1", "1"]).lines().last().unwrap(), "2 diagrams");
}

#[test]
fn elements_round_trip() {
    let text = stdout(&["jm", "--n", "2", "--j", "2", "--right"]);
    let f: AlgebraElement<Poly> = text.parse().unwrap();
    assert_eq!(f.to_string().trim(), text.trim());
    let hc = stdout(&["hc", &text]);
    assert_eq!(hc.trim(), "() * (T - 1)");
}

#[test]
fn reduced_kronecker_of_boxes() {
    assert_eq!(stdout(&["kron", "--reduced", "(1)", "(1)", "(1)"]).trim(), "1");
    assert_eq!(stdout(&["kron", "--reduced", "--method", "littlewood", "(1)", "(1)", "(1)"]).trim(), "1");
}

#[test]
fn blocks_at_two() {
    let text = stdout(&["blocks", "--t", "2", "--max", "5"]);
    assert!(text.contains("kappa=(2): {(), (3), (3,1), (3,1,1)}"));
    assert!(text.contains("kappa=(1,1): {(1), (2), (2,2), (2,2,1)}"));
    let js: serde_json::Value = serde_json::from_str(&stdout(&["blocks", "--t", "2", "--max", "5", "--format", "json"])).unwrap();
    let total: usize = js["blocks"].as_array().unwrap().iter().map(|b| b["members"].as_array().unwrap().len()).sum();
    assert_eq!(total, 1 + 1 + 2 + 3 + 5 + 7);
}

#[test]
fn gram_ranks() {
    assert_eq!(stdout(&["gram", "()", "1", "--t", "0"]).trim(), "lambda=() m=1 t=0 dim=1 rank=0");
    let js: serde_json::Value = serde_json::from_str(&stdout(&["gram", "(1)", "1", "--t", "3", "--format", "json"])).unwrap();
    assert_eq!(js["rank"], 1);
    assert_eq!(js["matrix"], serde_json::json!([["1"]]));
}

#[test]
fn exit_codes() {
    assert_eq!(parcat(&["compose", "nonsense"]).status.code(), Some(2));
    assert_eq!(parcat(&["kron", "(1", "(1)", "(1)"]).status.code(), Some(2));
    assert_eq!(parcat(&["gram", "()", "1", "--t", "1.5"]).status.code(), Some(2));
    assert_eq!(parcat(&["kron", "(1)", "(2)", "(1)"]).status.code(), Some(3));
    assert_eq!(parcat(&["jm", "--n", "2", "--j", "3", "--left"]).status.code(), Some(3));
    assert_eq!(parcat(&["compose", "1 x 1 : {1,1'}", "2 x 2 : {1,1'}{2,2'}"]).status.code(), Some(3));
    assert_eq!(parcat(&["blocks"]).status.code(), Some(3));
}

#[test]
fn verify_small() {
    let out = parcat(&["verify", "all", "--bounds", "small", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("0 failed"));
    assert!(!text.contains("FAIL "));
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&["central", "--n", "2", "--r", "2", "--c", "--format", "json"]);
    let b = stdout(&["central", "--n", "2", "--r", "2", "--c", "--format", "json"]);
    assert_eq!(a, b);
}
