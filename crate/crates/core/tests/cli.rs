//! Runs the compiled binary end to end.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use pairing_prism::graph::generators::{complete_bipartite, complete_graph, cycle, hypercube};
use pairing_prism::graph::graph6::{decode_graph6, encode_graph6};
use pairing_prism::graph::strong_product;
use serde_json::Value;

fn bin(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pairing-prism"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gen_families_and_products() {
    let out = bin(&["gen", "hypercube", "3"], None);
    assert!(out.status.success());
    assert_eq!(decode_graph6(String::from_utf8_lossy(&out.stdout).trim()).unwrap(), hypercube(3).unwrap());
    let out = bin(&["gen", "star", "1", "3"], None);
    assert_eq!(decode_graph6(String::from_utf8_lossy(&out.stdout).trim()).unwrap(), complete_bipartite(1, 3).unwrap());
    let out = bin(&["gen", "product", "--op", "strong", "C4", "K2"], None);
    let g = decode_graph6(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(g, strong_product(&cycle(4).unwrap(), &complete_graph(2).unwrap()).unwrap());
    assert_eq!(g.order(), 8);
    let out = bin(&["gen", "hypercube", "x"], None);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out.stderr.is_empty());
}

#[test]
fn extend_all_pairings_of_q3_as_prism_of_q2() {
    let out = bin(&["extend", "--base", "Q2", "--k", "1", "--all", "--summary-only", "--workers", "2"], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!((v["total"].as_u64(), v["ok"].as_u64(), v["failed"].as_u64()), (Some(105), Some(105), Some(0)));
}

#[test]
fn extend_random_on_k4_prism() {
    let out = bin(&["extend", "--base", "K4", "--k", "1", "--random", "100", "--seed", "7"], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["ok"], 100);
    for r in v["results"].as_array().unwrap() {
        let pairs: Vec<[usize; 2]> = serde_json::from_value(r["matching"].clone()).unwrap();
        assert_eq!(pairs.len(), 4);
        assert_eq!(r["cycle"].as_array().unwrap().len(), 8);
    }
}

#[test]
fn extend_reports_stuck_base_pairing() {
    let g6 = encode_graph6(&cycle(6).unwrap());
    let out = bin(&["extend", "--base", &g6, "--k", "0", "--pairing", r#"{"n":6,"pairs":[[0,1],[2,5],[3,4]]}"#], None);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["ok"], false);
    assert_eq!(v["error"], "base_not_extendable");
    assert_eq!(v["stuck_pairing"], serde_json::json!([[0, 1], [2, 5], [3, 4]]));
}

#[test]
fn verify_ph_exit_contract() {
    let out = bin(&["verify-ph"], Some(&encode_graph6(&complete_bipartite(3, 3).unwrap())));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["is_ph"], true);
    let out = bin(&["verify-ph", "C6"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["witness"].is_object());
    let out = bin(&["verify-ph", "Q4", "--max-pairings", "100"], None);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["budget_exhausted"], true);
}

#[test]
fn tree_commands() {
    let out = bin(&["ml", "K1,3"], None);
    let v = json(&out);
    assert_eq!((v["ml"].as_u64(), v["exact"].as_bool()), (Some(3), Some(true)));
    assert_eq!(v["witness_edges"].as_array().unwrap().len(), 3);
    assert_eq!(json(&bin(&["p-bound", "P4"], None))["bound"], 5);
    let out = bin(&["p-exact", "Q2"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["p"], 0);
    let out = bin(&["reduce-tree", "K1,3"], None);
    let v = json(&out);
    assert_eq!(v["history"], serde_json::json!([4, 3, 2]));
}

#[test]
fn outputs_are_deterministic() {
    let args = ["extend", "--base", "Q3", "--k", "1", "--random", "50", "--seed", "11"];
    let a = bin(&args, None);
    let b = bin(&[&args[..], &["--workers", "4"]].concat(), None);
    assert_eq!(a.stdout, b.stdout);
}
