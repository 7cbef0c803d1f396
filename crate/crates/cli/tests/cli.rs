use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn xcond(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xcond")).args(args).env_remove("XCOND_PAIR_CAP").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gb_of_path3_rees_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p3.txt", "vars: x1, x2, x3, y1, y2\norder: lex[y1>y2>x1>x2>x3]\nx2*y1 - x1*x3*y2\n");
    let out = xcond(&["gb", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["gb"], serde_json::json!(["x2*y1 - x1*x3*y2"]));
    assert_eq!(v["initial_ideal"], serde_json::json!(["x2*y1"]));
}

#[test]
fn gb_order_override() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "i.txt", "vars: a, b\na^2 - b\n");
    let v = json(&xcond(&["gb", &f, "--order", "lex[b>a]"]));
    assert_eq!(v["initial_ideal"], serde_json::json!(["b"]));
}

#[test]
fn gb_empty_and_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "e.txt", "vars: a\n");
    let out = xcond(&["gb", &empty]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["size"], 0);

    let bad = write(dir.path(), "b.txt", "vars: a, b\na*+b\n");
    let out = xcond(&["gb", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position"));
}

#[test]
fn powers_certified() {
    let out = xcond(&["powers", "--path", "5", "--kmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let powers = v["powers"].as_array().unwrap();
    assert_eq!(powers.len(), 3);
    assert!(powers.iter().all(|c| c["certified"] == "monomialcase"));

    assert_eq!(xcond(&["powers", "--biclique", "2", "2", "2", "--kmax", "2"]).status.code(), Some(0));

    let out = xcond(&["powers", "--path", "5", "--kmax", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["powers"], serde_json::json!([]));
}

#[test]
fn verify_families() {
    let v = json(&xcond(&["verify", "--path", "8"]));
    assert_eq!(v["initial_match"], true);
    assert_eq!(v["reduced_match"], false);
    assert_eq!(v["missing_elements"], serde_json::json!(["y1*y5 - x3*x6*y4*y9"]));

    let v = json(&xcond(&["verify-family", "--biclique", "2", "3", "2"]));
    assert_eq!((v["reduced_match"].clone(), v["gb_size"].clone()), (Value::Bool(true), 12.into()));

    let out = xcond(&["verify", "--cw", "p=1", "q=1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["initial_match"], true);

    let v = json(&xcond(&["verify", "--cw", "p=3,1,2,1", "q=2,0,1"]));
    assert_eq!(v["mode"], "combinatorial");
}

#[test]
fn verify_needs_family() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "1 2\n");
    assert_eq!(xcond(&["verify", "--graph", &g]).status.code(), Some(2));
}

#[test]
fn pair_cap_exits_one() {
    let out = Command::new(env!("CARGO_BIN_EXE_xcond"))
        .args(["verify", "--path", "8"])
        .env("XCOND_PAIR_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn binomial_edge_mg() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", "1 2\n2 3\n3 4\n4 1\n");
    let out = xcond(&["binomial-edge", "--graph", &c4, "--check", "mg"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["chordal"], false);
    assert_eq!(v["mg"]["violations"], serde_json::json!(["x1*x4*y3"]));
    assert_eq!(v["admissible_paths"].as_array().unwrap().len(), 6);
}

#[test]
fn xcond_exit_code_tracks_condition() {
    let dir = tempfile::tempdir().unwrap();
    // C5 has a nonquadratic initial ideal under the default order.
    let c5 = write(dir.path(), "c5.txt", "1 2\n2 3\n3 4\n4 5\n5 1\n");
    let out = xcond(&["xcond", "--graph", &c5]);
    let v = json(&out);
    assert_eq!(out.status.code(), Some(if v["x_condition"] == true { 0 } else { 1 }));
    assert_eq!(xcond(&["xcond", "--path", "5"]).status.code(), Some(0));
}

#[test]
fn cycle_complex() {
    let out = xcond(&["cycle-complex", "--r", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["betti"], serde_json::json!([5, 5, 1]));
    assert_eq!(xcond(&["cycle-complex", "--r", "3"]).status.code(), Some(2));
}

#[test]
fn graph_stats_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("stats.json");
    let out = xcond(&["graph-stats", "--path", "4", "--output", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["minimal_vertex_covers"], serde_json::json!([["x1", "x3"], ["x2", "x3"], ["x2", "x4"]]));
}

#[test]
fn output_is_deterministic() {
    for args in [&["rees", "--biclique", "2", "2", "2"][..], &["powers", "--path", "5", "--kmax", "2", "--pretty"]] {
        let a = xcond(args);
        let b = xcond(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn family_flags_are_exclusive() {
    assert_eq!(xcond(&["rees", "--path", "4", "--biclique", "1", "1", "1"]).status.code(), Some(2));
    assert_eq!(xcond(&["rees", "--cw", "p=1", "r=1"]).status.code(), Some(2));
}
