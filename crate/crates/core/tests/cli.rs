use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_commgraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

/// `commgraph gen` with whitespace-separated flags, writing to `out`.
fn gen(out: &Path, flags: &str) -> Output {
    let mut args = vec!["gen"];
    args.extend(flags.split_whitespace());
    args.extend(["--out", s(out)]);
    run(&args)
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn commuting_pair_gives_single_edge() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        r#"{"domain":"Q","n":3,"entries":[["1","0","0"],["0","2","0"],["0","0","3"]]}"#,
    );
    let b = write(
        dir.path(),
        "b.json",
        r#"{"domain":"Q","n":3,"entries":[["0","0","0"],["0","1/2","0"],["0","0","7"]]}"#,
    );
    let out = dir.path().join("cert.json");
    let r = run(&["path", s(&a), s(&b), "--out", s(&out)]);
    assert_eq!(r.status.code(), Some(0));
    let cert = json(&out);
    assert_eq!(cert["route"], "commuting");
    assert_eq!(cert["length"], 1);
    assert_eq!(cert["verified"], true);
}

#[test]
fn case_five_pair_gives_length_five() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert!(gen(&a, "--n 4 --blocks c:0:1:1,c:0:2:1 --seed 3")
        .status
        .success());
    assert!(gen(&b, "--n 4 --blocks c:0:3:2 --seed 4").status.success());
    let out = dir.path().join("cert.json");
    let r = run(&["path", s(&a), s(&b), "--out", s(&out)]);
    assert_eq!(r.status.code(), Some(0));
    let cert = json(&out);
    assert_eq!(cert["route"], "case5");
    assert_eq!(cert["length"], 5);
    let r = run(&["verify", s(&out)]);
    assert_eq!(r.status.code(), Some(0));
}

#[test]
fn unsupported_spectrum_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    // companion of x⁴ + x + 1
    let a = write(
        dir.path(),
        "a.json",
        r#"{"domain":"Q","n":4,"entries":[["0","0","0","-1"],["1","0","0","-1"],["0","1","0","0"],["0","0","1","0"]]}"#,
    );
    let b = write(
        dir.path(),
        "b.json",
        r#"{"domain":"Q","n":4,"entries":[["1","0","0","0"],["0","2","0","0"],["0","0","3","0"],["0","0","0","4"]]}"#,
    );
    assert_eq!(run(&["path", s(&a), s(&b)]).status.code(), Some(2));
    assert_eq!(run(&["jordan", s(&a)]).status.code(), Some(2));
}

#[test]
fn tampered_certificate_names_the_edge() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    gen(&a, "--n 3 --class real --seed 1");
    gen(&b, "--n 3 --class mixed --seed 2");
    let out = dir.path().join("cert.json");
    assert_eq!(
        run(&["path", s(&a), s(&b), "--out", s(&out)]).status.code(),
        Some(0)
    );
    let mut cert = json(&out);
    assert!(cert["length"].as_u64().unwrap() > 1);
    cert["vertices"][1]["entries"][0][0] = Value::String("98765".into());
    let bad = write(dir.path(), "bad.json", &cert.to_string());
    let r = run(&["verify", s(&bad)]);
    assert_eq!(r.status.code(), Some(1));
    let text = String::from_utf8_lossy(&r.stdout);
    assert!(text.contains("edge 0"), "{text}");
}

#[test]
fn gen_is_deterministic_and_logs_seed() {
    let args = ["gen", "--n", "5", "--class", "mixed", "--seed", "77"];
    let (x, y) = (run(&args), run(&args));
    assert_eq!(x.status.code(), Some(0));
    assert_eq!(x.stdout, y.stdout);
    let v: Value = serde_json::from_slice(&x.stdout).unwrap();
    assert_eq!(v["seed"], 77);
    assert_eq!(v["n"], 5);
    let other = run(&["gen", "--n", "5", "--class", "mixed", "--seed", "78"]);
    assert_ne!(x.stdout, other.stdout);
}

#[test]
fn graph_order_two_is_disconnected() {
    let r = run(&["graph", "--n", "2", "--p", "2"]);
    assert_eq!(r.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert!(v["stats"]["component_count"].as_u64().unwrap() >= 2);
    assert!(String::from_utf8_lossy(&r.stderr).contains("component"));
}

#[test]
fn graph_with_oracle_and_sample() {
    let r = run(&[
        "graph", "--n", "3", "--p", "2", "--oracle", "idem", "--sample", "10", "--seed", "4",
    ]);
    assert_eq!(r.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["oracle"]["subset_size"], 56);
    assert_eq!(v["oracle"]["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["cross_check"]["sampled"], 10);
    assert_eq!(v["seed"], 4);
}

#[test]
fn malformed_input_exits_three_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        r#"{"domain":"Q","n":2,"entries":[["1"]]}"#,
    );
    let out = dir.path().join("out.json");
    assert_eq!(
        run(&["jordan", s(&a), "--out", s(&out)]).status.code(),
        Some(3)
    );
    assert!(!out.exists());
    assert_eq!(
        run(&["jordan", "/nonexistent/file.json"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["path"]).status.code(), Some(3));
    assert_eq!(
        run(&["graph", "--n", "5", "--p", "2"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["gen", "--n", "3", "--blocks", "r:1:2", "--seed", "1"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn float_mode_paths() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        r#"{"domain":"R","n":4,"entries":[[0.3,-0.7,0.1,0.9],[0.5,0.2,-0.4,0.0],[-0.6,0.8,0.7,0.1],[0.2,-0.3,0.5,-0.9]]}"#,
    );
    let b = write(
        dir.path(),
        "b.json",
        r#"{"domain":"R","n":4,"entries":[[-0.1,0.4,0.6,-0.2],[0.9,-0.5,0.3,0.7],[0.0,0.2,-0.8,0.4],[0.6,0.1,0.3,0.5]]}"#,
    );
    let out = dir.path().join("cert.json");
    let r = run(&["path", s(&a), s(&b), "--mode", "float", "--out", s(&out)]);
    assert_eq!(
        r.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&r.stderr)
    );
    let cert = json(&out);
    assert_eq!(cert["mode"], "float");
    assert!(cert["edge_residuals"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r.as_f64().unwrap() <= 1e-9));
    assert_eq!(run(&["verify", s(&out)]).status.code(), Some(0));
    // exact mode refuses real entries
    assert_eq!(run(&["path", s(&a), s(&b)]).status.code(), Some(3));
}

#[test]
fn jordan_reports_blocks() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    gen(&a, "--n 4 --blocks c:1:2:1,r:3:2 --seed 9");
    let r = run(&["jordan", s(&a)]);
    assert_eq!(r.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[0]["type"], "complex");
    assert_eq!(blocks[1]["lambda"], "3");
}
