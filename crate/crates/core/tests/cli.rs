use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_latpoly"))
}

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("latpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const W2_31: &str = "# label: wide\n0 0 0\n1 0 0\n0 1 0\n-1 -1 0\n1 2 3\n";

#[test]
fn classify_and_invariants() {
    let f = fixture("w231.txt", W2_31);
    let o = run(&["classify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("family W2-(3,1)"), "{}", stdout(&o));
    let o = run(&["--json", "invariants", f.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["width"], 2);
    assert_eq!(v["five_point_vector"], serde_json::json!([-9, 3, 3, 3, 0]));
    assert_eq!(v["label"], "wide");
}

#[test]
fn stdin_and_json_documents() {
    let mut child = bin().args(["width", "-"]).stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(b"{\"points\": [[0,0,0],[2,0,0],[0,2,0],[0,0,2]]}").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("width 2\n"), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    let unit = fixture("unit.txt", "0 0 0\n1 0 0\n0 1 0\n0 0 1\n");
    let t35 = fixture("t35.txt", "0 0 0\n1 0 0\n0 0 1\n3 5 1\n");
    let big = fixture("big.txt", "0 0 0\n2 0 0\n0 2 0\n0 0 2\n");
    let flat = fixture("flat.txt", "0 0 0\n1 0 0\n0 1 0\n");
    let bad = fixture("bad.txt", "0 0 0\n1 0\n");
    let s = |p: &PathBuf| p.to_str().unwrap().to_string();
    assert_eq!(run(&["equiv", &s(&unit), &s(&t35)]).status.code(), Some(1));
    assert_eq!(run(&["equiv", &s(&t35), &s(&t35)]).status.code(), Some(0));
    assert_eq!(run(&["empty-tetra", &s(&big)]).status.code(), Some(1));
    let o = run(&["empty-tetra", &s(&t35)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("empty T("), "{}", stdout(&o));
    assert_eq!(run(&["invariants", &s(&bad)]).status.code(), Some(2));
    assert_eq!(run(&["width", "/nonexistent/latpoly"]).status.code(), Some(2));
    assert_eq!(run(&["classify", &s(&flat)]).status.code(), Some(3));
    assert_eq!(run(&["polygons", "--max-size", "20"]).status.code(), Some(3));
    assert_eq!(run(&["classify", &s(&big)]).status.code(), Some(0));
}

#[test]
fn atlas_is_deterministic() {
    let a = run(&["atlas", "--threads", "1"]);
    let b = run(&["atlas"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["max_width"], 2);
    assert_eq!(stdout(&run(&["atlas", "--widths-only"])), "max width 2\n");
}

#[test]
fn minimality_and_polygons() {
    let f = fixture("diamond.txt", "1 0 0\n-1 0 0\n0 1 3\n0 -1 3\n");
    let o = run(&["minimality", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verdict minimal\n"), "{}", stdout(&o));
    let o = run(&["polygons", "--max-size", "6"]);
    let out = stdout(&o);
    for line in ["size 3: 1 classes", "size 4: 3 classes", "size 5: 6 classes", "size 6: 13 classes"] {
        assert!(out.contains(line), "{out}");
    }
    let o = run(&["--json", "polygons", "--max-size", "6", "--minimal"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
}
