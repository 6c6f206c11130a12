//! Smoke tests of the command-line interface: golden outputs, JSON shapes
//! and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steinhaus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn render_triangle_text() {
    let out = run(&["render", "triangle", "110"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 1 0\n 0 1\n  1\n");

    let empty = run(&["render", "triangle", ""]);
    assert!(empty.status.success());
    assert_eq!(stdout(&empty), "");
}

#[test]
fn render_triangle_json() {
    let out = run(&["render", "triangle", "110", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["first_row"], "110");
    assert_eq!(v["rows"][1], "01");
}

#[test]
fn render_matrix_and_graph() {
    let out = run(&["render", "matrix", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 1\n1 0\n");

    let edges = run(&["render", "graph", "011"]);
    assert!(edges.status.success());
    assert_eq!(stdout(&edges), "1 3\n1 4\n2 3\n3 4\n");

    let json = run(&["render", "graph", "011", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["edges"][0][1], 3);
}

#[test]
fn render_pascal() {
    let out = run(&["render", "pascal", "11100", "11001"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "    1\n   1 1\n  1 0 0\n 0 1 0 0\n0 1 1 0 1\n");
}

#[test]
fn basis_listings() {
    let out = run(&["basis", "--space", "rst", "--n", "10"]);
    assert_eq!(
        stdout(&out),
        "dim=4\n0111111110\n1001010111\n0001001000\n0010001100\n"
    );

    let esg = run(&["basis", "--space", "esg", "--n", "12"]);
    assert_eq!(stdout(&esg), "dim=3\n11111111110\n01101010110\n10011001000\n");

    let empty = run(&["basis", "--space", "hst", "--n", "0"]);
    assert_eq!(stdout(&empty), "dim=0\n");

    let json = run(&["basis", "--space", "dst", "--n", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["class"], "D");
    assert_eq!(v["elements"][0], "011110");
}

#[test]
fn enum_members() {
    let out = run(&["enum", "--space", "dst", "--n", "6"]);
    assert_eq!(
        stdout(&out),
        "coords=0 first_row=000000\ncoords=1 first_row=011110\n"
    );

    let st0 = run(&["enum", "--space", "st", "--n", "0"]);
    assert_eq!(stdout(&st0), "coords= first_row=\n");

    let rst = run(&["enum", "--space", "rst", "--n", "10"]);
    assert_eq!(stdout(&rst).lines().count(), 16);
}

#[test]
fn verify_suites() {
    let dims = run(&["verify", "dims", "--cap", "8"]);
    assert!(dims.status.success());
    assert!(stdout(&dims).lines().all(|l| l.starts_with("PASS")));

    let gensets = run(&["verify", "gensets", "--cap", "3"]);
    assert!(gensets.status.success());
    assert_eq!(stdout(&gensets), "n=1: 1\nn=2: 3\nn=3: 16\n");

    let graphs = run(&["verify", "graphs", "--cap", "6"]);
    assert!(graphs.status.success());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["render", "triangle", "01x"]).status.code(), Some(2));
    assert_eq!(run(&["basis", "--space", "nope", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["render", "pascal", "10"]).status.code(), Some(2));
    assert_eq!(run(&["definitely-not-a-command"]).status.code(), Some(2));
}
