use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use facecover::harness::{gen_planar, GenParams};
use facecover_cli::format::{parse_instance, write_instance};
use proptest::prelude::*;

const C6: &str = "p facecover 6 6 6 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\nt 1\nt 2\nt 3\nt 4\nt 5\nt 6\n";

fn facecover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_facecover")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

/// Edge `1 2` and seven paths `1 x 2` through terminals.
fn seven_children() -> String {
    let mut s = String::from("p facecover 9 15 7 1\ne 1 2\n");
    for x in 3..=9 {
        s += &format!("e 1 {x}\ne 2 {x}\n");
    }
    for x in 3..=9 {
        s += &format!("t {x}\n");
    }
    s
}

#[test]
fn solve_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c6.txt", C6);
    let o = facecover(&["solve", "--exact", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "fcn = 1");
}

#[test]
fn kernelize_p_node_with_seven_children() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p.txt", &seven_children());
    let out = dir.path().join("k.txt");
    let trace = dir.path().join("t.json");
    let o = facecover(&["kernelize", &f, "-o", out.to_str().unwrap(), "--trace", trace.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let kern = parse_instance(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((kern.graph.vertex_count(), kern.graph.edge_count(), kern.graph.terminal_count(), kern.k), (4, 6, 4, 1));
    let t: serde_json::Value = serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(t["decision_hint"], "no");
    let cites = t["rules_fired"].as_array().unwrap().iter().any(|r| r["rule"].as_str().unwrap().contains("4k+2"));
    assert!(cites, "{t}");
    for key in ["profile", "kernel_size", "rules_fired"] {
        assert!(t.get(key).is_some());
    }
}

#[test]
fn verify_accepts_a_kernel() {
    let dir = tempfile::tempdir().unwrap();
    let mut p = GenParams::new(11, 9);
    p.k = 2;
    let f = write(dir.path(), "g.txt", &write_instance(&gen_planar(&p)));
    let out = dir.path().join("k.txt");
    assert_eq!(facecover(&["kernelize", &f, "-o", out.to_str().unwrap()]).status.code(), Some(0));
    let o = facecover(&["verify", &f, out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass"));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("dup.txt", "p facecover 2 2 0 1\ne 1 2\ne 1 2\n"),
        ("order.txt", "p facecover 2 1 0 1\ne 2 1\n"),
        ("count.txt", "p facecover 3 2 0 1\ne 1 2\n"),
        ("k5.txt", "p facecover 5 10 0 1\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\ne 4 5\n"),
    ] {
        let f = write(dir.path(), name, text);
        assert_eq!(facecover(&["classify", &f]).status.code(), Some(2), "{name}");
    }
    assert_eq!(facecover(&["solve", "--exact", "/nonexistent/x.txt"]).status.code(), Some(2));
    assert_eq!(facecover(&["suite", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn budget_refusal_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p.txt", &seven_children());
    let o = facecover(&["solve", "--exact", &f, "--spr-budget", "1", "--rotation-budget", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(facecover(&["solve", "--exact", &f]).status.code(), Some(0));
}

#[test]
fn classify_and_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p.txt", &seven_children());
    let o = facecover(&["classify", &f]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().filter(|l| l.contains(" S unproblematic 1")).count() == 7);
    let dot = dir.path().join("t.dot");
    let o = facecover(&["decompose", &f, "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph spr {"));
    assert_eq!(text.matches("subgraph cluster_").count(), 8);
}

#[test]
fn gen_is_deterministic_and_valid() {
    let a = facecover(&["gen", "--seed", "9", "--n", "30", "--k", "3"]);
    let b = facecover(&["gen", "--seed", "9", "--n", "30", "--k", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let inst = parse_instance(&stdout(&a)).unwrap();
    assert_eq!((inst.graph.vertex_count(), inst.k), (30, 3));
}

#[test]
fn failing_suite_persists_counterexamples() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cx");
    // a budget of one rotation makes the exit instances unsolvable for the oracle
    let o = facecover(&["suite", "exits", "--out", out.to_str().unwrap(), "--spr-budget", "1", "--rotation-budget", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(report["passed"], false);
    let files: Vec<_> = fs::read_dir(out.join("exits")).unwrap().collect();
    assert!(!files.is_empty());
    let first = fs::read_to_string(files[0].as_ref().unwrap().path()).unwrap();
    let body: String = first.lines().filter(|l| !l.starts_with('c')).map(|l| format!("{l}\n")).collect();
    assert!(parse_instance(&body).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn format_round_trip(seed in any::<u64>(), n in 1u32..40, k in 0u32..6, density in 0.0f64..=1.0, fraction in 0.0f64..=1.0) {
        let mut p = GenParams::new(seed, n);
        p.k = k;
        p.density = density;
        p.terminal_fraction = fraction;
        let inst = gen_planar(&p);
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(write_instance(&back), text);
        prop_assert_eq!(back.graph.edge_multiset(), inst.graph.edge_multiset());
        prop_assert_eq!(back.graph.terminal_set(), inst.graph.terminal_set());
    }
}
