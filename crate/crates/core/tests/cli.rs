use std::path::PathBuf;
use std::process::{Command, Output};

use signed_colouring::io::{parse_colouring, parse_graph_file};
use signed_colouring::check_proper;

fn fixture(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(rel)
        .display()
        .to_string()
}

fn sgcolour(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgcolour"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph(rel: &str) -> signed_colouring::SignedGraph {
    parse_graph_file(&std::fs::read_to_string(fixture(rel)).unwrap()).unwrap()
}

#[test]
fn chi_prints_value_and_proper_witness() {
    let out = sgcolour(&["chi", &fixture("graphs/c4_unbalanced.txt")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let (head, body) = text.split_once('\n').unwrap();
    assert_eq!(head, "chi 3");
    let phi = parse_colouring(body).unwrap();
    assert!(check_proper(&graph("graphs/c4_unbalanced.txt"), &phi).is_ok());
}

#[test]
fn colour_reports_infeasible_with_status_one() {
    let path = fixture("graphs/k4_balanced.txt");
    assert_eq!(sgcolour(&["colour", &path, "--n", "3"]).status.code(), Some(1));
    let ok = sgcolour(&["colour", &path, "--n", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    let phi = parse_colouring(&stdout(&ok)).unwrap();
    assert!(check_proper(&graph("graphs/k4_balanced.txt"), &phi).is_ok());
}

#[test]
fn brooks_and_complete() {
    let out = sgcolour(&["brooks", &fixture("graphs/petersen.txt")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("bound 3\nclass none\n"));
    let out = sgcolour(&["complete", &fixture("graphs/k4_balanced.txt")]);
    assert_eq!(out.status.code(), Some(0));
    let phi = parse_colouring(&stdout(&out)).unwrap();
    assert!(check_proper(&graph("graphs/k4_balanced.txt"), &phi).is_ok());
    assert_eq!(sgcolour(&["complete", &fixture("graphs/c4_unbalanced.txt")]).status.code(), Some(2));
}

#[test]
fn balance_and_antibalance() {
    let k4 = fixture("graphs/k4_balanced.txt");
    let out = sgcolour(&["balance", &k4]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text == "balanced\nswitch 0\n" || text == "balanced\nswitch 1 2 3\n", "{text}");
    assert_eq!(sgcolour(&["antibalance", &k4]).status.code(), Some(1));
    let tri = fixture("graphs/triangle_negative.txt");
    assert_eq!(sgcolour(&["balance", &tri]).status.code(), Some(1));
    assert_eq!(sgcolour(&["antibalance", &tri]).status.code(), Some(0));
}

#[test]
fn gamma_and_construct() {
    let out = sgcolour(&["gamma", &fixture("graphs/digon_loop.txt")]);
    assert_eq!(stdout(&out), "gamma 1\ngamma_star 2\nchi 3\n");
    let out = sgcolour(&["construct-gn", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(parse_graph_file(&stdout(&out)).unwrap().vertex_count(), 4);
    assert_eq!(sgcolour(&["construct-gn", "0"]).status.code(), Some(2));
}

#[test]
fn from_partition_kinds() {
    let c4 = fixture("graphs/c4_unbalanced.txt");
    for (file, kind) in [
        ("partitions/c4_matchings.txt", "two-edge-forests"),
        ("partitions/c4_vertex_forests.txt", "vertex-forests"),
        ("partitions/c4_independent_forest.txt", "independent-forest"),
    ] {
        let out = sgcolour(&["from-partition", &c4, "--partition", &fixture(file), "--kind", kind]);
        assert_eq!(out.status.code(), Some(0), "{kind}");
        let phi = parse_colouring(&stdout(&out)).unwrap();
        assert!(check_proper(&graph("graphs/c4_unbalanced.txt"), &phi).is_ok());
    }
    let k4 = fixture("graphs/k4_balanced.txt");
    let out = sgcolour(&["from-partition", &k4, "--partition", &fixture("partitions/k4_acyclic.txt"), "--kind", "acyclic"]);
    assert_eq!(out.status.code(), Some(0));
    // A 4-cycle is not a forest.
    let bad = sgcolour(&["from-partition", &c4, "--partition", &fixture("partitions/c4_one_class.txt"), "--kind", "vertex-forests"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_commands() {
    let out = sgcolour(&["verify", "brooks", "--max-vertices", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("result: PASS"));
    let out = sgcolour(&["verify", "antibalance", "--max-vertices", "2", "--verbose", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.starts_with("antibalance\t0\tok")));
    let planar = sgcolour(&["verify", "planar_conjecture", "--planar-dir", &fixture("planar")]);
    assert_eq!(planar.status.code(), Some(0));
    assert_eq!(sgcolour(&["verify", "riemann"]).status.code(), Some(2));
    assert_eq!(sgcolour(&["verify", "brooks", "--max-vertices", "6"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("sgcolour-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("loop.txt");
    std::fs::write(&bad, "1 1\n0 0 +\n").unwrap();
    let out = sgcolour(&["chi", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2: positive loop"));
    assert_eq!(sgcolour(&["chi", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(sgcolour(&["colour"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}
