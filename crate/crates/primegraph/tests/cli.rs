use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use primegraph::catalog::parse_dump;
use primegraph::smallgraph::parse_graph;
use primegraph::witness::parse_blueprint;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primegraph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

const DIAMOND17: &str = "vertices: 2,3,5,17\nedge: 2 3\nedge: 2 5\nedge: 2 17\nedge: 5 17\nedge: 3 17\n";

#[test]
fn pgc_prints_the_complement_and_dot() {
    let dot = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("psl16.dot");
    let o = run(&["pgc", "--group", "PSL2 q=16", "--dot", path_str(&dot)]);
    assert_eq!(o.status.code(), Some(0));
    let (g, _) = parse_graph(&stdout(&o)).unwrap();
    assert_eq!(g.edges().len(), 5);
    assert!(g.has_edge(3, 17) && !g.has_edge(3, 5));
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph pgc {"));

    let o = run(&["pgc", "--group", "PSL2 q=16 * MODULE(r=3,row=chi10)"]);
    assert_eq!(o.status.code(), Some(0));
    let (m, _) = parse_graph(&stdout(&o)).unwrap();
    assert_eq!(*m.edges(), g.edges().iter().copied().filter(|&e| e != (2, 3)).collect());
}

#[test]
fn classify_exit_codes() {
    let diamond = tmp("diamond17.txt", DIAMOND17);
    let o = run(&["classify", "--target", "psl2-16", "--graph", path_str(&diamond), "--root", "17"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "REALIZABLE (condition 2, X={2,3,5,17}, root 17, entry diamond@deg3, via PSL2 q=16)"
    );

    let paw = tmp("paw_deg2.txt", "vertices: 2,3,5,17\nedge: 2 17\nedge: 2 3\nedge: 3 17\nedge: 2 5\nroot: 17\n");
    let o = run(&["classify", "--target", "psl2-16", "--graph", path_str(&paw)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("UNREALIZABLE"));

    let bull = tmp("bull.txt", "vertices: 2,3,5,11,31\nedge: 5 11\nedge: 5 31\nedge: 11 31\nedge: 2 11\nedge: 3 31\nroot: 5\n");
    let o = run(&["classify", "--target", "psl2-2f", "--f", "5", "--graph", path_str(&bull)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("OPEN"));

    let o = run(&["classify", "--target", "solvable", "--graph", path_str(&diamond), "--verbose"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_and_data_errors() {
    assert_eq!(run(&["classify", "--target", "psl2-16"]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    let bad = tmp("bad.txt", "vertices: 2,3\nedge: 2 4\n");
    let o = run(&["classify", "--target", "psl2-16", "--graph", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let diamond = tmp("diamond17b.txt", DIAMOND17);
    assert_eq!(run(&["classify", "--target", "psl2-13", "--graph", path_str(&diamond)]).status.code(), Some(65));
    assert_eq!(run(&["classify", "--target", "psl2-16", "--graph", "/nonexistent/g.txt"]).status.code(), Some(65));
    assert_eq!(run(&["pgc", "--group", "PSL9 q=2"]).status.code(), Some(65));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn witness_writes_a_parsable_blueprint() {
    let g = tmp("pendant.txt", "vertices: 2,3,5,7,17\nedge: 2 3\nedge: 2 5\nedge: 2 17\nedge: 5 17\nedge: 3 17\nedge: 17 7\n");
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("bp.txt");
    let o = run(&["witness", "--target", "psl2-16", "--graph", path_str(&g), "--root", "17", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("round-trip verified"));
    let b = parse_blueprint(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(b.outer[0].prime, 8161);

    let o = run(&["witness", "--target", "psl2-16", "--graph", path_str(&g), "--root", "17"]);
    assert_eq!(parse_blueprint(&stdout(&o)).unwrap(), b);
}

#[test]
fn scan_k4_report() {
    let o = run(&["scan-k4", "--max-f", "13"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for f in [5, 7, 13] {
        assert!(text.lines().any(|l| l.starts_with(&format!("f={f} ")) && l.ends_with(" K4")), "{text}");
    }
    assert!(text.contains("f=11 2^f-1=2047 (2^f+1)/3=683 non-K4 (2047=23·89)"), "{text}");
}

#[test]
fn oracle_compare_matches() {
    let o = run(&["oracle-compare", "--q", "16"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "MATCH: analytic == brute force (4080 elements)");
    assert_eq!(run(&["oracle-compare", "--q", "9", "--family", "pgl2"]).status.code(), Some(0));
    assert_eq!(run(&["oracle-compare", "--q", "9", "--family", "gl3"]).status.code(), Some(64));
}

#[test]
fn fixed_points_commands() {
    let o = run(&["fixed-points", "--generic", "f=5", "--order", "31"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("summed: 1 2 1 1"));
    assert!(text.contains("printed m4: 31 (summation gives 1)"));

    let table = concat!(env!("CARGO_MANIFEST_DIR"), "/tables/psl2_11_p3.tbl");
    let o = run(&["fixed-points", "--table", table]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("extension graphs: 2"));

    assert_eq!(run(&["fixed-points", "--generic", "f=5", "--order", "7"]).status.code(), Some(65));
    assert_eq!(run(&["fixed-points"]).status.code(), Some(64));
}

#[test]
fn catalog_dump_round_trips() {
    let o = run(&["catalog", "dump", "--target", "psl2-2f", "--f", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let entries = parse_dump(&stdout(&o)).unwrap();
    assert_eq!(entries.iter().filter(|e| e.status.to_string() == "OPEN").count(), 8 + 1);
}

#[test]
fn probe_conjecture_reports() {
    let o = run(&["probe-conjecture", "--a", "psl2-11", "--b", "psl2-19", "--max-vertices", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(", 0 disagreements"));
    let o = run(&["probe-conjecture", "--a", "psl2-16", "--b", "psl2-11", "--max-vertices", "5"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("disagree:")));
}
