use std::fs;
use std::process::{Command, Output};

use proxrem::exit;
use proxrem::report::{ReportDocument, ScanDocument};
use proxrem_core::graph6::from_graph6;
use proxrem_core::{Graph, Rational};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_proxrem")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> u8 {
    out.status.code().expect("exit code") as u8
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_layered_prints_graph6_and_notes() {
    let out = run(&["gen", "layered", "--delta", "3", "--k", "2"]);
    assert_eq!(code(&out), exit::OK);
    let text = stdout(&out);
    let g6: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(g6.len(), 1);
    let g = from_graph6(g6[0]).unwrap();
    assert_eq!(g.order(), 14);
    assert!(text.contains("# [ok] order: 14"));
    assert!(text.contains("# [ok] diameter 4k−1: 7"));
    assert!(text.contains("# [ok] radius 2k: 4"));
}

#[test]
fn gen_to_file_then_measure_it() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h3.g6");
    let p = path.to_str().unwrap();
    assert_eq!(code(&run(&["gen", "polarity", "--q", "3", "--out", p])), exit::OK);
    let out = run(&["measure", "--in", p, "--json"]);
    assert_eq!(code(&out), exit::OK);
    let doc: ReportDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.order, 13);
    assert!(doc.classes.unwrap().c4_free);

    let el = dir.path().join("h3.txt");
    assert_eq!(code(&run(&["gen", "polarity", "--q", "3", "--format", "edge-list", "--out", el.to_str().unwrap()])), 0);
    let out2 = run(&["measure", "--in", el.to_str().unwrap(), "--json"]);
    let doc2: ReportDocument = serde_json::from_str(&stdout(&out2)).unwrap();
    assert_eq!((doc2.proximity.clone(), doc2.diameter), (doc.proximity.clone(), doc.diameter));
}

#[test]
fn measure_json_round_trips() {
    let out = run(&["measure", "--family", "cycle", "--n", "5", "--json"]);
    assert_eq!(code(&out), exit::OK);
    let text = stdout(&out);
    let doc: ReportDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.proximity.value(), Rational::new(3, 2));
    assert_eq!(doc.proximity.decimal, "1.5");
    let again = serde_json::to_string_pretty(&doc).unwrap();
    assert_eq!(serde_json::from_str::<ReportDocument>(&again).unwrap(), doc);
}

#[test]
fn measure_table_and_threads() {
    let out = run(&["measure", "--family", "path", "--n", "5", "--threads", "2"]);
    assert_eq!(code(&out), exit::OK);
    let text = stdout(&out);
    assert!(text.contains("proximity          3/2 (1.5)"), "{text}");
    assert!(text.contains("diameter           4"));
}

#[test]
fn check_chain_holds() {
    let out = run(&["check", "--family", "chain", "--q", "4", "--k", "2"]);
    assert_eq!(code(&out), exit::OK);
    assert!(!stdout(&out).contains("VIOLATED"));
    let out = run(&["check", "--family", "chain", "--q", "4", "--k", "2", "--json", "--bounds", "C4-rho-pi,EPP-ball"]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.checks.len(), 2);
    assert!(doc.checks.iter().all(|c| c.applicable && c.holds));
}

#[test]
fn scan_lists_p5() {
    let out = run(&["scan", "--n", "5", "--bounds", "AH-diam-pi"]);
    assert_eq!(code(&out), exit::OK);
    let tight: Vec<String> = stdout(&out)
        .lines()
        .filter_map(|l| l.strip_prefix("tight AH-diam-pi "))
        .map(String::from)
        .collect();
    assert_eq!(tight.len(), 1);
    let g = from_graph6(&tight[0]).unwrap();
    assert_eq!(g.edge_count(), 4);
    assert_eq!(g.max_degree(), 2);
}

#[test]
fn enum_then_scan_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tf6.g6");
    let p = path.to_str().unwrap();
    let out = run(&["enum", "--n", "6", "--filter", "triangle-free", "--out", p]);
    assert_eq!(code(&out), exit::OK);
    let lines = fs::read_to_string(&path).unwrap();
    assert_eq!(lines.lines().count(), 19);

    let mut with_junk = String::from("# comment\n");
    with_junk.push_str(&lines);
    with_junk.push_str("B_\n"); // K2 plus an isolated vertex
    fs::write(&path, with_junk).unwrap();
    let out = run(&["scan", "--in", p, "--json"]);
    assert_eq!(code(&out), exit::OK);
    let doc: ScanDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((doc.scanned, doc.skipped), (19, 1));
    assert!(doc.bounds.iter().all(|b| b.violations == 0));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["gen", "moore"][..],
        &["gen", "chain", "--q", "4"],
        &["gen", "polarity", "--q", "6"],
        &["measure"],
        &["measure", "--in", "x.g6", "--family", "path", "--n", "3"],
        &["check", "--family", "path", "--n", "4", "--bounds", "no-such-bound"],
        &["scan", "--n", "12"],
        &["scan", "--n", "5", "--filter", "bipartite"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&run(args)), exit::USAGE, "{args:?}");
    }
    assert_eq!(code(&run(&["--help"])), exit::OK);
}

#[test]
fn io_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(&["measure", "--in", dir.path().join("missing").to_str().unwrap()])), exit::IO);
    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "A_\nBh\n").unwrap();
    let out = run(&["measure", "--in", bad.to_str().unwrap()]);
    assert_eq!(code(&out), exit::IO);
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.g6:2"));
    let bad_el = dir.path().join("bad.txt");
    fs::write(&bad_el, "3 2\n0 1\n").unwrap();
    assert_eq!(code(&run(&["check", "--in", bad_el.to_str().unwrap()])), exit::IO);
}

#[test]
fn disconnected_input_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.txt");
    fs::write(&path, "4 2\n0 1\n2 3\n").unwrap();
    let out = run(&["measure", "--in", path.to_str().unwrap()]);
    assert_eq!(code(&out), exit::VALIDATION);
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
}

#[test]
fn violation_maps_to_exit_5() {
    assert_eq!(proxrem::CliError::Violation(1).exit_code(), exit::VIOLATION);
    let codes = [exit::OK, exit::USAGE, exit::IO, exit::VALIDATION, exit::VIOLATION];
    for (i, a) in codes.iter().enumerate() {
        assert!(codes[i + 1..].iter().all(|b| a != b));
    }
}

#[test]
fn index_selects_one_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("three.g6");
    fs::write(&path, "A_\nBw\nBg\n").unwrap();
    let p = path.to_str().unwrap();
    let out = run(&["measure", "--in", p, "--index", "2", "--json"]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.edge_count, 2);
    assert_eq!(code(&run(&["measure", "--in", p, "--index", "3"])), exit::USAGE);

    let all = stdout(&run(&["measure", "--in", p, "--json"]));
    let docs: Vec<ReportDocument> =
        serde_json::Deserializer::from_str(&all).into_iter().collect::<Result<_, _>>().unwrap();
    assert_eq!(docs.len(), 3);
    assert_eq!(Graph::complete(3).unwrap().edge_count(), docs[1].edge_count);
}

#[test]
fn bounds_listing() {
    let out = run(&["bounds"]);
    assert_eq!(code(&out), exit::OK);
    let text = stdout(&out);
    assert!(text.contains("TF-rho-pi    ρ − π ≤ (n + 1)/(2·δ) + 4"));
    assert_eq!(text.lines().count(), 2 * 19);
}
