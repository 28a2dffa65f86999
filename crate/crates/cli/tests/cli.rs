//! End-to-end runs of the `outerbound` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use outerbound::{component, outermost_boundary, Adjacency, Cell, Window};
use outerbound_cli::json::{parse_decomposition, DecompositionJson};
use outerbound_cli::{gridfile, simulate};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_outerbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const DIAGONAL_PAIR: &str = "origin: 0 1\n.#\n#.\n";
const U_PENTOMINO: &str = "origin: 0 1\n#.#\n###\n";

#[test]
fn one_cell_json() {
    let g = scratch("one.txt", "origin: 0 0\n#\n");
    let o = bin(&[
        "boundary",
        "--grid",
        g.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let d = parse_decomposition(&stdout(&o)).unwrap();
    assert_eq!(d.cycles.len(), 1);
    assert_eq!(d.edge_count(), 4);
}

#[test]
fn diagonal_pair_tree_edge() {
    let g = scratch("pair.txt", DIAGONAL_PAIR);
    let o = bin(&["boundary", "--grid", g.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cycles"].as_array().unwrap().len(), 2);
    assert_eq!(v["tree"]["edges"], serde_json::json!([[0, 1, [1, 1]]]));
}

#[test]
fn u_pentomino_ascii_marks() {
    let g = scratch("u.txt", U_PENTOMINO);
    let o = bin(&[
        "boundary",
        "--grid",
        g.to_str().unwrap(),
        "--format",
        "ascii",
    ]);
    let text = stdout(&o);
    let marks = text.chars().filter(|&c| c == '-' || c == '|').count();
    assert_eq!(marks, 12, "{text}");
}

#[test]
fn json_round_trip_is_identical() {
    for text in [
        DIAGONAL_PAIR,
        U_PENTOMINO,
        "origin: 1 1\n#.#.\n.#..\n#.##\n",
    ] {
        let f = gridfile::parse(text).unwrap();
        let comp = component(&f.grid, f.seed, Adjacency::Star)
            .unwrap()
            .unwrap();
        let d = outermost_boundary(&comp).unwrap();
        let emitted = serde_json::to_string(&DecompositionJson::from(&d)).unwrap();
        assert_eq!(parse_decomposition(&emitted).unwrap(), d);
    }
}

#[test]
fn svg_has_one_stroked_path_per_cycle() {
    let g = scratch("chain.txt", "origin: 0 2\n..#\n.#.\n#..\n");
    let o = bin(&[
        "boundary",
        "--grid",
        g.to_str().unwrap(),
        "--format",
        "svg",
        "--circuit",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("<svg ") && text.ends_with("</svg>\n"));
    assert_eq!(text.matches("<path ").count(), 3);
    assert_eq!(
        text.matches("stroke=\"#").count() - 1,
        3,
        "circuit has one stroke"
    );
    assert_eq!(text.matches("<polyline").count(), 1);
    // Every opened element is closed.
    let opened = text.matches('<').count();
    let closed = text.matches("/>").count() + 2 * text.matches("</").count();
    assert_eq!(opened, closed);
}

#[test]
fn plus_boundary_is_one_cycle() {
    let g = scratch("u_plus.txt", U_PENTOMINO);
    let o = bin(&["plus-boundary", "--grid", g.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["corners"].as_array().unwrap().len(), 12);
}

#[test]
fn merge_subcommand_reports_invariants() {
    let a = scratch("a.json", r#"{"corners":[[0,0],[1,0],[1,1],[0,1]]}"#);
    let b = scratch("b.json", r#"{"corners":[[1,0],[2,0],[2,1],[1,1]]}"#);
    let o = bin(&[
        "merge",
        "--c1",
        a.to_str().unwrap(),
        "--c2",
        b.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["corners"].as_array().unwrap().len(), 6);
    assert!(v["invariants"]
        .as_array()
        .unwrap()
        .iter()
        .all(|p| p["passed"] == true));
}

#[test]
fn check_passes_on_config_indices() {
    for i in ["0", "1", "33", "1057", "65535"] {
        let o = bin(&["check", "--config-index", i, "--exhaustive-oracle"]);
        assert!(o.status.success(), "{i}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    assert_eq!(bin(&["boundary"]).status.code(), Some(1));
    assert_eq!(
        bin(&[
            "simulate",
            "--p",
            "2",
            "--window",
            "3",
            "--trials",
            "1",
            "--rng-seed",
            "0",
            "--out",
            "/dev/null"
        ])
        .status
        .code(),
        Some(1)
    );
    let bad = scratch("bad.txt", "origin: 0 0\n#x\n");
    let o = bin(&["boundary", "--grid", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 2"));
}

#[test]
fn simulate_csv_schema() {
    let out = scratch("sim.csv", "");
    let o = bin(&[
        "simulate",
        "--p",
        "1",
        "--window",
        "5",
        "--trials",
        "3",
        "--rng-seed",
        "9",
        "--out",
        out.to_str().unwrap(),
        "--workers",
        "2",
    ]);
    assert!(o.status.success());
    let csv = fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(simulate::CSV_HEADER));
    for (i, l) in lines.enumerate() {
        assert_eq!(l, format!("{i},25,1,20,20,0"));
    }

    let o = bin(&[
        "simulate",
        "--p",
        "0",
        "--window",
        "5",
        "--trials",
        "4",
        "--rng-seed",
        "9",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let csv = fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 5);
    assert!(csv
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(1) == Some("0")));
}

#[test]
fn seed_override() {
    let w = Window::sized(4, 4).unwrap();
    let idx = 1u64 << w.index_of(Cell::new(3, 3)).unwrap();
    let o = bin(&[
        "boundary",
        "--config-index",
        &idx.to_string(),
        "--seed",
        "3,3",
    ]);
    let d = parse_decomposition(&stdout(&o)).unwrap();
    assert_eq!(d.cycles.len(), 1);
    let o = bin(&["boundary", "--config-index", &idx.to_string()]);
    assert!(parse_decomposition(&stdout(&o)).unwrap().is_empty());
}
