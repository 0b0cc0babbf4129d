use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cqc::edgelist::write_layer;
use cqc::output::PatternRecord;
use cqc_core::{fixtures, Layer, LayerPair};
use tempfile::TempDir;

fn cqc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cqc"))
        .args(args)
        .output()
        .unwrap()
}

fn write_pair(dir: &Path, g: &LayerPair) -> (PathBuf, PathBuf) {
    let (a, b) = (dir.join("g1.txt"), dir.join("g2.txt"));
    write_layer(g, Layer::First, &a).unwrap();
    write_layer(g, Layer::Second, &b).unwrap();
    (a, b)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn records(stdout: &[u8]) -> Vec<PatternRecord> {
    String::from_utf8_lossy(stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn five_vertex_files_give_one_pattern() {
    let dir = TempDir::new().unwrap();
    let (a, b) = write_pair(dir.path(), &fixtures::five_vertex_pair());
    let out = cqc(&["mine", "--graph1", s(&a), "--graph2", s(&b), "--delta", "1"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let found = records(&out.stdout);
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].vertices, ["A", "B", "C", "D"]);
    assert_eq!(found[0].interestingness, 3.33333);
    assert_eq!(found[0].dense_layer, 2);
}

#[test]
fn missing_file_fails() {
    let out = cqc(&[
        "mine",
        "--graph1",
        "/nonexistent/a",
        "--graph2",
        "/nonexistent/b",
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/a"));
}

#[test]
fn malformed_line_names_the_line() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("bad.txt");
    std::fs::write(&a, "# ok\nA B\nC\n").unwrap();
    let out = cqc(&["mine", "--graph1", s(&a), "--graph2", s(&a)]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.txt:3"));
}

#[test]
fn invalid_parameter_fails() {
    let dir = TempDir::new().unwrap();
    let (a, b) = write_pair(dir.path(), &fixtures::five_vertex_pair());
    let out = cqc(&["mine", "--graph1", s(&a), "--graph2", s(&b), "--delta", "0"]);
    assert!(!out.status.success());
}

#[test]
fn no_prune_gives_same_patterns_with_more_visits() {
    let dir = TempDir::new().unwrap();
    let gen = cqc(&[
        "gen",
        "--n",
        "110",
        "--seed",
        "5",
        "--graph1",
        s(&dir.path().join("g1.txt")),
        "--graph2",
        s(&dir.path().join("g2.txt")),
        "--out",
        s(&dir.path().join("truth.json")),
    ]);
    assert!(gen.status.success());
    let (a, b) = (dir.path().join("g1.txt"), dir.path().join("g2.txt"));
    let run = |extra: &[&str], stats: &Path| {
        let mut args = vec![
            "mine",
            "--graph1",
            s(&a),
            "--graph2",
            s(&b),
            "--delta",
            "0.7",
            "--stats",
            s(stats),
        ];
        args.extend_from_slice(extra);
        let out = cqc(&args);
        assert!(out.status.success());
        let v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(stats).unwrap()).unwrap();
        (out.stdout, v["nodes_visited"].as_u64().unwrap())
    };
    let (pruned, v1) = run(&[], &dir.path().join("on.json"));
    let (plain, v2) = run(&["--no-prune"], &dir.path().join("off.json"));
    assert_eq!(pruned, plain);
    assert!(!pruned.is_empty());
    assert!(v1 < v2);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let (a, b) = write_pair(dir.path(), &fixtures::redundancy_pair());
    let args = [
        "mine",
        "--graph1",
        s(&a),
        "--graph2",
        s(&b),
        "--min-size",
        "3",
    ];
    let first = cqc(&args);
    let second = cqc(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let found = records(&first.stdout);
    assert_eq!(found[0].vertices, ["A", "C", "D"]);
}

#[test]
fn oracle_and_mine_agree_on_small_input() {
    let dir = TempDir::new().unwrap();
    let (a, b) = write_pair(dir.path(), &fixtures::redundancy_pair());
    let base = ["--graph1", s(&a), "--graph2", s(&b), "--min-size", "3"];
    let mine = cqc(&[&["mine"][..], &base].concat());
    let oracle = cqc(&[&["oracle"][..], &base].concat());
    assert!(oracle.status.success());
    assert_eq!(mine.stdout, oracle.stdout);
}

#[test]
fn gen_writes_edges_and_truth() {
    let dir = TempDir::new().unwrap();
    let (a, b, t) = (
        dir.path().join("a.txt"),
        dir.path().join("b.txt"),
        dir.path().join("t.json"),
    );
    let args = [
        "gen",
        "--n",
        "120",
        "--seed",
        "9",
        "--graph1",
        s(&a),
        "--graph2",
        s(&b),
        "--out",
        s(&t),
    ];
    assert!(cqc(&args).status.success());
    let first = (
        std::fs::read(&a).unwrap(),
        std::fs::read(&b).unwrap(),
        std::fs::read(&t).unwrap(),
    );
    assert!(cqc(&args).status.success());
    assert_eq!(first.0, std::fs::read(&a).unwrap());
    assert_eq!(first.1, std::fs::read(&b).unwrap());
    let truth: serde_json::Value = serde_json::from_slice(&first.2).unwrap();
    assert_eq!(truth["layer1"].as_array().unwrap().len(), 3);
    assert_eq!(truth["layer2"][0].as_array().unwrap().len(), 10);
}

#[test]
fn report_over_two_runs() {
    let dir = TempDir::new().unwrap();
    let (a, b) = write_pair(dir.path(), &fixtures::redundancy_pair());
    let (m, bl) = (
        dir.path().join("mine.json"),
        dir.path().join("baseline.json"),
    );
    for (cmd, stats) in [("mine", &m), ("baseline", &bl)] {
        let out = cqc(&[
            cmd,
            "--graph1",
            s(&a),
            "--graph2",
            s(&b),
            "--min-size",
            "3",
            "--stats",
            s(stats),
        ]);
        assert!(out.status.success(), "{cmd}");
    }
    let out = cqc(&["report", s(&m), s(&bl)]);
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "metric,mine,baseline");
    let metrics: Vec<&str> = rows[1..]
        .iter()
        .map(|r| r.split(',').next().unwrap())
        .collect();
    assert_eq!(
        metrics,
        [
            "runtime_ms",
            "nodes_visited",
            "avg_interestingness",
            "sum_interestingness",
            "avg_gamma",
            "avg_size"
        ]
    );
    assert!(rows[1..].iter().all(|r| r.split(',').count() == 3));
}

#[test]
fn malformed_stats_file_is_named() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("broken.json");
    std::fs::write(&bad, "{not json").unwrap();
    let out = cqc(&["stats", s(&bad)]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("broken.json"));
}
