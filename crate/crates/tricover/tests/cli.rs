#![cfg(feature = "cli")]

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tricover::cli::run;

fn tmp(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("tricover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d.join(name)
}

fn call(args: &[&str]) -> (i32, Value) {
    let mut v = vec!["tricover"];
    v.extend_from_slice(args);
    let o = run(v);
    let json = serde_json::from_str(&o.stdout).unwrap_or(Value::String(o.stdout.clone()));
    (o.code, json)
}

fn p(b: &PathBuf) -> &str {
    b.to_str().unwrap()
}

#[test]
fn oracle_variant_matches_basic() {
    for seed in 0..8 {
        let f = tmp(&format!("rects{seed}.txt"));
        let s = seed.to_string();
        assert_eq!(call(&["gen", "--kind", "weighted-rects", "--n", "10", "--seed", &s, "--out", p(&f)]).0, 0);
        let (ca, a) = call(&["cover3", p(&f), "--variant", "basic"]);
        let (cb, b) = call(&["cover3", p(&f), "--variant", "oracle"]);
        assert_eq!(a["weight"], b["weight"]);
        assert_eq!(ca, cb);
        assert!(ca == 0 || ca == 2);
        if ca == 0 {
            assert!(a["weight"].is_string());
            assert_eq!(a["witness"].as_array().unwrap().len(), 3);
        } else {
            assert_eq!(a["status"], "infeasible");
        }
        let (cc, c) = call(&["cover3", p(&f), "--oracle-check", "--threads", "1"]);
        assert_eq!(cc, ca);
        assert_eq!(c["stats"]["oracle_agree"], true);
    }
}

#[test]
fn generated_reduction_verifies() {
    let h = tmp("h.txt");
    let i = tmp("i.txt");
    assert_eq!(call(&["gen", "--kind", "hypergraph", "--n", "1", "--seed", "4", "--out", p(&h)]).0, 0);
    assert_eq!(call(&["gen", "--kind", "d2c_r13", "--input", p(&h), "--out", p(&i)]).0, 0);
    let (c, v) = call(&["verify", "--source", p(&h), "--instance", p(&i)]);
    assert_eq!(c, 0);
    assert_eq!(v["agree"], true);
    let g = tmp("g.txt");
    assert_eq!(call(&["gen", "--kind", "graph", "--n", "5", "--seed", "2", "--out", p(&g)]).0, 0);
    let (_, v) = call(&["verify", "--kind", "weighted_triangle_r2", "--source", p(&g)]);
    assert_eq!(v["agree"], true);
}

#[test]
fn reduction_kinds_generate_from_seed() {
    for kind in ["weighted_triangle_r2", "triangle_boxes_r3", "triangle_orthants_r4", "d3c_r4", "4clique_cover6_r2", "d2c_r13", "dkc", "maxcov2_r12"] {
        let o = run(["tricover", "gen", "--kind", kind, "--n", "4", "--seed", "1"]);
        assert_eq!(o.code, 0, "{kind}: {}", o.stdout);
        let doc = tricover::io::parse_document(&o.stdout).unwrap();
        assert_eq!(doc.meta("reduction"), Some(kind));
        assert!(doc.meta("threshold").is_some());
    }
}

#[test]
fn d3c_and_oracle_commands() {
    let f = tmp("pts.txt");
    std::fs::write(&f, "DIM 2 KIND points\n0 0\n1 0\n10 0\n11 0\n20 0\n21 1\n").unwrap();
    let (c, v) = call(&["d3c", p(&f), "--oracle-check"]);
    assert_eq!(c, 0);
    assert_eq!(v["radius"], "1");
    assert_eq!(v["stats"]["oracle_agree"], true);
    let (c, v) = call(&["d3c", p(&f), "--radius", "1/2"]);
    assert_eq!(c, 2);
    assert_eq!(v["status"], "infeasible");
    let (c, v) = call(&["d3c", p(&f), "--search", "sort-all"]);
    assert_eq!(c, 0);
    assert_eq!(v["radius"], "1");
    let (_, v) = call(&["oracle", p(&f), "--problem", "kcenter", "--k", "2", "--metric", "l2"]);
    assert_eq!(v["radius"], "81");
}

#[test]
fn maxcov_oracle_command() {
    let f = tmp("mc.txt");
    std::fs::write(&f, "DIM 2 KIND points\n0 0\n5 5\n6 6\nDIM 2 KIND ranges\n0:1 0:1\n5:6 5:6\n").unwrap();
    let (c, v) = call(&["oracle", p(&f), "--problem", "maxcov"]);
    assert_eq!(c, 0);
    assert_eq!(v["count"], 3);
    assert_eq!(v["witness"], serde_json::json!([0, 1]));
}

#[test]
fn bench_emits_csv() {
    let o = run(["tricover", "bench", "--variant", "unit_unweighted", "--sizes", "64,128", "--reps", "1"]);
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines[0], tricover::bench::CSV_HEADER);
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("unit-unw,64,"));
    let out = tmp("bench.csv");
    let (c, v) = call(&["bench", "--variant", "basic", "--sizes", "10", "--reps", "2", "--oracle-check", "--out", p(&out)]);
    assert_eq!(c, 0);
    assert_eq!(v["stats"]["oracle_mismatches"], 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 3);
}

#[test]
fn errors_exit_one() {
    assert_eq!(call(&["frobnicate"]).0, 1);
    assert_eq!(call(&["cover3", "/nonexistent/file"]).0, 1);
    let f = tmp("bad.txt");
    std::fs::write(&f, "DIM 2 KIND points\n0 zero\n").unwrap();
    let (c, v) = call(&["cover3", p(&f)]);
    assert_eq!(c, 1);
    assert_eq!(v["status"], "error");
    let g = tmp("ok.txt");
    std::fs::write(&g, "DIM 2 KIND points\n0 0\n").unwrap();
    assert_eq!(call(&["cover3", p(&g), "--variant", "nope"]).0, 1);
    assert_eq!(call(&["cover3", "--help"]).0, 0);
}

#[test]
fn budget_from_environment_and_flag() {
    let f = tmp("big.txt");
    assert_eq!(call(&["gen", "--kind", "weighted-rects", "--n", "400", "--seed", "1", "--out", p(&f)]).0, 0);
    let (c, v) = call(&["oracle", p(&f), "--k", "6", "--budget-ms", "1"]);
    assert_eq!(c, 1, "{v}");
    assert!(v["error"].as_str().unwrap().contains("budget"));
}

#[test]
fn binary_writes_json_and_exit_code() {
    let f = tmp("bin.txt");
    std::fs::write(&f, "DIM 2 KIND points\n0 0\nDIM 2 KIND ranges WEIGHTED\n0:1 0:1 2\n0:1 0:1 3\n0:1 0:1 1/2\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_tricover")).args(["cover3", p(&f)]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["weight"], "11/2");
    let out = Command::new(env!("CARGO_BIN_EXE_tricover"))
        .args(["oracle", p(&f), "--k", "3"])
        .env(tricover::cli::BUDGET_ENV, "5000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
