use std::path::PathBuf;

use bipartite_order::category::{compose_b, TriangularCategory};
use bipartite_order::{BipartiteGraph, CategoryB, Result};
use bporder_cli::checks::{category_suite_with, CheckOptions, DEFAULT_SEED};
use bporder_cli::{run_args, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use num_bigint::BigUint;
use tempfile::TempDir;

fn run(args: &[&str]) -> bporder_cli::CommandResult {
    run_args(std::iter::once("bporder").chain(args.iter().copied()))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn enumerate_line_counts() {
    assert_eq!(run(&["enumerate", "--n", "3"]).stdout.lines().count(), 10);
    assert_eq!(run(&["enumerate", "--n", "0"]).stdout.lines().count(), 1);
    assert_eq!(run(&["enumerate", "--n", "3", "--k", "1"]).stdout.lines().count(), 4);
}

#[test]
fn enumerate_json_reparses() {
    let out = run(&["enumerate", "--n", "4", "--format", "json"]);
    assert_eq!(out.exit_code, EXIT_OK);
    let graphs: Vec<BipartiteGraph> = out.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(graphs, bipartite_order::enumerate_bn(4));
}

#[test]
fn enumerate_guard() {
    let out = run(&["enumerate", "--n", "8"]);
    assert_eq!(out.exit_code, EXIT_USAGE);
    assert!(out.stdout.is_empty());
    assert_eq!(run(&["enumerate", "--n", "4", "--guard", "33"]).exit_code, EXIT_USAGE);
}

#[test]
fn counts() {
    assert_eq!(run(&["count", "--n", "7"]).stdout, "10370\nenumeration-verified\n");
    assert_eq!(run(&["count", "--hom", "2", "5", "--category", "b"]).stdout, "64\nenumeration-verified\n");
    assert_eq!(run(&["count", "--hom", "2", "4", "--category", "delta"]).stdout, "6\nenumeration-verified\n");
    assert_eq!(run(&["count", "--hom", "5", "2"]).stdout, "0\nenumeration-verified\n");
    // beyond the guard: exact value only
    let big = run(&["count", "--n", "20"]);
    let expected: BigUint = (0..=20usize).map(|k| BigUint::from(1u32) << (k * (20 - k))).sum();
    assert_eq!(big.stdout, format!("{expected}\n"));
    assert_eq!(run(&["count"]).exit_code, EXIT_USAGE);
}

#[test]
fn hasse_small_cases() {
    let one = run(&["hasse", "--n", "1"]).stdout;
    assert_eq!(one.matches("[label=").count(), 2);
    assert_eq!(one.matches(" -> ").count(), 1);
    let zero = run(&["hasse", "--n", "0"]).stdout;
    assert_eq!(zero.matches("[label=").count(), 1);
    assert_eq!(zero.matches(" -> ").count(), 0);
    let three = run(&["hasse", "--n", "3"]).stdout;
    assert!(three.starts_with("digraph hasse {\n  rankdir=BT;\n"));
    assert_eq!(three.matches("[label=").count(), 10);
}

#[test]
fn hasse_json_and_out_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("b3.json");
    let out = run(&["hasse", "--n", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.exit_code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 10);
    let bad = dir.path().join("missing").join("x.dot");
    assert_eq!(run(&["hasse", "--n", "2", "--out", bad.to_str().unwrap()]).exit_code, EXIT_USAGE);
}

#[test]
fn compare_compose_witness() {
    let dir = TempDir::new().unwrap();
    let u = write(&dir, "u.json", r#"{"n":3,"k":1,"edges":[[1,3]]}"#);
    let v = write(&dir, "v.json", r#"{"n":3,"k":2,"edges":[[1,3]]}"#);
    let other = write(&dir, "o.json", r#"{"n":3,"k":1,"edges":[[1,2]]}"#);
    let p = |p: &PathBuf| p.to_str().unwrap().to_string();
    assert_eq!(run(&["compare", &p(&u), &p(&v)]).stdout, "U<V\n");
    assert_eq!(run(&["compare", &p(&v), &p(&u)]).stdout, "U>V\n");
    assert_eq!(run(&["compare", &p(&u), &p(&u)]).stdout, "U=V\n");
    assert_eq!(run(&["compare", &p(&u), &p(&other)]).stdout, "incomparable\n");
    assert_eq!(run(&["witness", &p(&u), &p(&v)]).stdout, "{\"n\":2,\"k\":1,\"edges\":[]}\n");
    assert_eq!(run(&["witness", &p(&other), &p(&v)]).stdout, "incomparable\n");

    let w = write(&dir, "w.json", &run(&["witness", &p(&u), &p(&v)]).stdout);
    let composite = run(&["compose", &p(&v), &p(&w)]);
    let back: BipartiteGraph = serde_json::from_str(composite.stdout.trim()).unwrap();
    assert_eq!(back, serde_json::from_str::<BipartiteGraph>(&std::fs::read_to_string(&u).unwrap()).unwrap());

    assert_eq!(run(&["compose", &p(&v), &p(&u)]).exit_code, EXIT_USAGE);
    let invalid = write(&dir, "bad.json", r#"{"n":3,"k":1,"edges":[[2,3]]}"#);
    assert_eq!(run(&["compare", &p(&invalid), &p(&u)]).exit_code, EXIT_USAGE);
    let four = write(&dir, "four.json", r#"{"n":4,"k":1,"edges":[]}"#);
    assert_eq!(run(&["compare", &p(&four), &p(&u)]).exit_code, EXIT_USAGE);
    assert_eq!(run(&["compare", "/nonexistent.json", &p(&u)]).exit_code, EXIT_USAGE);
}

#[test]
fn check_exit_codes() {
    let lattice = run(&["check", "--suite", "lattice", "--max-n", "3"]);
    assert_eq!(lattice.exit_code, EXIT_OK);
    assert!(lattice.stdout.contains("(B_3,≤) is NOT a lattice: PASS"));
    assert_eq!(run(&["check", "--suite", "order", "--max-n", "4"]).exit_code, EXIT_OK);
    assert_eq!(run(&["check", "--suite", "all", "--max-n", "0"]).exit_code, EXIT_OK);
    assert_eq!(run(&["check", "--suite", "bogus"]).exit_code, EXIT_USAGE);
}

#[test]
fn moebius_tables() {
    let out = run(&["moebius", "--n", "3"]);
    assert_eq!(out.exit_code, EXIT_OK);
    let (category, poset) = out.stdout.split_once("\n\n").unwrap();
    assert!(category.starts_with("# category Möbius"));
    assert!(poset.starts_with("# poset Möbius"));
    for row in category.lines().skip(2) {
        let cols: Vec<&str> = row.split('\t').collect();
        let (dom, cod): (usize, usize) = (cols[0].parse().unwrap(), cols[1].parse().unwrap());
        if dom == cod {
            assert_eq!(cols[3], "1/1");
        }
        if dom + 1 == cod {
            assert_eq!(cols[3], "-1/1");
        }
    }
    let delta = run(&["moebius", "--n", "3", "--category", "delta"]);
    assert_eq!(delta.exit_code, EXIT_OK);
    assert_eq!(delta.stdout.split_once("\n\n").unwrap().1.lines().count(), 2 + 27);
}

#[test]
fn binary_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_bporder");
    let go = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap();
    for args in [&["moebius", "--n", "3"][..], &["check", "--max-n", "3"], &["enumerate", "--n", "4"]] {
        let (a, b) = (go(args), go(args));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
    assert_eq!(go(&["enumerate", "--n", "9"]).status.code(), Some(EXIT_USAGE));
}

/// Composition that forgets the `i <= m` filter on the outer graph's edges.
struct UnfilteredB;

impl TriangularCategory for UnfilteredB {
    type Morphism = BipartiteGraph;

    fn name(&self) -> &'static str {
        "B without the source filter"
    }
    fn dom(&self, f: &BipartiteGraph) -> usize {
        f.k()
    }
    fn cod(&self, f: &BipartiteGraph) -> usize {
        f.n()
    }
    fn hom(&self, k: usize, n: usize) -> Vec<BipartiteGraph> {
        CategoryB.hom(k, n)
    }
    fn hom_count(&self, k: usize, n: usize) -> BigUint {
        CategoryB.hom_count(k, n)
    }
    fn identity(&self, n: usize) -> BipartiteGraph {
        CategoryB.identity(n)
    }
    fn compose(&self, v: &BipartiteGraph, u: &BipartiteGraph) -> Result<BipartiteGraph> {
        compose_b(v, u)?;
        BipartiteGraph::new(v.n(), u.k(), u.edges().iter().chain(v.edges()).copied())
    }
}

/// Composition that drops the outer graph's edges altogether.
struct InnerOnlyB;

impl TriangularCategory for InnerOnlyB {
    type Morphism = BipartiteGraph;

    fn name(&self) -> &'static str {
        "B keeping only inner edges"
    }
    fn dom(&self, f: &BipartiteGraph) -> usize {
        f.k()
    }
    fn cod(&self, f: &BipartiteGraph) -> usize {
        f.n()
    }
    fn hom(&self, k: usize, n: usize) -> Vec<BipartiteGraph> {
        CategoryB.hom(k, n)
    }
    fn hom_count(&self, k: usize, n: usize) -> BigUint {
        CategoryB.hom_count(k, n)
    }
    fn identity(&self, n: usize) -> BipartiteGraph {
        CategoryB.identity(n)
    }
    fn compose(&self, v: &BipartiteGraph, u: &BipartiteGraph) -> Result<BipartiteGraph> {
        compose_b(v, u)?;
        BipartiteGraph::new(v.n(), u.k(), u.edges().iter().copied())
    }
}

#[test]
fn mutated_composition_fails_the_category_suite() {
    let options = CheckOptions { max_n: 3, max_cod: 3, seed: DEFAULT_SEED };
    assert!(category_suite_with(&CategoryB, &options).iter().all(|l| !l.failed()));
    let unfiltered = category_suite_with(&UnfilteredB, &options);
    assert!(unfiltered.iter().any(|l| l.failed()));
    let inner_only = category_suite_with(&InnerOnlyB, &options);
    let failed: Vec<&str> = inner_only.iter().filter(|l| l.failed()).map(|l| l.label.as_str()).collect();
    assert!(failed.iter().any(|l| l.starts_with("subobject order of B")), "{failed:?}");
}

#[test]
fn exit_code_for_failed_check_is_one() {
    assert_eq!(EXIT_CHECK_FAILED, 1);
}
