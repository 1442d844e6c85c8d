//! Text, JSON and DOT rendering. Everything here is deterministic.

use std::fmt::Write;

use bipartite_order::{BipartiteGraph, DeltaMorphism, HasseDiagram, Rational};
use serde::Serialize;

/// `n=3 k=1 E={(1,3)}`
pub fn graph_line(g: &BipartiteGraph) -> String {
    format!("n={} k={} E={}", g.n(), g.k(), g.edge_list())
}

pub fn graph_json(g: &BipartiteGraph) -> String {
    serde_json::to_string(g).expect("graphs always serialize")
}

pub fn delta_json(f: &DeltaMorphism) -> String {
    serde_json::to_string(f).expect("maps always serialize")
}

/// Always `p/q`, including integers (`-1/1`).
pub fn rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

fn dot_label(g: &BipartiteGraph) -> String {
    format!("k={} E={}", g.k(), g.edge_list())
}

/// `digraph hasse` with one `g<index>` node per graph, same-rank clusters
/// by basis size, and one edge per cover from lower to upper element.
pub fn hasse_dot(h: &HasseDiagram<BipartiteGraph>) -> String {
    let mut out = String::new();
    out.push_str("digraph hasse {\n");
    out.push_str("  rankdir=BT;\n");
    let max_k = h.elements().iter().map(|g| g.k()).max().unwrap_or(0);
    for k in 0..=max_k {
        let members: Vec<usize> = (0..h.elements().len()).filter(|&i| h.elements()[i].k() == k).collect();
        if members.is_empty() {
            continue;
        }
        writeln!(out, "  subgraph cluster_k{k} {{").unwrap();
        out.push_str("    rank=same;\n");
        writeln!(out, "    label=\"k={k}\";").unwrap();
        for i in members {
            writeln!(out, "    g{i} [label=\"{}\"];", dot_label(&h.elements()[i])).unwrap();
        }
        out.push_str("  }\n");
    }
    for &(a, b) in h.covers() {
        writeln!(out, "  g{a} -> g{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct HasseNode<'a> {
    id: String,
    graph: &'a BipartiteGraph,
}

#[derive(Serialize)]
struct HasseJson<'a> {
    n: usize,
    nodes: Vec<HasseNode<'a>>,
    covers: Vec<[String; 2]>,
}

pub fn hasse_json(n: usize, h: &HasseDiagram<BipartiteGraph>) -> String {
    let doc = HasseJson {
        n,
        nodes: h
            .elements()
            .iter()
            .enumerate()
            .map(|(i, graph)| HasseNode { id: format!("g{i}"), graph })
            .collect(),
        covers: h.covers().iter().map(|&(a, b)| [format!("g{a}"), format!("g{b}")]).collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("hasse diagrams always serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use bipartite_order::order::{build_poset, DEFAULT_GUARD};
    use num_bigint::BigInt;

    #[test]
    fn dot_for_one_vertex() {
        let h = build_poset(1, DEFAULT_GUARD).unwrap().hasse();
        let expected = "digraph hasse {\n  rankdir=BT;\n  subgraph cluster_k0 {\n    rank=same;\n    label=\"k=0\";\n    g0 [label=\"k=0 E={}\"];\n  }\n  subgraph cluster_k1 {\n    rank=same;\n    label=\"k=1\";\n    g1 [label=\"k=1 E={}\"];\n  }\n  g0 -> g1;\n}\n";
        assert_eq!(hasse_dot(&h), expected);
    }

    #[test]
    fn rationals_always_have_a_denominator() {
        assert_eq!(rational(&Rational::from_integer(BigInt::from(-1))), "-1/1");
        assert_eq!(rational(&Rational::new(BigInt::from(2), BigInt::from(4))), "1/2");
    }

    #[test]
    fn graph_line_format() {
        let g = BipartiteGraph::new(3, 1, [(1, 3)]).unwrap();
        assert_eq!(graph_line(&g), "n=3 k=1 E={(1,3)}");
    }
}
