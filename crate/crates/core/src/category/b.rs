use num_bigint::BigUint;

use super::TriangularCategory;
use crate::bigraph::{enumerate_hom_b, hom_count_b, BipartiteGraph};
use crate::error::{Error, Result};
use crate::order::leq;

/// The category of indexed bipartite graphs: a graph with basis size `k`
/// on `n` vertices is a morphism `k -> n`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CategoryB;

/// `V . U` for `U: m -> k`, `V: k -> n`. Keeps every edge of `U` and the
/// edges of `V` that leave `{1, .., m}`.
pub fn compose_b(v: &BipartiteGraph, u: &BipartiteGraph) -> Result<BipartiteGraph> {
    if u.n() != v.k() {
        return Err(Error::CompositionMismatch { cod: u.n(), dom: v.k() });
    }
    let m = u.k();
    let mut edges: Vec<_> = u.edges().iter().copied().chain(v.edges_from_at_most(m)).collect();
    // edges of U end at most at k, edges of V start after it: no overlap
    edges.sort_unstable();
    Ok(BipartiteGraph::from_canonical(v.n(), m, edges))
}

pub fn identity_b(n: usize) -> BipartiteGraph {
    BipartiteGraph::from_canonical(n, n, Vec::new())
}

/// For `U <= V`, the morphism `W: U.k -> V.k` with `V . W = U`: the edges
/// of `U` that stay inside `{1, .., V.k}`.
pub fn prop7_witness(u: &BipartiteGraph, v: &BipartiteGraph) -> Result<BipartiteGraph> {
    if !leq(u, v)? {
        return Err(Error::NotComparable);
    }
    let edges = u.edges().iter().copied().filter(|&(_, j)| j <= v.k()).collect();
    Ok(BipartiteGraph::from_canonical(v.k(), u.k(), edges))
}

impl TriangularCategory for CategoryB {
    type Morphism = BipartiteGraph;

    fn name(&self) -> &'static str {
        "B"
    }

    fn dom(&self, f: &BipartiteGraph) -> usize {
        f.k()
    }

    fn cod(&self, f: &BipartiteGraph) -> usize {
        f.n()
    }

    fn hom(&self, k: usize, n: usize) -> Vec<BipartiteGraph> {
        enumerate_hom_b(k, n)
    }

    fn hom_count(&self, k: usize, n: usize) -> BigUint {
        hom_count_b(k, n)
    }

    fn identity(&self, n: usize) -> BipartiteGraph {
        identity_b(n)
    }

    fn compose(&self, g: &BipartiteGraph, f: &BipartiteGraph) -> Result<BipartiteGraph> {
        compose_b(g, f)
    }
}
