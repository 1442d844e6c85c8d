//! Indexed bipartite graphs on the vertices `1..=n`.
//!
//! A graph in `B_n` has basis `{1, .., k}` and co-basis `{k + 1, .., n}`;
//! every edge `(i, j)` runs from the basis to the co-basis, so `i <= k < j`.
//! Viewed as a morphism of the category B, such a graph goes from `k` to `n`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge `(i, j)` with `i` in the basis and `j` in the co-basis. 1-based.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct BipartiteGraph {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawGraph> for BipartiteGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        BipartiteGraph::new(raw.n, raw.k, raw.edges)
    }
}

impl BipartiteGraph {
    /// Validates and canonicalizes a graph. Edges may be given in any order.
    pub fn new<I>(n: usize, k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        if k > n {
            return Err(Error::BasisOutOfRange { k, n });
        }
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        if let Some(&(i, j)) = edges
            .iter()
            .find(|&&(i, j)| !(1 <= i && i <= k && k < j && j <= n))
        {
            return Err(Error::EdgeViolatesBipartition { i, j, k, n });
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            let (i, j) = w[0];
            return Err(Error::DuplicateEdge { i, j });
        }
        Ok(BipartiteGraph { n, k, edges })
    }

    /// The edge-free graph with basis `{1, .., k}` on `n` vertices.
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, [])
    }

    /// Caller guarantees `edges` is sorted, duplicate-free and admissible.
    pub(crate) fn from_canonical(n: usize, k: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(i, j)| 1 <= i && i <= k && k < j && j <= n));
        BipartiteGraph { n, k, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn into_parts(self) -> (usize, usize, Vec<Edge>) {
        (self.n, self.k, self.edges)
    }

    pub fn contains_edge(&self, edge: Edge) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    /// Edges whose source lies in `{1, .., bound}`.
    pub fn edges_from_at_most(&self, bound: usize) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied().filter(move |&(i, _)| i <= bound)
    }

    /// Edges whose target lies above `bound`.
    pub fn edges_to_above(&self, bound: usize) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied().filter(move |&(_, j)| j > bound)
    }

    /// `{(1,7),(2,6)}`, or `{}` for an edge-free graph.
    pub fn edge_list(&self) -> String {
        let inner: Vec<String> = self.edges.iter().map(|(i, j)| format!("({i},{j})")).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Display for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={}, E={})", self.n, self.k, self.edge_list())
    }
}

/// The `k(n-k)` admissible edges of a graph with basis size `k` on `n`
/// vertices, in lexicographic order.
pub fn admissible_edges(k: usize, n: usize) -> Vec<Edge> {
    if k > n {
        return Vec::new();
    }
    (1..=k)
        .flat_map(|i| (k + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Iterator over `Hom_B(k, n)` in binary-counter order: the subset with
/// bitmask `s` (low bit = first admissible edge) comes at position `s`.
#[derive(Debug, Clone)]
pub struct HomB {
    n: usize,
    k: usize,
    slots: Vec<Edge>,
    next: u64,
    end: u64,
}

impl Iterator for HomB {
    type Item = BipartiteGraph;

    fn next(&mut self) -> Option<BipartiteGraph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .slots
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Some(BipartiteGraph::from_canonical(self.n, self.k, edges))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// Lazily enumerates `Hom_B(k, n)`.
///
/// Panics if `k(n-k) >= 64`; such hom-sets cannot be enumerated anyway.
pub fn hom_b(k: usize, n: usize) -> HomB {
    let slots = admissible_edges(k, n);
    assert!(slots.len() < 64, "Hom_B({k}, {n}) has 2^{} elements", slots.len());
    let end = if k > n { 0 } else { 1u64 << slots.len() };
    HomB { n, k, slots, next: 0, end }
}

pub fn enumerate_hom_b(k: usize, n: usize) -> Vec<BipartiteGraph> {
    hom_b(k, n).collect()
}

/// All of `B_n`: `Hom_B(0, n)`, then `Hom_B(1, n)`, up to `Hom_B(n, n)`.
pub fn enumerate_bn(n: usize) -> Vec<BipartiteGraph> {
    (0..=n).flat_map(|k| hom_b(k, n)).collect()
}

/// `2^{k(n-k)}` for `k <= n`, zero otherwise.
pub fn hom_count_b(k: usize, n: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    BigUint::one() << (k * (n - k))
}

/// `|B_n| = sum over k of 2^{k(n-k)}`.
pub fn bn_cardinality(n: usize) -> BigUint {
    (0..=n).map(|k| hom_count_b(k, n)).sum()
}
