//! The partial order on `B_n` and generic finite-poset machinery.
//!
//! `U <= V` iff `U.k <= V.k` and the edges of `U` landing above `V.k`
//! coincide with the edges of `V` leaving `{1, .., U.k}`.

use num_bigint::BigUint;

use crate::bigraph::{bn_cardinality, enumerate_bn, BipartiteGraph};
use crate::error::{Error, Result};

/// Default cap on `|B_n|` for anything that materializes `B_n`.
pub const DEFAULT_GUARD: u64 = 100_000;

pub fn leq(u: &BipartiteGraph, v: &BipartiteGraph) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::MismatchedVertexCount { left: u.n(), right: v.n() });
    }
    Ok(u.k() <= v.k() && u.edges_to_above(v.k()).eq(v.edges_from_at_most(u.k())))
}

/// Fails with `TooLarge` when `|B_n|` exceeds `guard`.
pub fn check_guard(n: usize, guard: u64) -> Result<()> {
    let size = bn_cardinality(n);
    if size > BigUint::from(guard) {
        return Err(Error::TooLarge { what: format!("B_{n}"), size: size.to_string(), limit: guard });
    }
    Ok(())
}

/// `(B_n, <=)` over the enumeration order of `B_n`.
pub fn build_poset(n: usize, guard: u64) -> Result<Poset<BipartiteGraph>> {
    check_guard(n, guard)?;
    Poset::try_from_relation(enumerate_bn(n), leq)
}

/// A failed partial-order axiom, by element index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    Reflexivity(usize),
    Antisymmetry(usize, usize),
    Transitivity(usize, usize, usize),
}

/// A finite poset with its order relation materialized as a dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset<T> {
    elements: Vec<T>,
    relation: Vec<bool>,
}

impl<T> Poset<T> {
    /// Builds the relation matrix by evaluating `leq` on every ordered pair.
    /// The axioms are not checked here; see [`Poset::check_axioms`].
    pub fn from_relation<F>(elements: Vec<T>, mut leq: F) -> Self
    where
        F: FnMut(&T, &T) -> bool,
    {
        let size = elements.len();
        let mut relation = vec![false; size * size];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                relation[a * size + b] = leq(x, y);
            }
        }
        Poset { elements, relation }
    }

    pub fn try_from_relation<F>(elements: Vec<T>, mut leq: F) -> Result<Self>
    where
        F: FnMut(&T, &T) -> Result<bool>,
    {
        let size = elements.len();
        let mut relation = vec![false; size * size];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                relation[a * size + b] = leq(x, y)?;
            }
        }
        Ok(Poset { elements, relation })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, a: usize) -> &T {
        &self.elements[a]
    }

    pub fn index_of(&self, x: &T) -> Option<usize>
    where
        T: PartialEq,
    {
        self.elements.iter().position(|y| y == x)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.relation[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// The relation matrix, row-major.
    pub fn relation(&self) -> &[bool] {
        &self.relation
    }

    pub fn check_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        let size = self.len();
        for a in 0..size {
            if !self.leq(a, a) {
                return Err(AxiomViolation::Reflexivity(a));
            }
        }
        for a in 0..size {
            for b in a + 1..size {
                if self.leq(a, b) && self.leq(b, a) {
                    return Err(AxiomViolation::Antisymmetry(a, b));
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                if !self.leq(a, b) {
                    continue;
                }
                for c in 0..size {
                    if self.leq(b, c) && !self.leq(a, c) {
                        return Err(AxiomViolation::Transitivity(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// The global minimum, if one exists.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq(a, b)))
    }

    /// The global maximum, if one exists.
    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq(b, a)))
    }

    /// Greatest lower bound of `a` and `b`.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&c| self.leq(c, a) && self.leq(c, b)).collect();
        lower.iter().copied().find(|&c| lower.iter().all(|&d| self.leq(d, c)))
    }

    /// Least upper bound of `a` and `b`.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len()).filter(|&c| self.leq(a, c) && self.leq(b, c)).collect();
        upper.iter().copied().find(|&c| upper.iter().all(|&d| self.leq(c, d)))
    }

    /// Scans pairs `(a, b)` with `a < b` in index order and reports the
    /// first one lacking a meet or a join.
    pub fn is_lattice(&self) -> LatticeCheck {
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                let has_meet = self.meet(a, b).is_some();
                let has_join = self.join(a, b).is_some();
                if !has_meet || !has_join {
                    return LatticeCheck::NotLattice { a, b, has_meet, has_join };
                }
            }
        }
        LatticeCheck::Lattice
    }

    /// Transitive reduction of the strict order.
    pub fn hasse(&self) -> HasseDiagram<T>
    where
        T: Clone,
    {
        let size = self.len();
        let mut covers = Vec::new();
        for a in 0..size {
            let above: Vec<usize> = (0..size).filter(|&c| self.lt(a, c)).collect();
            for &b in &above {
                if !above.iter().any(|&c| self.lt(c, b)) {
                    covers.push((a, b));
                }
            }
        }
        HasseDiagram { elements: self.elements.clone(), covers }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeCheck {
    Lattice,
    NotLattice { a: usize, b: usize, has_meet: bool, has_join: bool },
}

impl LatticeCheck {
    pub fn holds(&self) -> bool {
        matches!(self, LatticeCheck::Lattice)
    }

    pub fn witness(&self) -> Option<(usize, usize)> {
        match *self {
            LatticeCheck::Lattice => None,
            LatticeCheck::NotLattice { a, b, .. } => Some((a, b)),
        }
    }
}

/// Cover pairs `(a, b)`, meaning `b` covers `a`, sorted by `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram<T> {
    elements: Vec<T>,
    covers: Vec<(usize, usize)>,
}

impl<T> HasseDiagram<T> {
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Reflexive-transitive closure of the covers, row-major.
    pub fn closure(&self) -> Vec<bool> {
        closure(self.elements.len(), &self.covers)
    }
}

/// Reflexive-transitive closure of a relation on `0..size`, row-major.
pub fn closure(size: usize, pairs: &[(usize, usize)]) -> Vec<bool> {
    let mut reach = vec![false; size * size];
    for a in 0..size {
        reach[a * size + a] = true;
    }
    for &(a, b) in pairs {
        reach[a * size + b] = true;
    }
    // Warshall
    for c in 0..size {
        for a in 0..size {
            if reach[a * size + c] {
                for b in 0..size {
                    if reach[c * size + b] {
                        reach[a * size + b] = true;
                    }
                }
            }
        }
    }
    reach
}
