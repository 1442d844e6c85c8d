//! Triangular categories: objects are the naturals, `Hom(n, n)` is a
//! singleton and `Hom(m, n)` is empty for `m > n`.
//!
//! Everything here is written once against [`TriangularCategory`] and
//! instantiated by [`CategoryB`] (bipartite graphs) and [`CategoryDelta`]
//! (injective isotone maps). Searches are exhaustive over enumerated
//! hom-sets, so they are only practical for small objects.

mod b;
mod delta;

use std::collections::{HashMap, HashSet};
use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::order::Poset;

pub use b::{compose_b, identity_b, prop7_witness, CategoryB};
pub use delta::{check_boolean_iso, delta_compose, delta_hom, CategoryDelta, DeltaMorphism};

pub trait TriangularCategory {
    type Morphism: Clone + Eq + Hash + Ord + Debug + Display;

    fn name(&self) -> &'static str;

    fn dom(&self, f: &Self::Morphism) -> usize;

    fn cod(&self, f: &Self::Morphism) -> usize;

    /// All morphisms `k -> n` in a fixed enumeration order; empty if `k > n`.
    fn hom(&self, k: usize, n: usize) -> Vec<Self::Morphism>;

    /// `|Hom(k, n)|` from the closed form, without enumerating.
    fn hom_count(&self, k: usize, n: usize) -> BigUint;

    fn identity(&self, n: usize) -> Self::Morphism;

    /// `g . f`, i.e. `f` first. Fails unless `cod(f) = dom(g)`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;

    fn is_identity(&self, f: &Self::Morphism) -> bool {
        self.dom(f) == self.cod(f) && *f == self.identity(self.dom(f))
    }

    /// Every morphism with codomain `n`, ordered by domain.
    fn morphisms_into(&self, n: usize) -> Vec<Self::Morphism> {
        (0..=n).flat_map(|k| self.hom(k, n)).collect()
    }

    /// Every morphism whose codomain is at most `bound`, ordered by
    /// codomain and then domain.
    fn morphisms_up_to(&self, bound: usize) -> Vec<Self::Morphism> {
        (0..=bound).flat_map(|n| self.morphisms_into(n)).collect()
    }
}

/// Checks both identity laws and associativity over every composable
/// configuration with objects at most `max_n`. Returns a description of the
/// first failure.
pub fn check_category_laws<C: TriangularCategory>(c: &C, max_n: usize) -> std::result::Result<(), String> {
    let hom = hom_table(c, max_n);
    for n in 0..=max_n {
        if hom[n][n].len() != 1 {
            return Err(format!("|Hom({n},{n})| = {}", hom[n][n].len()));
        }
        if hom[n][n][0] != c.identity(n) {
            return Err(format!("Hom({n},{n}) does not hold the identity"));
        }
        for k in 0..=n {
            for f in &hom[k][n] {
                let left = c.compose(&c.identity(n), f).map_err(|e| e.to_string())?;
                let right = c.compose(f, &c.identity(k)).map_err(|e| e.to_string())?;
                if left != *f || right != *f {
                    return Err(format!("identity law fails for {f}"));
                }
            }
        }
    }
    for n in 0..=max_n {
        for l in 0..=n {
            for k in 0..=l {
                for m in 0..=k {
                    for h in &hom[l][n] {
                        for g in &hom[k][l] {
                            let hg = c.compose(h, g).map_err(|e| e.to_string())?;
                            for f in &hom[m][k] {
                                let lhs = c.compose(&hg, f).map_err(|e| e.to_string())?;
                                let gf = c.compose(g, f).map_err(|e| e.to_string())?;
                                let rhs = c.compose(h, &gf).map_err(|e| e.to_string())?;
                                if lhs != rhs {
                                    return Err(format!("associativity fails for {h}, {g}, {f}"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `hom[k][n]` for all `k, n <= bound`.
fn hom_table<C: TriangularCategory>(c: &C, bound: usize) -> Vec<Vec<Vec<C::Morphism>>> {
    (0..=bound)
        .map(|k| (0..=bound).map(|n| c.hom(k, n)).collect())
        .collect()
}

/// Left-cancellability of `f: k -> n`. Exact: any `U, U'` with
/// `f . U = f . U'` have a common domain `m <= k`. A composition error
/// counts as a failure.
pub fn is_mono<C: TriangularCategory>(c: &C, f: &C::Morphism) -> bool {
    let k = c.dom(f);
    (0..=k).all(|m| {
        let mut seen = HashSet::new();
        c.hom(m, k)
            .iter()
            .all(|u| c.compose(f, u).is_ok_and(|fu| seen.insert(fu)))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EpiResult<M> {
    /// No counterexample among codomains `<= max_cod`.
    EpiUpToBound { max_cod: usize },
    /// `first . f = second . f` with `first != second`, both in `Hom(n, cod)`.
    NotEpi { cod: usize, first: M, second: M },
}

/// Searches for a failure of right-cancellability of `f: k -> n` among
/// `V, V'` in `Hom(n, p)` for `n <= p <= max_cod`. The first collision in
/// enumeration order is reported.
pub fn is_epi_bounded<C: TriangularCategory>(
    c: &C,
    f: &C::Morphism,
    max_cod: usize,
) -> Result<EpiResult<C::Morphism>> {
    let n = c.cod(f);
    if max_cod < n {
        return Err(Error::BoundTooSmall { bound: max_cod, required: n });
    }
    for p in n..=max_cod {
        let mut by_composite: HashMap<C::Morphism, C::Morphism> = HashMap::new();
        for v in c.hom(n, p) {
            let composite = c.compose(&v, f)?;
            if let Some(first) = by_composite.get(&composite) {
                return Ok(EpiResult::NotEpi { cod: p, first: first.clone(), second: v });
            }
            by_composite.insert(composite, v);
        }
    }
    Ok(EpiResult::EpiUpToBound { max_cod })
}

/// The natural order on subobjects: returns `gamma` with `beta . gamma = alpha`
/// if there is one. The first such `gamma` in enumeration order is returned;
/// it is unique when `beta` is mono.
pub fn subobject_leq<C: TriangularCategory>(
    c: &C,
    alpha: &C::Morphism,
    beta: &C::Morphism,
) -> Result<Option<C::Morphism>> {
    if c.cod(alpha) != c.cod(beta) {
        return Err(Error::CodomainMismatch { left: c.cod(alpha), right: c.cod(beta) });
    }
    for gamma in c.hom(c.dom(alpha), c.dom(beta)) {
        if c.compose(beta, &gamma)? == *alpha {
            return Ok(Some(gamma));
        }
    }
    Ok(None)
}

/// `S(n)`: all morphisms into `n`, ordered by domain, under the natural
/// subobject order.
pub fn subobject_poset<C: TriangularCategory>(c: &C, n: usize) -> Result<Poset<C::Morphism>> {
    let elements = c.morphisms_into(n);
    if let Some(f) = elements.iter().find(|f| !is_mono(c, f)) {
        return Err(Error::NotMonomorphic { cod: n, morphism: f.to_string() });
    }
    Poset::try_from_relation(elements, |a, b| Ok(subobject_leq(c, a, b)?.is_some()))
}

/// A span `left: apex -> k`, `right: apex -> l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span<M> {
    pub apex: usize,
    pub left: M,
    pub right: M,
}

/// A cospan `left: k -> apex`, `right: l -> apex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cospan<M> {
    pub apex: usize,
    pub left: M,
    pub right: M,
}

/// Exact pullback of `f: k -> n` and `g: l -> n`.
///
/// Every commuting span has its apex at most `min(k, l)`, so searching
/// candidates and competitors up to that object is complete.
pub fn pullback_search<C: TriangularCategory>(
    c: &C,
    f: &C::Morphism,
    g: &C::Morphism,
) -> Result<Option<Span<C::Morphism>>> {
    let apex_bound = c.dom(f).min(c.dom(g));
    pullback_search_up_to(c, f, g, apex_bound)
}

/// [`pullback_search`] with an explicit apex bound for candidates and for
/// the spans their universal property is tested against.
pub fn pullback_search_up_to<C: TriangularCategory>(
    c: &C,
    f: &C::Morphism,
    g: &C::Morphism,
    max_apex: usize,
) -> Result<Option<Span<C::Morphism>>> {
    if c.cod(f) != c.cod(g) {
        return Err(Error::CodomainMismatch { left: c.cod(f), right: c.cod(g) });
    }
    let (k, l) = (c.dom(f), c.dom(g));
    let mut spans = Vec::new();
    for p in 0..=max_apex {
        let mut right_by_composite: HashMap<C::Morphism, Vec<C::Morphism>> = HashMap::new();
        for b in c.hom(p, l) {
            right_by_composite.entry(c.compose(g, &b)?).or_default().push(b);
        }
        for a in c.hom(p, k) {
            if let Some(bs) = right_by_composite.get(&c.compose(f, &a)?) {
                for b in bs {
                    spans.push(Span { apex: p, left: a.clone(), right: b.clone() });
                }
            }
        }
    }
    for candidate in &spans {
        if is_pullback(c, candidate, &spans)? {
            return Ok(Some(candidate.clone()));
        }
    }
    Ok(None)
}

fn is_pullback<C: TriangularCategory>(
    c: &C,
    candidate: &Span<C::Morphism>,
    spans: &[Span<C::Morphism>],
) -> Result<bool> {
    for other in spans {
        let mut mediating = 0;
        for u in c.hom(other.apex, candidate.apex) {
            if c.compose(&candidate.left, &u)? == other.left && c.compose(&candidate.right, &u)? == other.right {
                mediating += 1;
            }
        }
        if mediating != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PushoutResult<M> {
    /// Universal among all cocones with apex `<= max_cod`.
    Found { cocone: Cospan<M>, max_cod: usize },
    NoneUpToBound { max_cod: usize },
}

/// Bounded pushout search for `f: n -> k`, `g: n -> l`. Both the candidate
/// apex and the competing cocones are limited to objects `<= max_cod`, so a
/// result says nothing about larger objects.
pub fn pushout_search_bounded<C: TriangularCategory>(
    c: &C,
    f: &C::Morphism,
    g: &C::Morphism,
    max_cod: usize,
) -> Result<PushoutResult<C::Morphism>> {
    if c.dom(f) != c.dom(g) {
        return Err(Error::DomainMismatch { left: c.dom(f), right: c.dom(g) });
    }
    let (k, l) = (c.cod(f), c.cod(g));
    let required = k.max(l);
    if max_cod < required {
        return Err(Error::BoundTooSmall { bound: max_cod, required });
    }
    let mut cocones = Vec::new();
    for q in required..=max_cod {
        let mut right_by_composite: HashMap<C::Morphism, Vec<C::Morphism>> = HashMap::new();
        for b in c.hom(l, q) {
            right_by_composite.entry(c.compose(&b, g)?).or_default().push(b);
        }
        for a in c.hom(k, q) {
            if let Some(bs) = right_by_composite.get(&c.compose(&a, f)?) {
                for b in bs {
                    cocones.push(Cospan { apex: q, left: a.clone(), right: b.clone() });
                }
            }
        }
    }
    'candidates: for candidate in &cocones {
        for other in &cocones {
            let mut mediating = 0;
            for u in c.hom(candidate.apex, other.apex) {
                if c.compose(&u, &candidate.left)? == other.left && c.compose(&u, &candidate.right)? == other.right {
                    mediating += 1;
                }
            }
            if mediating != 1 {
                continue 'candidates;
            }
        }
        return Ok(PushoutResult::Found { cocone: candidate.clone(), max_cod });
    }
    Ok(PushoutResult::NoneUpToBound { max_cod })
}

/// Over all objects `<= max_n`: identities factor only through identities,
/// and `beta . gamma = gamma` forces `beta` to be an identity. A composition
/// error counts as a failure.
pub fn check_moebius_axioms<C: TriangularCategory>(c: &C, max_n: usize) -> bool {
    for n in 0..=max_n {
        let id = c.identity(n);
        for j in 0..=max_n {
            for gamma in c.hom(n, j) {
                for beta in c.hom(j, n) {
                    let Ok(composite) = c.compose(&beta, &gamma) else {
                        return false;
                    };
                    if composite == id && !(c.is_identity(&beta) && c.is_identity(&gamma)) {
                        return false;
                    }
                }
            }
        }
        for m in 0..=n {
            for gamma in c.hom(m, n) {
                for beta in c.hom(n, n) {
                    match c.compose(&beta, &gamma) {
                        Ok(composite) if composite == gamma && !c.is_identity(&beta) => return false,
                        Ok(_) => {}
                        Err(_) => return false,
                    }
                }
            }
        }
    }
    true
}
