//! Incidence algebra of a bounded fragment of a triangular category, and the
//! classical Möbius function of a finite poset.
//!
//! The fragment with bound `N` is every morphism `k -> n` with `n <= N`. It is
//! closed under factorization, so convolution never leaves it. Convolution
//! sums over `alpha = beta . gamma` with `beta` the outer factor.

use std::collections::{BTreeMap, HashMap};

use crate::category::TriangularCategory;
use crate::error::{Error, Result};
use crate::order::Poset;
use crate::scalar::Scalar;

/// All pairs `(beta, gamma)` with `beta . gamma = alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationList<M> {
    pub morphism: M,
    pub pairs: Vec<(M, M)>,
}

/// Factorizations of `alpha: m -> n` through every `m <= j <= n`, ordered
/// by `j` and then by the enumeration order of `Hom(j, n)` and `Hom(m, j)`.
pub fn factorizations<C: TriangularCategory>(c: &C, alpha: &C::Morphism) -> Result<FactorizationList<C::Morphism>> {
    let (m, n) = (c.dom(alpha), c.cod(alpha));
    let mut pairs = Vec::new();
    for j in m..=n {
        let inner = c.hom(m, j);
        for beta in c.hom(j, n) {
            for gamma in &inner {
                if c.compose(&beta, gamma)? == *alpha {
                    pairs.push((beta.clone(), gamma.clone()));
                }
            }
        }
    }
    Ok(FactorizationList { morphism: alpha.clone(), pairs })
}

/// A value for every morphism of a bounded fragment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceFunction<M, S> {
    bound: usize,
    values: BTreeMap<M, S>,
}

impl<M: Ord + std::fmt::Display, S> IncidenceFunction<M, S> {
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Fails for morphisms outside the fragment; there is no implicit zero.
    pub fn get(&self, alpha: &M) -> Result<&S> {
        self.values.get(alpha).ok_or_else(|| Error::OutsideFragment {
            morphism: alpha.to_string(),
            bound: self.bound,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &S)> {
        self.values.iter()
    }
}

/// A fragment together with its precomputed factorization table.
#[derive(Debug, Clone)]
pub struct IncidenceAlgebra<C: TriangularCategory> {
    category: C,
    bound: usize,
    morphisms: Vec<C::Morphism>,
    index: HashMap<C::Morphism, usize>,
    // per morphism: (outer, inner) index pairs
    factors: Vec<Vec<(usize, usize)>>,
}

impl<C: TriangularCategory> IncidenceAlgebra<C> {
    pub fn new(category: C, bound: usize) -> Result<Self> {
        let morphisms = category.morphisms_up_to(bound);
        let index: HashMap<_, _> = morphisms.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let mut factors = vec![Vec::new(); morphisms.len()];
        for n in 0..=bound {
            for j in 0..=n {
                let outer = category.hom(j, n);
                for m in 0..=j {
                    let inner = category.hom(m, j);
                    for beta in &outer {
                        for gamma in &inner {
                            let alpha = category.compose(beta, gamma)?;
                            factors[index[&alpha]].push((index[beta], index[gamma]));
                        }
                    }
                }
            }
        }
        Ok(IncidenceAlgebra { category, bound, morphisms, index, factors })
    }

    pub fn category(&self) -> &C {
        &self.category
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// The fragment, ordered by codomain and then domain.
    pub fn morphisms(&self) -> &[C::Morphism] {
        &self.morphisms
    }

    fn position(&self, alpha: &C::Morphism) -> Result<usize> {
        self.index.get(alpha).copied().ok_or_else(|| Error::OutsideFragment {
            morphism: alpha.to_string(),
            bound: self.bound,
        })
    }

    /// Factorizations read from the precomputed table.
    pub fn factorizations(&self, alpha: &C::Morphism) -> Result<FactorizationList<C::Morphism>> {
        let at = self.position(alpha)?;
        let mut pairs: Vec<(C::Morphism, C::Morphism)> = self.factors[at]
            .iter()
            .map(|&(b, g)| (self.morphisms[b].clone(), self.morphisms[g].clone()))
            .collect();
        pairs.sort_by_key(|(_, gamma)| self.category.cod(gamma));
        Ok(FactorizationList { morphism: alpha.clone(), pairs })
    }

    pub fn from_fn<S, F>(&self, mut value: F) -> IncidenceFunction<C::Morphism, S>
    where
        F: FnMut(&C::Morphism) -> S,
    {
        let values = self.morphisms.iter().map(|f| (f.clone(), value(f))).collect();
        IncidenceFunction { bound: self.bound, values }
    }

    /// The convolution unit: one on identities, zero elsewhere.
    pub fn delta<S: Scalar>(&self) -> IncidenceFunction<C::Morphism, S> {
        self.from_fn(|f| if self.category.is_identity(f) { S::one() } else { S::zero() })
    }

    pub fn zeta<S: Scalar>(&self) -> IncidenceFunction<C::Morphism, S> {
        self.from_fn(|_| S::one())
    }

    fn values_of<'a, S>(&self, f: &'a IncidenceFunction<C::Morphism, S>) -> Result<Vec<&'a S>> {
        if f.bound != self.bound {
            return Err(Error::BoundMismatch { left: f.bound, right: self.bound });
        }
        self.morphisms.iter().map(|alpha| f.get(alpha)).collect()
    }

    /// `(f * g)(alpha) = sum of f(beta) g(gamma) over alpha = beta . gamma`.
    pub fn convolve<S: Scalar>(
        &self,
        f: &IncidenceFunction<C::Morphism, S>,
        g: &IncidenceFunction<C::Morphism, S>,
    ) -> Result<IncidenceFunction<C::Morphism, S>> {
        if f.bound != g.bound {
            return Err(Error::BoundMismatch { left: f.bound, right: g.bound });
        }
        let (fv, gv) = (self.values_of(f)?, self.values_of(g)?);
        let values = self
            .morphisms
            .iter()
            .zip(&self.factors)
            .map(|(alpha, pairs)| {
                let sum = pairs
                    .iter()
                    .fold(S::zero(), |acc, &(b, c)| acc + fv[b].clone() * gv[c].clone());
                (alpha.clone(), sum)
            })
            .collect();
        Ok(IncidenceFunction { bound: self.bound, values })
    }

    /// The two-sided convolution inverse. Solved by increasing `cod - dom`:
    /// only the factorization `id . alpha` involves `alpha` itself, every
    /// other inner factor is strictly shorter.
    pub fn invert<S: Scalar>(&self, f: &IncidenceFunction<C::Morphism, S>) -> Result<IncidenceFunction<C::Morphism, S>> {
        let fv = self.values_of(f)?;
        let ids: Vec<usize> = (0..=self.bound).map(|n| self.index[&self.category.identity(n)]).collect();
        if let Some(object) = ids.iter().position(|&i| fv[i].is_zero()) {
            return Err(Error::NotInvertible { object });
        }
        let c = &self.category;
        let mut order: Vec<usize> = (0..self.morphisms.len()).collect();
        order.sort_by_key(|&i| c.cod(&self.morphisms[i]) - c.dom(&self.morphisms[i]));
        let mut inverse: Vec<Option<S>> = vec![None; self.morphisms.len()];
        for at in order {
            let alpha = &self.morphisms[at];
            let n = c.cod(alpha);
            let pivot = fv[ids[n]].clone();
            let value = if c.is_identity(alpha) {
                S::one() / pivot
            } else {
                let rest = self.factors[at]
                    .iter()
                    .filter(|&&(_, g)| c.cod(&self.morphisms[g]) < n)
                    .fold(S::zero(), |acc, &(b, g)| {
                        let inner = inverse[g].clone().expect("shorter morphisms are solved first");
                        acc + fv[b].clone() * inner
                    });
                (S::zero() - rest) / pivot
            };
            inverse[at] = Some(value);
        }
        let values = self
            .morphisms
            .iter()
            .cloned()
            .zip(inverse.into_iter().map(|v| v.expect("every morphism solved")))
            .collect();
        Ok(IncidenceFunction { bound: self.bound, values })
    }

    /// The Möbius function of the fragment, `zeta^{-1}`.
    pub fn moebius<S: Scalar>(&self) -> IncidenceFunction<C::Morphism, S> {
        self.invert(&self.zeta()).expect("zeta is one on identities")
    }
}

/// `mu(a, b)` for a finite poset, zero when `a` is not below `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetMoebius<S> {
    size: usize,
    values: Vec<S>,
}

impl<S: Scalar> PosetMoebius<S> {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: usize, b: usize) -> &S {
        &self.values[a * self.size + b]
    }

    /// `sum over a <= c <= b of mu(a, c) = [a = b]` for every `a <= b`.
    pub fn satisfies_summation<T>(&self, p: &Poset<T>) -> bool {
        (0..self.size).all(|a| {
            (0..self.size).filter(|&b| p.leq(a, b)).all(|b| {
                let sum = (0..self.size)
                    .filter(|&c| p.leq(a, c) && p.leq(c, b))
                    .fold(S::zero(), |acc, c| acc + self.get(a, c).clone());
                if a == b {
                    sum.is_one()
                } else {
                    sum.is_zero()
                }
            })
        })
    }
}

/// `mu(a, a) = 1` and `mu(a, b) = -sum over a <= c < b of mu(a, c)`.
pub fn poset_moebius<T, S: Scalar>(p: &Poset<T>) -> PosetMoebius<S> {
    let size = p.len();
    // down-set size is a linear extension
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&b| (0..size).filter(|&c| p.leq(c, b)).count());
    let mut values = vec![S::zero(); size * size];
    for a in 0..size {
        let above: Vec<usize> = order.iter().copied().filter(|&b| p.leq(a, b)).collect();
        for &b in &above {
            values[a * size + b] = if a == b {
                S::one()
            } else {
                let sum = above
                    .iter()
                    .filter(|&&c| p.lt(c, b))
                    .fold(S::zero(), |acc, &c| acc + values[a * size + c].clone());
                S::zero() - sum
            };
        }
    }
    PosetMoebius { size, values }
}
