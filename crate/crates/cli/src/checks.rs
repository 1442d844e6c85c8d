//! Verification suites behind `bporder check`.
//!
//! Each check runs exhaustively up to `min(max_n, cap)`, where the cap keeps
//! the check within seconds; the covered range is part of the printed label.

use bipartite_order::category::{
    check_boolean_iso, check_category_laws, check_moebius_axioms, is_epi_bounded, is_mono, prop7_witness,
    pullback_search, pushout_search_bounded, subobject_leq, subobject_poset, EpiResult, PushoutResult,
};
use bipartite_order::incidence::{poset_moebius, IncidenceAlgebra};
use bipartite_order::order::{build_poset, DEFAULT_GUARD};
use bipartite_order::{
    enumerate_bn, enumerate_hom_b, hom_count_b, leq, BipartiteGraph, CategoryB, CategoryDelta, Error,
    IncidenceFunction, IntegerPosetMoebius, Rational, TriangularCategory,
};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_b1a5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Order,
    Category,
    Moebius,
    Lattice,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skip(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub label: String,
    pub outcome: Outcome,
    pub details: Vec<String>,
}

impl CheckLine {
    fn new(label: impl Into<String>, passed: bool) -> Self {
        let outcome = if passed { Outcome::Pass } else { Outcome::Fail };
        CheckLine { label: label.into(), outcome, details: Vec::new() }
    }

    fn skip(label: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckLine { label: label.into(), outcome: Outcome::Skip(reason.into()), details: Vec::new() }
    }

    fn detail(mut self, text: impl Into<String>) -> Self {
        self.details.push(text.into());
        self
    }

    fn from_result(label: impl Into<String>, result: Result<(), String>) -> Self {
        match result {
            Ok(()) => CheckLine::new(label, true),
            Err(why) => CheckLine::new(label, false).detail(why),
        }
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub fn render(&self) -> String {
        let mut text = match &self.outcome {
            Outcome::Pass => format!("{}: PASS", self.label),
            Outcome::Fail => format!("{}: FAIL", self.label),
            Outcome::Skip(why) => format!("{}: SKIP ({why})", self.label),
        };
        for d in &self.details {
            text.push_str("\n  ");
            text.push_str(d);
        }
        text
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub max_n: usize,
    pub max_cod: usize,
    pub seed: u64,
}

pub fn run_suite(suite: Suite, options: &CheckOptions) -> Vec<CheckLine> {
    let mut lines = Vec::new();
    if matches!(suite, Suite::All | Suite::Order) {
        lines.extend(order_suite(options.max_n));
    }
    if matches!(suite, Suite::All | Suite::Category) {
        lines.extend(category_suite_with(&CategoryB, options));
    }
    if matches!(suite, Suite::All | Suite::Lattice) {
        lines.extend(lattice_suite(options.max_n));
    }
    if matches!(suite, Suite::All | Suite::Moebius) {
        lines.extend(moebius_suite(options.max_n, options.seed));
    }
    lines
}

fn fail_on_error<T>(result: Result<T, Error>) -> Result<T, String> {
    result.map_err(|e| e.to_string())
}

pub fn order_suite(max_n: usize) -> Vec<CheckLine> {
    let mut lines = Vec::new();

    let top = max_n.min(5);
    lines.push(CheckLine::from_result(
        format!("(B_n,≤) is reflexive, antisymmetric and transitive for n ≤ {top}"),
        (0..=top).try_for_each(|n| {
            let p = fail_on_error(build_poset(n, DEFAULT_GUARD))?;
            p.check_axioms().map_err(|v| format!("n = {n}: {v:?}"))
        }),
    ));

    lines.push(CheckLine::from_result(
        format!("distinct graphs with equal basis are incomparable for n ≤ {top}"),
        (0..=top).try_for_each(|n| {
            let all = enumerate_bn(n);
            for u in &all {
                for v in all.iter().filter(|v| v.k() == u.k() && *v != u) {
                    if fail_on_error(leq(u, v))? {
                        return Err(format!("{u} ≤ {v}"));
                    }
                }
            }
            Ok(())
        }),
    ));

    let top4 = max_n.min(4);
    lines.push(CheckLine::from_result(
        format!("Hasse diagram closure reproduces (B_n,≤) for n ≤ {top4}"),
        (0..=top4).try_for_each(|n| {
            let p = fail_on_error(build_poset(n, DEFAULT_GUARD))?;
            if p.hasse().closure() == p.relation() {
                Ok(())
            } else {
                Err(format!("n = {n}"))
            }
        }),
    ));

    lines.push(CheckLine::from_result(
        format!("bottom and top are the edge-free k=0 and k=n graphs for n ≤ {top}"),
        (0..=top).try_for_each(|n| {
            let p = fail_on_error(build_poset(n, DEFAULT_GUARD))?;
            let bottom = p.bottom().map(|i| p.element(i).clone());
            let top = p.top().map(|i| p.element(i).clone());
            if bottom == BipartiteGraph::empty(n, 0).ok() && top == BipartiteGraph::empty(n, n).ok() {
                Ok(())
            } else {
                Err(format!("n = {n}: bottom {bottom:?}, top {top:?}"))
            }
        }),
    ));
    lines
}

/// Category-level checks for B, parameterized by the implementation of B so
/// that a broken composition can be shown to fail them.
pub fn category_suite_with<B>(b: &B, options: &CheckOptions) -> Vec<CheckLine>
where
    B: TriangularCategory<Morphism = BipartiteGraph>,
{
    let max_n = options.max_n;
    let mut lines = Vec::new();
    let top4 = max_n.min(4);

    lines.push(CheckLine::from_result(
        format!("category laws for B with objects ≤ {top4}"),
        check_category_laws(b, top4),
    ));
    lines.push(CheckLine::from_result(
        format!("category laws for Delta with objects ≤ {top4}"),
        check_category_laws(&CategoryDelta, top4),
    ));

    let top8 = max_n.min(8);
    lines.push(CheckLine::from_result(
        format!("|Hom_B(k,n)| = 2^(k(n-k)) by enumeration for n ≤ {top8}"),
        (0..=top8).try_for_each(|n| {
            (0..=n).try_for_each(|k| {
                let listed = b.hom(k, n).len();
                if BigUint::from(listed) == hom_count_b(k, n) && b.hom(k, n) == enumerate_hom_b(k, n) {
                    Ok(())
                } else {
                    Err(format!("Hom_B({k},{n}) has {listed} elements"))
                }
            })
        }),
    ));

    let top10 = max_n.min(10);
    lines.push(CheckLine::from_result(
        format!("|Hom_Delta(k,n)| = C(n,k) with Pascal recurrence for n ≤ {top10}"),
        (0..=top10).try_for_each(|n| {
            (0..=n).try_for_each(|k| {
                let listed = CategoryDelta.hom(k, n).len();
                let pascal_ok = k == 0
                    || n == 0
                    || listed == CategoryDelta.hom(k - 1, n - 1).len() + CategoryDelta.hom(k, n - 1).len();
                if BigUint::from(listed) == CategoryDelta.hom_count(k, n) && pascal_ok {
                    Ok(())
                } else {
                    Err(format!("Hom_Delta({k},{n}) has {listed} elements"))
                }
            })
        }),
    ));

    lines.push(CheckLine::from_result(
        format!("every B-morphism with objects ≤ {top4} is mono"),
        (0..=top4).try_for_each(|n| match b.morphisms_into(n).into_iter().find(|f| !is_mono(b, f)) {
            Some(f) => Err(format!("{f} is not mono")),
            None => Ok(()),
        }),
    ));

    let epi_label = format!("B is not epi (f: 0→1 against Hom(1,p), p ≤ {})", options.max_cod);
    if max_n < 2 {
        lines.push(CheckLine::skip(epi_label, "needs --max-n ≥ 2"));
    } else {
        let f = BipartiteGraph::empty(1, 0).expect("valid graph");
        let line = match is_epi_bounded(b, &f, options.max_cod.max(1)) {
            Ok(EpiResult::NotEpi { cod, first, second }) => CheckLine::new(epi_label, true)
                .detail(format!("V = {first}, V' = {second} in Hom(1,{cod}) agree after f")),
            Ok(EpiResult::EpiUpToBound { max_cod }) => {
                CheckLine::new(epi_label, false).detail(format!("no counterexample up to {max_cod}"))
            }
            Err(e) => CheckLine::new(epi_label, false).detail(e.to_string()),
        };
        lines.push(line);
    }

    lines.push(CheckLine::from_result(
        format!("subobject order of B equals (B_n,≤) with composite witnesses for n ≤ {top4}"),
        (0..=top4).try_for_each(|n| {
            let all = enumerate_bn(n);
            for u in &all {
                for v in &all {
                    let found = fail_on_error(subobject_leq(b, u, v))?;
                    let ordered = fail_on_error(leq(u, v))?;
                    if found.is_some() != ordered {
                        return Err(format!("{u} vs {v}: subobject {}, order {ordered}", found.is_some()));
                    }
                    if ordered {
                        let w = fail_on_error(prop7_witness(u, v))?;
                        if fail_on_error(b.compose(v, &w))? != *u {
                            return Err(format!("witness {w} does not reproduce {u}"));
                        }
                    }
                }
            }
            Ok(())
        }),
    ));

    lines.push(CheckLine::from_result(
        format!("same-domain subobjects are incomparable in B and Delta for n ≤ {top4}"),
        same_domain_incomparable(b, top4).and_then(|_| same_domain_incomparable(&CategoryDelta, top4)),
    ));

    lines.push(CheckLine::new(
        format!("Möbius category axioms for B and Delta with objects ≤ {top4}"),
        check_moebius_axioms(b, top4) && check_moebius_axioms(&CategoryDelta, top4),
    ));

    let pushout_label = format!("Delta has no pushout of 0→1, 0→1 up to codomain {}", options.max_cod.max(1));
    if max_n < 1 {
        lines.push(CheckLine::skip(pushout_label, "needs --max-n ≥ 1"));
    } else {
        let f = CategoryDelta.hom(0, 1).remove(0);
        let line = match pushout_search_bounded(&CategoryDelta, &f, &f, options.max_cod.max(1)) {
            Ok(PushoutResult::NoneUpToBound { .. }) => CheckLine::new(pushout_label, true),
            Ok(PushoutResult::Found { cocone, .. }) => {
                CheckLine::new(pushout_label, false).detail(format!("found apex {}", cocone.apex))
            }
            Err(e) => CheckLine::new(pushout_label, false).detail(e.to_string()),
        };
        lines.push(line);
    }
    lines
}

fn same_domain_incomparable<C: TriangularCategory>(c: &C, max_n: usize) -> Result<(), String> {
    for n in 0..=max_n {
        let into = c.morphisms_into(n);
        for a in &into {
            for other in into.iter().filter(|o| c.dom(o) == c.dom(a) && *o != a) {
                if fail_on_error(subobject_leq(c, a, other))?.is_some() {
                    return Err(format!("{a} ≤ {other} in {}", c.name()));
                }
            }
        }
    }
    Ok(())
}

pub fn lattice_suite(max_n: usize) -> Vec<CheckLine> {
    let mut lines = Vec::new();
    let not_lattice = "(B_3,≤) is NOT a lattice";
    let missing_pullback = "some B-cospan into 3 has no pullback";
    if max_n < 3 {
        lines.push(CheckLine::skip(not_lattice, "needs --max-n ≥ 3"));
        lines.push(CheckLine::skip(missing_pullback, "needs --max-n ≥ 3"));
    } else {
        let line = match build_poset(3, DEFAULT_GUARD) {
            Ok(p) => match p.is_lattice().witness() {
                Some((a, b)) => CheckLine::new(not_lattice, true).detail(format!(
                    "witness {} and {}: meet {}, join {}",
                    p.element(a),
                    p.element(b),
                    if p.meet(a, b).is_some() { "exists" } else { "missing" },
                    if p.join(a, b).is_some() { "exists" } else { "missing" },
                )),
                None => CheckLine::new(not_lattice, false),
            },
            Err(e) => CheckLine::new(not_lattice, false).detail(e.to_string()),
        };
        lines.push(line);

        let into = CategoryB.morphisms_into(3);
        let mut missing = None;
        'search: for f in &into {
            for g in &into {
                match pullback_search(&CategoryB, f, g) {
                    Ok(None) => {
                        missing = Some((f.clone(), g.clone()));
                        break 'search;
                    }
                    Ok(Some(_)) => {}
                    Err(e) => {
                        lines.push(CheckLine::new(missing_pullback, false).detail(e.to_string()));
                        return lines;
                    }
                }
            }
        }
        lines.push(match missing {
            Some((f, g)) => CheckLine::new(missing_pullback, true).detail(format!("f = {f}, g = {g}")),
            None => CheckLine::new(missing_pullback, false),
        });
    }

    let top4 = max_n.min(4);
    lines.push(CheckLine::from_result(
        format!("Delta has all pullbacks and lattice S(n) for n ≤ {top4}"),
        (0..=top4).try_for_each(|n| {
            let into = CategoryDelta.morphisms_into(n);
            for f in &into {
                for g in &into {
                    if fail_on_error(pullback_search(&CategoryDelta, f, g))?.is_none() {
                        return Err(format!("no pullback of {f} and {g}"));
                    }
                }
            }
            let s = fail_on_error(subobject_poset(&CategoryDelta, n))?;
            if s.is_lattice().holds() {
                Ok(())
            } else {
                Err(format!("S({n}) is not a lattice"))
            }
        }),
    ));

    let top5 = max_n.min(5);
    lines.push(CheckLine::from_result(
        format!("Delta: S(n) is isomorphic to the Boolean algebra of subsets for n ≤ {top5}"),
        (0..=top5).try_for_each(|n| if check_boolean_iso(n) { Ok(()) } else { Err(format!("n = {n}")) }),
    ));
    lines
}

fn random_function<C: TriangularCategory>(
    algebra: &IncidenceAlgebra<C>,
    rng: &mut ChaCha8Rng,
) -> IncidenceFunction<C::Morphism, Rational> {
    algebra.from_fn(|_| Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=6))))
}

fn incidence_checks<C: TriangularCategory>(c: C, bound: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let algebra = fail_on_error(IncidenceAlgebra::new(c, bound))?;
    let name = algebra.category().name();
    let delta = algebra.delta::<Rational>();
    let f = random_function(&algebra, rng);
    if fail_on_error(algebra.convolve(&f, &delta))? != f || fail_on_error(algebra.convolve(&delta, &f))? != f {
        return Err(format!("delta is not a unit on {name}"));
    }
    let zeta = algebra.zeta::<Rational>();
    let mu = fail_on_error(algebra.invert(&zeta))?;
    if fail_on_error(algebra.convolve(&zeta, &mu))? != delta || fail_on_error(algebra.convolve(&mu, &zeta))? != delta {
        return Err(format!("zeta * mu is not delta on {name}"));
    }
    Ok(())
}

fn random_algebra_checks<C: TriangularCategory>(c: C, bound: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let algebra = fail_on_error(IncidenceAlgebra::new(c, bound))?;
    let name = algebra.category().name();
    for _ in 0..8 {
        let (f, g, h) = (random_function(&algebra, rng), random_function(&algebra, rng), random_function(&algebra, rng));
        let left = fail_on_error(algebra.convolve(&fail_on_error(algebra.convolve(&f, &g))?, &h))?;
        let right = fail_on_error(algebra.convolve(&f, &fail_on_error(algebra.convolve(&g, &h))?))?;
        if left != right {
            return Err(format!("convolution is not associative on {name}"));
        }
        let zero_identity = (0..=bound).any(|n| f.get(&algebra.category().identity(n)).map_or(true, |v| v.is_zero()));
        match algebra.invert(&f) {
            Ok(inv) => {
                let delta = algebra.delta();
                if zero_identity
                    || fail_on_error(algebra.convolve(&f, &inv))? != delta
                    || fail_on_error(algebra.convolve(&inv, &f))? != delta
                {
                    return Err(format!("bad inverse on {name}"));
                }
            }
            Err(Error::NotInvertible { .. }) if zero_identity => {}
            Err(e) => return Err(e.to_string()),
        }
        // force the non-invertible branch as well
        let id = algebra.category().identity(rng.gen_range(0..=bound));
        let killed = algebra.from_fn(|m| if *m == id { Rational::zero() } else { f.get(m).unwrap().clone() });
        if !matches!(algebra.invert(&killed), Err(Error::NotInvertible { .. })) {
            return Err(format!("a zero identity value was inverted on {name}"));
        }
    }
    Ok(())
}

pub fn moebius_suite(max_n: usize, seed: u64) -> Vec<CheckLine> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();
    let top4 = max_n.min(4);
    lines.push(CheckLine::from_result(
        format!("delta is a two-sided unit and zeta * mu = delta on B and Delta fragments bounded by {top4}"),
        incidence_checks(CategoryB, top4, &mut rng).and_then(|_| incidence_checks(CategoryDelta, top4, &mut rng)),
    ));
    let top3 = max_n.min(3);
    lines.push(CheckLine::from_result(
        format!("convolution is associative and invert succeeds iff identities are nonzero (seed {seed}, bound {top3})"),
        random_algebra_checks(CategoryB, top3, &mut rng)
            .and_then(|_| random_algebra_checks(CategoryDelta, top3, &mut rng)),
    ));
    lines.push(CheckLine::from_result(
        format!("poset Möbius summation identity on (B_n,≤) for n ≤ {top4}"),
        (0..=top4).try_for_each(|n| {
            let p = fail_on_error(build_poset(n, DEFAULT_GUARD))?;
            let mu: IntegerPosetMoebius = poset_moebius(&p);
            if mu.satisfies_summation(&p) {
                Ok(())
            } else {
                Err(format!("n = {n}"))
            }
        }),
    ));
    lines
}
