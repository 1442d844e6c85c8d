use bipartite_order::category::{identity_b, TriangularCategory};
use bipartite_order::incidence::{poset_moebius, IncidenceAlgebra};
use bipartite_order::order::{build_poset, DEFAULT_GUARD};
use bipartite_order::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

type Function<C> = IncidenceFunction<<C as TriangularCategory>::Morphism, Rational>;

fn from_pairs<C: TriangularCategory>(algebra: &IncidenceAlgebra<C>, raw: &[(i32, i32)]) -> Function<C> {
    let mut it = raw.iter().cycle();
    algebra.from_fn(|_| {
        let &(p, q) = it.next().unwrap();
        Rational::new(p.into(), i64::from(q.unsigned_abs().max(1)).into())
    })
}

fn ratio() -> impl Strategy<Value = (i32, i32)> {
    (-9i32..=9, 1i32..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convolution_is_associative_on_b(raw in prop::collection::vec((ratio(), ratio(), ratio()), 17)) {
        let algebra = IncidenceAlgebra::new(CategoryB, 3).unwrap();
        let f = from_pairs(&algebra, &raw.iter().map(|t| t.0).collect::<Vec<_>>());
        let g = from_pairs(&algebra, &raw.iter().map(|t| t.1).collect::<Vec<_>>());
        let h = from_pairs(&algebra, &raw.iter().map(|t| t.2).collect::<Vec<_>>());
        let left = algebra.convolve(&algebra.convolve(&f, &g).unwrap(), &h).unwrap();
        let right = algebra.convolve(&f, &algebra.convolve(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn convolution_is_associative_on_delta(raw in prop::collection::vec((ratio(), ratio(), ratio()), 15)) {
        let algebra = IncidenceAlgebra::new(CategoryDelta, 3).unwrap();
        let f = from_pairs(&algebra, &raw.iter().map(|t| t.0).collect::<Vec<_>>());
        let g = from_pairs(&algebra, &raw.iter().map(|t| t.1).collect::<Vec<_>>());
        let h = from_pairs(&algebra, &raw.iter().map(|t| t.2).collect::<Vec<_>>());
        let left = algebra.convolve(&algebra.convolve(&f, &g).unwrap(), &h).unwrap();
        let right = algebra.convolve(&f, &algebra.convolve(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_is_two_sided(raw in prop::collection::vec(ratio(), 17)) {
        let algebra = IncidenceAlgebra::new(CategoryB, 3).unwrap();
        let f = from_pairs(&algebra, &raw);
        let has_zero_identity = (0..=3).any(|n| f.get(&identity_b(n)).unwrap().is_zero());
        match algebra.invert(&f) {
            Ok(inverse) => {
                prop_assert!(!has_zero_identity);
                let delta = algebra.delta();
                prop_assert_eq!(algebra.convolve(&f, &inverse).unwrap(), delta.clone());
                prop_assert_eq!(algebra.convolve(&inverse, &f).unwrap(), delta);
            }
            Err(Error::NotInvertible { object }) => {
                prop_assert!(f.get(&identity_b(object)).unwrap().is_zero());
            }
            Err(other) => prop_assert!(false, "unexpected error {other}"),
        }
    }

    #[test]
    fn graph_json_round_trip(n in 0usize..6, pick in any::<u64>()) {
        let all = enumerate_bn(n);
        let graph = &all[(pick % all.len() as u64) as usize];
        let text = serde_json::to_string(graph).unwrap();
        let back: BipartiteGraph = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, graph);
    }
}

#[test]
fn unit_law_on_both_categories() {
    fn check<C: TriangularCategory>(c: C) {
        let algebra = IncidenceAlgebra::new(c, 4).unwrap();
        let size = algebra.morphisms().len();
        let f: Function<C> = algebra.from_fn({
            let mut t = 0i64;
            move |_| {
                t += 1;
                Rational::new((t * 7 % 11 - 5).into(), (t % 4 + 1).into())
            }
        });
        assert!(size > 0);
        let delta = algebra.delta();
        assert_eq!(algebra.convolve(&f, &delta).unwrap(), f);
        assert_eq!(algebra.convolve(&delta, &f).unwrap(), f);
    }
    check(CategoryB);
    check(CategoryDelta);
}

#[test]
fn moebius_inverts_zeta_with_integer_values() {
    fn check<C: TriangularCategory>(c: C) {
        let algebra = IncidenceAlgebra::new(c, 4).unwrap();
        let zeta: Function<C> = algebra.zeta();
        let mu = algebra.moebius();
        assert_eq!(algebra.convolve(&zeta, &mu).unwrap(), algebra.delta());
        assert_eq!(algebra.convolve(&mu, &zeta).unwrap(), algebra.delta());
        assert!(mu.iter().all(|(_, v)| v.is_integer()));
    }
    check(CategoryB);
    check(CategoryDelta);
}

#[test]
fn delta_moebius_is_alternating_sign() {
    // On Delta every alpha: m -> n has mu = (-1)^(n-m), as for a Boolean algebra.
    let algebra = IncidenceAlgebra::new(CategoryDelta, 4).unwrap();
    let mu: Function<CategoryDelta> = algebra.moebius();
    for (alpha, value) in mu.iter() {
        let sign = if (alpha.cod() - alpha.dom()) % 2 == 0 { Rational::one() } else { -Rational::one() };
        assert_eq!(*value, sign, "{alpha}");
    }
}

#[test]
fn poset_moebius_summation() {
    for n in 0..=4 {
        let p = build_poset(n, DEFAULT_GUARD).unwrap();
        let mu: IntegerPosetMoebius = poset_moebius(&p);
        assert!(mu.satisfies_summation(&p), "n = {n}");
        let small: PosetMoebius<i64> = poset_moebius(&p);
        assert!(small.satisfies_summation(&p));
    }
}
