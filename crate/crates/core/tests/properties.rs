//! Property tests for the algebraic invariants of each module.

use proptest::prelude::*;
use std::sync::Arc;

use taukit_core::characters::ClassFunction;
use taukit_core::exact_arith::{int, Cyclotomic, Rational, F31};
use taukit_core::groups::{all_subgroups, cyclic, symmetric, FiniteGroup};
use taukit_core::koszul_graded::{
    diagonal_conormal, invariant_sections_generate, linear_kernel_oracle, summation_homotopy_holds, KoszulComplex, Poly,
};
use taukit_core::kspaces::identities::{additivity, multiplicativity, route_agreement};
use taukit_core::kspaces::{BundleSum, DecomposedClass, KClassPn};
use taukit_core::lambda::LineSumClass;

fn cyclotomic(order: u64, coeffs: &[i64]) -> Cyclotomic {
    coeffs.iter().enumerate().fold(Cyclotomic::zero(), |acc, (k, &c)| {
        acc.add(&Cyclotomic::zeta_pow(order, k as i64).scale(&int(c)))
    })
}

fn groups() -> Vec<Arc<FiniteGroup>> {
    vec![cyclic(3), cyclic(4), symmetric(3), symmetric(4)]
}

/// A virtual character with small integer multiplicities.
fn virtual_char(g: &Arc<FiniteGroup>, seed: &[i64]) -> ClassFunction {
    let k = taukit_core::characters::character_table(g).unwrap().num_irreducibles();
    let m: Vec<num_bigint::BigInt> = (0..k).map(|i| seed[i % seed.len()].into()).collect();
    ClassFunction::from_multiplicities(g, &m).unwrap()
}

fn side() -> impl Strategy<Value = BundleSum> {
    prop::collection::vec((-2i64..=2, 1u64..=2), 0..=2).prop_map(|t| BundleSum::new(&t))
}

fn decomposed(n: usize) -> impl Strategy<Value = DecomposedClass> {
    (side(), side()).prop_map(move |(p, q)| DecomposedClass::new(n, p, q))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn cyclotomic_products_reduce_consistently(
        order in prop::sample::select(vec![3u64, 4, 5, 6, 7]),
        a in prop::collection::vec(-3i64..=3, 1..8),
        b in prop::collection::vec(-3i64..=3, 1..8),
        c in prop::collection::vec(-3i64..=3, 1..8),
    ) {
        let (x, y, z) = (cyclotomic(order, &a), cyclotomic(order, &b), cyclotomic(order, &c));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(Cyclotomic::zeta_pow(order, order as i64), Cyclotomic::one());
    }

    #[test]
    fn prime_order_norms_are_nonzero(a in prop::collection::vec(-3i64..=3, 1..6)) {
        let x = cyclotomic(5, &a);
        if !x.is_zero() {
            prop_assert!(x.norm() != Rational::from_integer(0.into()));
            prop_assert_eq!(x.mul(&x.inverse().unwrap()), Cyclotomic::one());
        }
    }

    /// `φ` ranges over integer class functions, so subgroups without a
    /// character table are covered too.
    #[test]
    fn frobenius_reciprocity(gi in 0usize..4, si in 0usize..32, a in prop::collection::vec(-3i64..=3, 1..6), b in prop::collection::vec(-2i64..=2, 1..6)) {
        let g = &groups()[gi];
        let subs = all_subgroups(g).unwrap();
        let emb = &subs[si % subs.len()];
        let h = emb.sub();
        let values: Vec<i64> = (0..h.num_classes()).map(|c| a[c % a.len()]).collect();
        let phi = ClassFunction::from_ints(h.clone(), &values).unwrap();
        let chi = virtual_char(g, &b);
        prop_assert_eq!(phi.induce(emb).unwrap().inner(&chi).unwrap(), phi.inner(&chi.restrict(emb).unwrap()).unwrap());
    }

    #[test]
    fn adams_operations_are_ring_maps(gi in 0usize..4, a in prop::collection::vec(-2i64..=2, 1..6), b in prop::collection::vec(-2i64..=2, 1..6), k in 1i64..=5, m in 1i64..=4) {
        let g = &groups()[gi];
        let (x, y) = (virtual_char(g, &a), virtual_char(g, &b));
        prop_assert_eq!(x.mul(&y).unwrap().psi(k), x.psi(k).mul(&y.psi(k)).unwrap());
        prop_assert_eq!(x.add(&y).unwrap().psi(k), x.psi(k).add(&y.psi(k)).unwrap());
        prop_assert_eq!(x.psi(k).psi(m), x.psi(k * m));
    }

    #[test]
    fn power_map_wraps_at_order_plus_one(gi in 0usize..4) {
        let g = &groups()[gi];
        let id: Vec<usize> = (0..g.num_classes()).collect();
        prop_assert_eq!(g.power_map(g.order() as i64 + 1), id);
    }

    #[test]
    fn lambda_minus_one_is_multiplicative(
        a in prop::collection::vec((-2i64..=2, 0i64..=2), 1..3),
        b in prop::collection::vec((-2i64..=2, 0i64..=2), 1..3),
        n in 0usize..=2,
    ) {
        let g = cyclic(1);
        let x = LineSumClass::from_twists(&g, n, &a).unwrap();
        let y = LineSumClass::from_twists(&g, n, &b).unwrap();
        let lhs = x.add(&y).unwrap().lambda_minus_one().unwrap();
        let rhs = x.lambda_minus_one().unwrap().mul(&y.lambda_minus_one().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bott_theta_inverts(a in prop::collection::vec((-2i64..=2, -2i64..=2), 1..3), n in 0usize..=2, l in 2u32..=3) {
        let g = cyclic(1);
        let x = LineSumClass::from_twists(&g, n, &a).unwrap();
        if x.rank() != 0 {
            let prod = x.bott_theta(l).unwrap().mul(&x.bott_theta_inverse(l).unwrap()).unwrap();
            prop_assert_eq!(prod, taukit_core::kspaces::EqKClass::one(&g, n).unwrap());
        }
    }

    #[test]
    fn tau_routes_agree(x in decomposed(1), l in 1usize..=3) {
        let r = route_agreement(&x, l).unwrap();
        prop_assert!(r.passed, "{:?}", r);
    }

    #[test]
    fn tau_additive_and_multiplicative(x in decomposed(1), y in decomposed(1), l in 1usize..=3) {
        let a = additivity(&x, &y, l).unwrap();
        prop_assert!(a.passed, "{:?}", a);
        let m = multiplicativity(&x, &y, l).unwrap();
        prop_assert!(m.passed, "{:?}", m);
    }

    #[test]
    fn pn_classes_round_trip(c in prop::collection::vec(-4i64..=4, 3)) {
        let x = KClassPn::from_ints(2, &c).unwrap();
        let back = DecomposedClass::from_class(&x).unwrap().to_class();
        prop_assert_eq!(back, x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn koszul_differentials_square_to_zero(
        gens in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..=4),
        quad in prop::collection::vec(-2i64..=2, 3),
    ) {
        let mut polys: Vec<Poly<Rational>> = gens.iter().map(|c| Poly::linear(c)).collect();
        let q = Poly::<Rational>::linear(&quad);
        polys.push(q.mul(&q));
        let k = KoszulComplex::new(3, polys).unwrap();
        prop_assert!(k.d_squared_vanishes(3).unwrap());
    }

    #[test]
    fn koszul_homology_matches_kernel_oracle(gens in prop::collection::vec(prop::collection::vec(-2i64..=2, 2), 1..=4)) {
        let polys: Vec<Poly<Rational>> = gens.iter().map(|c| Poly::linear(c)).collect();
        let table = KoszulComplex::new(2, polys.clone()).unwrap().homology_dimensions(4);
        prop_assert_eq!(table, linear_kernel_oracle(2, &polys, 4).unwrap());
    }

    #[test]
    fn koszul_homology_over_prime_field(gens in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..=3)) {
        let polys: Vec<Poly<F31>> = gens.iter().map(|c| Poly::linear(c)).collect();
        let table = KoszulComplex::new(3, polys.clone()).unwrap().homology_dimensions(3);
        prop_assert_eq!(table, linear_kernel_oracle(3, &polys, 3).unwrap());
    }
}

#[test]
fn summation_complex_is_contractible() {
    for l in 1..=6 {
        assert!(summation_homotopy_holds::<Rational>(l));
        assert!(summation_homotopy_holds::<F31>(l));
    }
}

#[test]
fn conormal_alpha_is_equivariant() {
    for (n, l) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
        let r = diagonal_conormal(n, l, 2).unwrap();
        assert!(r.degrees.iter().all(|d| d.alpha_equivariant && d.is_representation), "{r}");
    }
}

#[test]
fn constructed_sections_are_invariant() {
    for r in 0..=2 {
        for l in 1..=3 {
            assert!(invariant_sections_generate::<F31>(r, l, 1).unwrap().invariant);
        }
    }
}
