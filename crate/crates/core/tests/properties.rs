use std::sync::Arc;

use bpu_core::invariants::{act, generate_group, sl2_generators, Mat2};
use bpu_core::spectral::{d3_squared_vanishes, E3Page};
use bpu_core::steenrod::{FpElement, MilnorIndex};
use bpu_core::symfun::{kernel_k, kernel_l, t_nabla, Lambda};
use bpu_core::topology::{delta_star, delta_star_multinomial, GammaModel};
use bpu_core::{make_algebra, Algebra, CoeffRing, Element, GeneratorSpec, Integers, PrimeField};
use num_bigint::BigInt;
use proptest::prelude::*;

fn f3() -> PrimeField {
    PrimeField::new(3).unwrap()
}

fn mixed<R: CoeffRing>(ring: R) -> Arc<Algebra<R>> {
    make_algebra(
        vec![
            GeneratorSpec::even("u", 2),
            GeneratorSpec::even("v", 4),
            GeneratorSpec::odd("a", 1),
            GeneratorSpec::odd("b", 3),
            GeneratorSpec::odd("c", 5),
        ],
        ring,
    )
    .unwrap()
}

/// Homogeneous element of degree `d` with coefficients taken cyclically.
fn homogeneous<R: CoeffRing>(alg: &Arc<Algebra<R>>, d: u32, coeffs: &[i64]) -> Element<R> {
    let ring = alg.ring().clone();
    let terms = alg
        .basis(d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, ring.from_i64(coeffs[i % coeffs.len()])));
    Element::from_terms(alg, terms)
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..12)
}

fn gamma_element(model: &GammaModel, d: u32, c: &[i64]) -> FpElement {
    homogeneous(model.algebra(), d, c)
}

fn sign(d1: u32, d2: u32) -> i64 {
    if d1 % 2 == 1 && d2 % 2 == 1 {
        -1
    } else {
        1
    }
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 256, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn graded_commutative_and_associative(d1 in 0u32..9, d2 in 0u32..9, d3 in 0u32..6,
                                          c1 in coeffs(), c2 in coeffs(), c3 in coeffs()) {
        let alg = mixed(Integers);
        let x = homogeneous(&alg, d1, &c1);
        let y = homogeneous(&alg, d2, &c2);
        let z = homogeneous(&alg, d3, &c3);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, (&y * &x).scale_i64(sign(d1, d2)));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn graded_commutative_mod_p(d1 in 0u32..9, d2 in 0u32..9, c1 in coeffs(), c2 in coeffs()) {
        let alg = mixed(PrimeField::new(5).unwrap());
        let x = homogeneous(&alg, d1, &c1);
        let y = homogeneous(&alg, d2, &c2);
        prop_assert_eq!(&x * &y, (&y * &x).scale_i64(sign(d1, d2)));
        if d1 % 2 == 1 {
            prop_assert!((&x * &x).is_zero());
        }
    }

    #[test]
    fn coordinates_round_trip(d in 0u32..14, c in coeffs()) {
        let alg = mixed(Integers);
        let x = homogeneous(&alg, d, &c);
        let back = Element::from_coords(&alg, d, &x.coords(d).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn nabla_is_a_derivation(n in 1u32..7, k1 in 0u32..6, k2 in 0u32..6, c1 in coeffs(), c2 in coeffs()) {
        let lam = Lambda::new(n, Integers);
        let f = homogeneous(lam.algebra(), 2 * k1, &c1);
        let g = homogeneous(lam.algebra(), 2 * k2, &c2);
        prop_assert_eq!(lam.nabla(&(&f * &g)), &(&lam.nabla(&f) * &g) + &(&f * &lam.nabla(&g)));
    }

    #[test]
    fn nabla_matches_t_variables(n in 1u32..=5, k in 0u32..=8, c in coeffs()) {
        let lam = Lambda::new(n, Integers);
        let f = homogeneous(lam.algebra(), 2 * k, &c);
        prop_assert_eq!(lam.expand_in_t(&lam.nabla(&f)), t_nabla(&lam.expand_in_t(&f)));
    }

    #[test]
    fn cartan_and_instability(d1 in 1u32..8, d2 in 1u32..8, c1 in coeffs(), c2 in coeffs(), k in 0u64..6) {
        let model = GammaModel::new(f3(), 1);
        let act = model.action();
        let x = gamma_element(&model, d1, &c1);
        let y = gamma_element(&model, d2, &c2);
        prop_assert_eq!(act.total_power(&(&x * &y)), &act.total_power(&x) * &act.total_power(&y));
        let mut cartan = Element::zero(model.algebra());
        for i in 0..=k {
            cartan = &cartan + &(&act.power(i, &x).unwrap() * &act.power(k - i, &y).unwrap());
        }
        prop_assert_eq!(act.power(k, &(&x * &y)).unwrap(), cartan);
        if 2 * k > u64::from(d1) {
            prop_assert!(act.power(k, &x).unwrap().is_zero());
        }
        if 2 * k == u64::from(d1) {
            prop_assert_eq!(act.power(k, &x).unwrap(), x.pow(3));
        }
        prop_assert!(act.bockstein(&act.bockstein(&x)).is_zero());
    }

    #[test]
    fn milnor_derivation(i in 0u32..=4, d1 in 1u32..4, d2 in 1u32..4, c1 in coeffs(), c2 in coeffs()) {
        let model = GammaModel::new(f3(), 1);
        let act = model.action();
        let q = MilnorIndex(i);
        let x = gamma_element(&model, d1, &c1);
        let y = gamma_element(&model, d2, &c2);
        let lhs = act.milnor_q(q, &(&x * &y)).unwrap();
        let rhs = &(&act.milnor_q(q, &x).unwrap() * &y)
            + &(&x * &act.milnor_q(q, &y).unwrap()).scale_i64(sign(d1, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn milnor_squares_vanish(i in 0u32..=2, d in 1u32..5, c in coeffs()) {
        let model = GammaModel::new(f3(), 1);
        let act = model.action();
        let x = gamma_element(&model, d, &c);
        let q = MilnorIndex(i);
        prop_assert!(act.milnor_q(q, &act.milnor_q(q, &x).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn sl2_action_commutes_with_steenrod(g_index in 0usize..24, d in 1u32..7, c in coeffs(), k in 0u64..4) {
        let field = f3();
        let model = GammaModel::new(field, 1);
        let group = generate_group(field, &sl2_generators(field)).unwrap();
        let g: Mat2 = group[g_index % group.len()];
        let act_s = model.action();
        let x = gamma_element(&model, d, &c);
        prop_assert_eq!(act(&model, &g, &act_s.bockstein(&x)), act_s.bockstein(&act(&model, &g, &x)));
        prop_assert_eq!(
            act(&model, &g, &act_s.power(k, &x).unwrap()),
            act_s.power(k, &act(&model, &g, &x)).unwrap()
        );
    }

    #[test]
    fn block_inclusion_is_natural(d in 1u32..9, c in coeffs(), k in 0u64..4) {
        let small = GammaModel::new(f3(), 1);
        let large = GammaModel::new(f3(), 2);
        let x = gamma_element(&small, d, &c);
        let inc = |e: &FpElement| small.include_into(&large, e);
        prop_assert_eq!(inc(&small.action().bockstein(&x)), large.action().bockstein(&inc(&x)));
        prop_assert_eq!(
            inc(&small.action().power(k, &x).unwrap()),
            large.action().power(k, &inc(&x)).unwrap()
        );
    }

    #[test]
    fn delta_star_paths_agree(p_index in 0usize..2, m in 1u32..12, up_to in 0u32..12) {
        let p = [3u64, 5][p_index];
        let field = PrimeField::new(p).unwrap();
        let n = m * p as u32;
        prop_assert_eq!(delta_star(field, n, up_to).unwrap(), delta_star_multinomial(field, n, up_to).unwrap());
    }

    #[test]
    fn integral_kernel_reduces_into_mod_p_kernel(n in 1u32..8, k in 0u32..8) {
        let field = f3();
        let lam = Lambda::new(n, field);
        let kernel = kernel_k(n, k);
        for v in &kernel {
            let reduced = v.map_coefficients(lam.algebra(), |c: &BigInt| field.reduce_bigint(c));
            prop_assert!(lam.nabla(&reduced).is_zero());
        }
        prop_assert!(kernel.len() <= kernel_l(field, n, k).len());
    }

    #[test]
    fn d3_composites_vanish(n in 1u32..10, s in 0u32..=21, k in 1u32..8) {
        let page = E3Page::new(f3(), n);
        prop_assert!(d3_squared_vanishes(&page, s, 2 * k).unwrap());
    }
}

#[test]
fn page_edge_matches_integral_kernel() {
    for n in [3, 9] {
        let page = E3Page::new(f3(), n);
        for k in 0..=12 {
            assert_eq!(page.e4_rank(0, 2 * k).unwrap(), kernel_k(n, k).len(), "n={n} k={k}");
        }
    }
}
