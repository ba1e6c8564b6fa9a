mod common;

use motivic_dt::graded_series::{GradedSeries, MonomialIndex};
use motivic_dt::motivic_coeff::{Sym, SymMono};
use motivic_dt::plethystic::{adams_series, pleth_exp, pleth_log};
use motivic_dt::quantum_torus::{dt_extract_ray, ray_element, torus_mul, ChargeLattice};
use motivic_dt::rational::{format_rational, parse_rational, q};
use motivic_dt::symfunc::Partition;
use motivic_dt::{CurveData, FractionCoeff, MotCoeff, Realization, RealizedValue, Q};
use proptest::prelude::*;

fn mot_strategy() -> impl Strategy<Value = MotCoeff> {
    prop::collection::vec((-4i32..=4, 0u8..4, -5i64..=5), 1..4).prop_map(|terms| {
        terms.into_iter().fold(MotCoeff::zero(), |acc, (e, m, c)| {
            let mono = match m {
                0 => SymMono::from_syms(vec![Sym::P(1)]),
                1 => SymMono::from_syms(vec![Sym::P(2)]),
                _ => SymMono::one(),
            };
            &acc + &MotCoeff::term(e, mono, q(c))
        })
    })
}

fn fraction_strategy() -> impl Strategy<Value = FractionCoeff> {
    (mot_strategy(), 0u32..3, 1i32..4)
        .prop_map(|(c, k, m)| (0..k).fold(FractionCoeff::from(c), |acc, _| &acc * &FractionCoeff::inv_one_minus_l_pow(m)))
}

fn realize(c: &FractionCoeff, r: &Realization, curve: &CurveData) -> Q {
    match c.realize(r, Some(curve)).unwrap() {
        RealizedValue::Rational(v) => v,
        other => panic!("{other:?}"),
    }
}

fn sqrt_realization(qv: i64, root: i64) -> Realization {
    Realization::PointCount { q: q(qv), sqrt_q: Some(q(root)) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn point_count_is_a_ring_map(a in fraction_strategy(), b in fraction_strategy()) {
        let curve = CurveData::elliptic(3, 4);
        let r = sqrt_realization(4, 2);
        let (ra, rb) = (realize(&a, &r, &curve), realize(&b, &r, &curve));
        prop_assert_eq!(realize(&(&a * &b), &r, &curve), &ra * &rb);
        prop_assert_eq!(realize(&(&a + &b), &r, &curve), &ra + &rb);
    }

    #[test]
    fn adams_is_point_count_over_extension(terms in prop::collection::vec((-4i32..=4, -5i64..=5), 1..4), k in 1u32..4) {
        let a = terms.into_iter().fold(MotCoeff::zero(), |acc, (e, c)| &acc + &MotCoeff::term(e, SymMono::one(), q(c)));
        let curve = CurveData::rational();
        let lhs = realize(&FractionCoeff::from(a.adams(k)), &sqrt_realization(4, 2), &curve);
        let rhs = realize(&FractionCoeff::from(a), &sqrt_realization(4i64.pow(k), 2i64.pow(k)), &curve);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mot_json_round_trip(a in mot_strategy()) {
        let text = serde_json::to_string(&a.to_json_terms()).unwrap();
        prop_assert_eq!(MotCoeff::from_json_str(&text).unwrap(), a);
    }

    #[test]
    fn fraction_json_round_trip(a in fraction_strategy()) {
        prop_assert_eq!(FractionCoeff::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn inverse_is_two_sided(a in fraction_strategy()) {
        prop_assume!(!a.is_zero());
        if let Ok(inv) = a.inverse() {
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn rational_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let x = Q::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(1u32..6, 0..6)) {
        let p = Partition::from_unsorted(parts);
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.n(), p.conjugate().n_conj());
        let hooks: u32 = p.cells().map(|(r, c)| p.arm(r, c) + p.leg(r, c) + 1).sum();
        prop_assert_eq!(hooks, p.n() + p.n_conj() + p.size());
    }

    #[test]
    fn exp_log_round_trip(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let f = common::augmented(&mut r);
        let e = pleth_exp(&f).unwrap();
        prop_assert_eq!(pleth_log(&e).unwrap(), f.clone());
        prop_assert_eq!(pleth_exp(&pleth_log(&e).unwrap()).unwrap(), e);
    }

    #[test]
    fn exp_turns_sums_into_products(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let (f, g) = (common::augmented(&mut r), common::augmented(&mut r));
        prop_assert_eq!(pleth_exp(&f.add(&g)).unwrap(), pleth_exp(&f).unwrap().mul(&pleth_exp(&g).unwrap()));
    }

    #[test]
    fn adams_composes(seed in any::<u64>(), m in 1u32..4, k in 1u32..4) {
        let mut r = common::rng(seed);
        let f = common::augmented(&mut r);
        prop_assert_eq!(adams_series(&adams_series(&f, m), k), adams_series(&f, m * k));
        prop_assert_eq!(adams_series(&f.mul(&f), m), adams_series(&f, m).mul(&adams_series(&f, m)));
    }

    #[test]
    fn series_inverse(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let f = common::augmented(&mut r);
        let one = GradedSeries::one(f.trunc().clone());
        let g = one.add(&f);
        prop_assert_eq!(g.mul(&g.invert().unwrap()), one);
    }

    #[test]
    fn torus_is_associative(seed in any::<u64>(), p in -3i64..=3) {
        let mut r = common::rng(seed);
        let lat = ChargeLattice::new(vec![vec![0, p], vec![-p, 0]]).unwrap();
        let (a, b, c) = (common::torus_element(&mut r, 4), common::torus_element(&mut r, 4), common::torus_element(&mut r, 4));
        prop_assert_eq!(
            torus_mul(&torus_mul(&a, &b, &lat), &c, &lat),
            torus_mul(&a, &torus_mul(&b, &c, &lat), &lat)
        );
    }

    #[test]
    fn ray_round_trip(seed in any::<u64>(), x in 0i64..3, y in 1i64..3) {
        let mut r = common::rng(seed);
        let om = common::ray_invariants(&mut r, &[x, y], 6);
        let a = ray_element(&om, 2, 6).unwrap();
        prop_assert_eq!(dt_extract_ray(&a).unwrap(), om);
    }
}

#[test]
fn rank_one_series_has_unit_constant() {
    let mut r = common::rng(1);
    let f = common::augmented(&mut r);
    let e = pleth_exp(&f).unwrap();
    assert!(e.coefficient_at(&MonomialIndex::plain(0, 0, 0)).unwrap().is_one());
}
