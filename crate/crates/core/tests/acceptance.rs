//! One line per acceptance criterion, with wall-clock limits.
//! Runs as a plain binary so the report is always printed.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use motivic_dt::curve_formulas::{bun_class, gl_class, goettsche_series, SurfaceZeta};
use motivic_dt::dt_engine::{DtEngine, GammaClass, ModelConfig, PunctureConfig};
use motivic_dt::graded_series::MonomialIndex;
use motivic_dt::plethystic::{adams_series, pleth_exp, pleth_log};
use motivic_dt::quantum_torus::{dt_extract_ray, ray_element, torus_mul, ChargeLattice};
use motivic_dt::rational::{frac, q};
use motivic_dt::symfunc::{hall_polynomial_prediction, macdonald_oracle, modified_macdonald, Partition};
use motivic_dt::{CurveData, FractionCoeff, MotCoeff, Realization, RealizedValue, Q};
use motivic_dt_oracles as oracles;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn point_count(c: &FractionCoeff, qv: i64, curve: Option<&CurveData>) -> Result<Q, String> {
    match c.realize(&Realization::point_count(qv), curve).map_err(|e| e.to_string())? {
        RealizedValue::Rational(v) => Ok(v),
        other => Err(format!("unexpected realization {other:?}")),
    }
}

fn inv_gl(r: u32) -> FractionCoeff {
    FractionCoeff::from(gl_class(r)).inverse().unwrap()
}

fn engine(curve: CurveData, punctures: Vec<PunctureConfig>, eps: Q, r_max: u32, z_max: u32) -> Result<DtEngine, String> {
    Ok(DtEngine::new(ModelConfig::new(curve, punctures, eps, r_max, z_max).map_err(|e| e.to_string())?, 6))
}

fn bun_vs_splitting_types() -> Check {
    let class = bun_class(&CurveData::rational(), 2).map_err(|e| e.to_string())?;
    for qv in [2u32, 3] {
        let v = point_count(&class, qv as i64, Some(&CurveData::rational()))?;
        let w = oracles::bun_p1_weighted_count(0, qv, 16).map_err(|e| e.to_string())?;
        let gap = motivic_dt::rational::abs(&(&v - &w.partial_sum));
        ensure(gap <= w.tail_bound, || format!("q={qv}: engine {v}, oracle {} +- {}", w.partial_sum, w.tail_bound))?;
        if qv == 2 {
            ensure(v == frac(1, 3), || format!("q=2 gives {v}"))?;
        }
    }
    Ok("q in {2,3} within tail bound, q=2 exactly 1/3".into())
}

fn goettsche_affine_plane() -> Check {
    let s = goettsche_series(&SurfaceZeta::affine_plane(3), 3).map_err(|e| e.to_string())?;
    let expect = [MotCoeff::one(), MotCoeff::l_pow(2), MotCoeff::poly_in_l(&[0, 0, 0, 1, 1]), MotCoeff::poly_in_l(&[0, 0, 0, 0, 1, 1, 1])];
    for (n, e) in expect.iter().enumerate() {
        let c = s.coefficient_at(&MonomialIndex::plain(0, n as u32, 0)).map_err(|e| e.to_string())?;
        ensure(&c == e, || format!("n={n}: {c}"))?;
    }
    let c2 = FractionCoeff::from(s.coefficient_at(&MonomialIndex::plain(0, 2, 0)).unwrap());
    let brute = oracles::hilb_a2_bruteforce(2, 2).map_err(|e| e.to_string())?;
    let v = point_count(&c2, 2, None)?;
    ensure(v == q(brute as i64), || format!("engine {v} vs brute force {brute}"))?;
    Ok(format!("n=0..3 exact, n=2 at q=2 is {brute}"))
}

fn projective_line_family() -> Check {
    let e = engine(CurveData::rational(), vec![], q(1), 3, 20)?;
    for r in 1..=3 {
        let c = e.conn_class(&GammaClass::rank(r, 0)).map_err(|e| e.to_string())?;
        ensure(c.class == inv_gl(r), || format!("r={r}: {}", c.class))?;
    }
    Ok("1/[GL(r)] for r=1,2,3".into())
}

fn elliptic_rank_one() -> Check {
    let curve = CurveData::new(1, vec![q(1), q(-2), q(5)]).map_err(|e| e.to_string())?;
    let e = engine(curve.clone(), vec![], q(1), 1, 12)?;
    let c = e.conn_class(&GammaClass::rank(1, 0)).map_err(|e| e.to_string())?;
    // L [Jac] / (L - 1) = -L [Jac] / (1 - L)
    let expect = FractionCoeff::inv_one_minus_l_pow(1).mul_mot(&curve.jacobian_class().shift_half(2)).scale(&q(-1));
    ensure(c.class == expect, || format!("class {}", c.class))?;
    let v = point_count(&c.class, 5, Some(&curve))?;
    ensure(v == q(5), || format!("realized {v}"))?;
    Ok("L[Jac]/(L-1), q=5 gives 5".into())
}

fn regular(res: Q) -> PunctureConfig {
    PunctureConfig { id: "x".into(), order: 1, principal_parts: vec![vec![res]], weights: vec![q(0)] }
}

fn one_regular_puncture() -> Check {
    for d in [-1i64, 0, 2] {
        let e = engine(CurveData::rational(), vec![regular(q(-d))], q(1), 1, 8)?;
        let c = e.conn_ss_class(&GammaClass { r: 1, r_xj: vec![vec![1]], d }).map_err(|e| e.to_string())?;
        ensure(c.class == inv_gl(1), || format!("d={d}: {}", c.class))?;
    }
    let e = engine(CurveData::rational(), vec![regular(frac(1, 2))], q(1), 1, 8)?;
    let c = e.conn_ss_class(&GammaClass { r: 1, r_xj: vec![vec![1]], d: 0 }).map_err(|e| e.to_string())?;
    ensure(c.class.is_zero() && c.pipeline_value.is_zero(), || format!("non-integer residue gives {}", c.class))?;
    Ok("1/(L-1) for integer residue, 0 otherwise".into())
}

fn non_abelian_hodge() -> Check {
    let curves = [(CurveData::rational(), 20), (CurveData::elliptic(2, 5), 24)];
    for (curve, z_max) in curves {
        let conn = engine(curve.clone(), vec![], q(1), 3, z_max)?;
        let higgs = engine(curve.clone(), vec![], q(0), 3, z_max)?;
        for r in 1..=3 {
            let g = GammaClass::rank(r, 0);
            let a = conn.conn_class(&g).map_err(|e| e.to_string())?;
            let b = higgs.conn_ss_class(&g).map_err(|e| e.to_string())?;
            ensure(a.class == b.class, || format!("g={} r={r}: {} vs {}", curve.genus(), a.class, b.class))?;
        }
    }
    Ok("g in {0,1}, r <= 3 symbolic equality".into())
}

fn flagged(order: u32, levels: usize) -> PunctureConfig {
    PunctureConfig {
        id: "x".into(),
        order,
        principal_parts: (0..levels).map(|j| (0..order).map(|k| q((j as i64 + 1) * (k as i64 + 2))).collect()).collect(),
        weights: (0..levels).map(|j| frac(j as i64, levels as i64 + 1)).collect(),
    }
}

fn polynomiality() -> Check {
    let mut checked = 0;
    for curve in [CurveData::rational(), CurveData::elliptic(2, 5)] {
        for punct in [vec![], vec![flagged(1, 2)], vec![flagged(2, 2)]] {
            let e = engine(curve.clone(), punct.clone(), q(1), 3, 24)?;
            let rep = e.polynomiality().map_err(|e| e.to_string())?;
            ensure(rep.passed, || format!("g={} punctures={}: {:?}", curve.genus(), punct.len(), rep.first_violation))?;
            checked += rep.monomials_checked;
        }
    }
    Ok(format!("6 configurations, {checked} w-monomials"))
}

fn macdonald_suite() -> Check {
    let mut n = 0;
    for mu in Partition::up_to(4).into_iter().filter(|m| !m.is_empty()) {
        for vars in 1..=4 {
            let h = modified_macdonald(&mu, vars);
            ensure(*h == macdonald_oracle(&mu, vars), || format!("mu={:?} J={vars}", mu.parts()))?;
            let h_conj = modified_macdonald(&mu.conjugate(), vars);
            ensure(h.swap_params() == *h_conj, || format!("conjugation mu={:?} J={vars}", mu.parts()))?;
            n += 1;
        }
    }
    Ok(format!("{n} (mu, J) pairs"))
}

fn plethystic_laws() -> Check {
    let mut r = common::rng(0x5eed);
    let cases = 60;
    for i in 0..cases {
        let f = common::augmented(&mut r);
        let g = common::augmented(&mut r);
        let ef = pleth_exp(&f).map_err(|e| e.to_string())?;
        ensure(pleth_log(&ef).map_err(|e| e.to_string())? == f, || format!("Log Exp, case {i}"))?;
        let eg = pleth_exp(&g).unwrap();
        ensure(pleth_exp(&f.add(&g)).unwrap() == ef.mul(&eg), || format!("Exp additivity, case {i}"))?;
        let (m, k) = (r_small(&mut r), r_small(&mut r));
        ensure(adams_series(&adams_series(&f, m), k) == adams_series(&f, m * k), || format!("psi composition, case {i}"))?;
        ensure(pleth_exp(&adams_series(&f, m)).unwrap() == adams_series(&ef, m), || format!("psi commutes with Exp, case {i}"))?;
    }
    Ok(format!("{cases} random series per law"))
}

fn r_small(r: &mut impl rand::Rng) -> u32 {
    r.gen_range(1..=3)
}

fn nilpotent_counting() -> Check {
    let mut cases = vec![(4usize, 2u32)];
    for d in 1..=3 {
        for qv in [2, 3] {
            cases.push((d, qv));
        }
    }
    for (d, qv) in cases {
        let c = oracles::count_nilpotent_types(d, qv).map_err(|e| e.to_string())?;
        let expect = (qv as u64).pow((d * d - d) as u32);
        ensure(c.total == expect, || format!("d={d} q={qv}: {} vs {expect}", c.total))?;
    }
    let c = oracles::count_nilpotent_types(2, 2).unwrap();
    let expect: BTreeMap<Vec<u32>, u64> = [(vec![1, 1], 1), (vec![2], 3)].into_iter().collect();
    ensure(c.by_type == expect, || format!("d=2 q=2 types {:?}", c.by_type))?;
    Ok("totals q^(d^2-d), d=2 q=2 breakdown".into())
}

fn hall_bridge() -> Check {
    let mut n = 0;
    for qv in [2u32, 3] {
        for lambda in Partition::up_to(3) {
            for mu in Partition::up_to(lambda.size()) {
                for nu in Partition::all(lambda.size() - mu.size()) {
                    let brute = oracles::hall_numbers_bruteforce(lambda.parts(), mu.parts(), nu.parts(), qv).map_err(|e| e.to_string())?;
                    let pred = hall_polynomial_prediction(&lambda, &mu, &nu, qv as i64);
                    ensure(pred == q(brute as i64), || {
                        format!("q={qv} {:?} {:?} {:?}: {brute} vs {pred}", lambda.parts(), mu.parts(), nu.parts())
                    })?;
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} triples"))
}

fn quantum_torus() -> Check {
    let mut r = common::rng(0x70_5e);
    let lat = ChargeLattice::new(vec![vec![0, 2], vec![-2, 0]]).unwrap();
    for i in 0..30 {
        let (a, b, c) = (common::torus_element(&mut r, 4), common::torus_element(&mut r, 4), common::torus_element(&mut r, 4));
        let left = torus_mul(&torus_mul(&a, &b, &lat), &c, &lat);
        let right = torus_mul(&a, &torus_mul(&b, &c, &lat), &lat);
        ensure(left == right, || format!("associativity, case {i}"))?;
    }
    for (i, ray) in [[1i64, 0], [1, 1], [1, -2], [2, 1], [0, 1]].iter().cycle().take(20).enumerate() {
        let om = common::ray_invariants(&mut r, ray, 8);
        let a = ray_element(&om, 2, 8).map_err(|e| e.to_string())?;
        ensure(dt_extract_ray(&a).map_err(|e| e.to_string())? == om, || format!("ray round trip {ray:?}, case {i}"))?;
    }
    let flat = ChargeLattice::commutative(2);
    for i in 0..10 {
        let rays = [[1i64, 0], [1, 1], [0, 1]];
        let els: Vec<_> = rays.iter().map(|g| ray_element(&common::ray_invariants(&mut r, g, 6), 2, 6).unwrap()).collect();
        let p = |o: [usize; 3]| torus_mul(&torus_mul(&els[o[0]], &els[o[1]], &flat), &els[o[2]], &flat);
        let base = p([0, 1, 2]);
        for o in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            ensure(p(o) == base, || format!("order {o:?}, case {i}"))?;
        }
    }
    Ok("associativity, ray round trip, commutative order independence".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "bun_class vs splitting-type oracle", limit: secs(1), run: bun_vs_splitting_types },
        Criterion { id: 2, name: "Goettsche series of the affine plane", limit: secs(10), run: goettsche_affine_plane },
        Criterion { id: 3, name: "inverse GL classes on P1", limit: secs(60), run: projective_line_family },
        Criterion { id: 4, name: "elliptic rank one", limit: secs(5), run: elliptic_rank_one },
        Criterion { id: 5, name: "one regular puncture", limit: secs(5), run: one_regular_puncture },
        Criterion { id: 6, name: "non-abelian Hodge equality", limit: secs(300), run: non_abelian_hodge },
        Criterion { id: 7, name: "z-polynomiality of H", limit: secs(300), run: polynomiality },
        Criterion { id: 8, name: "Macdonald vs interpolation oracle", limit: secs(120), run: macdonald_suite },
        Criterion { id: 9, name: "plethystic laws", limit: secs(60), run: plethystic_laws },
        Criterion { id: 10, name: "nilpotent counting", limit: secs(120), run: nilpotent_counting },
        Criterion { id: 11, name: "Hall numbers vs Hall-Littlewood", limit: secs(300), run: hall_bridge },
        Criterion { id: 12, name: "quantum torus", limit: secs(300), run: quantum_torus },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let (tag, detail) = match outcome {
            Ok(d) if took <= c.limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over time limit")),
            Err(e) => ("FAIL", e),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} {:02} {:<38} {:>9.3}s (limit {:>3}s)  {detail}", c.id, c.name, took.as_secs_f64(), c.limit.as_secs());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
