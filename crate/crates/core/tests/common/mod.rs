#![allow(dead_code)]

use std::collections::BTreeMap;

use motivic_dt::graded_series::{GradedSeries, MonomialIndex, Truncation};
use motivic_dt::motivic_coeff::{Sym, SymMono};
use motivic_dt::quantum_torus::{Charge, TorusElement};
use motivic_dt::rational::q;
use motivic_dt::{FractionCoeff, MotCoeff};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn mot(r: &mut impl Rng) -> MotCoeff {
    let mut c = MotCoeff::zero();
    for _ in 0..r.gen_range(1..=3) {
        let mono = match r.gen_range(0..4) {
            0 => SymMono::from_syms(vec![Sym::P(1)]),
            1 => SymMono::from_syms(vec![Sym::P(1), Sym::P(2)]),
            _ => SymMono::one(),
        };
        c = &c + &MotCoeff::term(r.gen_range(-3..=3), mono, q(r.gen_range(-3..=3)));
    }
    c
}

pub fn small_trunc() -> Truncation {
    Truncation::new(3, 3, vec![])
}

/// A random series with zero constant term.
pub fn augmented(r: &mut impl Rng) -> GradedSeries<MotCoeff> {
    let t = small_trunc();
    let mut s = GradedSeries::zero(t.clone());
    for _ in 0..r.gen_range(1..=4) {
        let rank = r.gen_range(0..=t.r_max);
        let z = r.gen_range(if rank == 0 { 1 } else { 0 }..=t.z_max);
        s.add_term(MonomialIndex::plain(rank, z, 0), mot(r));
    }
    s
}

/// Charges stay in the nonnegative cone, where the window clip is an ideal.
pub fn torus_element(r: &mut impl Rng, window: u64) -> TorusElement {
    let mut a = TorusElement::zero(2, window);
    for _ in 0..r.gen_range(1..=4) {
        let x = r.gen_range(0..=2i64);
        let y = r.gen_range(0..=2i64);
        a.add_term(vec![x, y], FractionCoeff::from(mot(r)));
    }
    a
}

/// Random invariants supported on multiples of `ray`.
pub fn ray_invariants(r: &mut impl Rng, ray: &[i64], window: u64) -> BTreeMap<Charge, FractionCoeff> {
    let norm: u64 = ray.iter().map(|x| x.unsigned_abs()).sum();
    let mut om = BTreeMap::new();
    for k in 1..=(window / norm) as i64 {
        let c = mot(r);
        if !c.is_zero() && r.gen_bool(0.7) {
            om.insert(ray.iter().map(|x| k * x).collect(), FractionCoeff::from(c));
        }
    }
    om
}
