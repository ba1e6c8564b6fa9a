use rayon::prelude::*;

use super::ModelConfig;
use crate::graded_series::{GradedSeries, MonomialIndex, Truncation};
use crate::motivic_coeff::{FractionCoeff, MotCoeff};
use crate::rational::q;
use crate::symfunc::{modified_macdonald, Partition};

fn z_only(t: &Truncation, terms: impl IntoIterator<Item = (u32, MotCoeff)>) -> GradedSeries<MotCoeff> {
    crate::graded_series::z_series(t, terms.into_iter().filter(|(k, _)| *k <= t.z_max))
}

/// `-sum_{j >= 0} L^{-e(j+1)} z^{step j}`, the expansion of `1 / (z^step - L^e)`.
fn geometric_tail(t: &Truncation, step: u32, e: i32) -> GradedSeries<MotCoeff> {
    let n = if step == 0 { 0 } else { t.z_max / step };
    z_only(t, (0..=n).map(|j| (step * j, MotCoeff::l_pow(-e * (j as i32 + 1)).scale(&q(-1)))))
}

/// `H_mu(w_{x,1}, ..., w_{x,J}; z^2, L)` placed in the block of puncture `x`.
fn macdonald_factor(t: &Truncation, mu: &Partition, x: usize) -> GradedSeries<MotCoeff> {
    let levels = t.levels[x] as usize;
    let offset: usize = t.levels[..x].iter().map(|&j| j as usize).sum();
    let h = modified_macdonald(mu, levels);
    let mut out = GradedSeries::zero(t.clone());
    for (alpha, c) in h.explicit() {
        let mut punct = vec![0; t.n_punct_vars()];
        punct[offset..offset + levels].copy_from_slice(&alpha);
        for (&(i, j), v) in c.terms() {
            let idx = MonomialIndex::new(0, punct.clone(), 2 * i);
            if t.contains(&idx) {
                out.add_term(idx, MotCoeff::l_pow(j as i32).scale(v));
            }
        }
    }
    out
}

/// The `mu`-summand of `Omega`.
fn omega_term(cfg: &ModelConfig, t: &Truncation, l_coeffs: &[MotCoeff], mu: &Partition) -> GradedSeries<FractionCoeff> {
    let g = cfg.curve.genus();
    let delta = cfg.delta();
    let zshift = 2 * delta * mu.n_conj();
    if zshift > t.z_max {
        return GradedSeries::zero(t.clone());
    }
    let n = t.n_punct_vars();

    let k = ((2 * g + delta) * mu.mu_mu()) as i32;
    let sign = if k % 2 == 0 { q(1) } else { q(-1) };
    let mut series = GradedSeries::monomial(t.clone(), MonomialIndex::plain(mu.size(), zshift, n), MotCoeff::l_pow_half(k).scale(&sign));
    let mut scalar = FractionCoeff::one();

    for (row, col) in mu.cells() {
        let a = mu.arm(row, col);
        let l = mu.leg(row, col) as i32;
        // L_X(z^{2a+1} L^{-l-1})
        let lx = z_only(
            t,
            l_coeffs.iter().enumerate().map(|(k, b)| ((2 * a + 1) * k as u32, b.shift_half(-2 * (l + 1) * k as i32))),
        );
        series = series.mul(&lx).mul(&geometric_tail(t, 2 * a + 2, l));
        if a == 0 {
            scalar = &scalar * &FractionCoeff::inv_one_minus_l_pow(l + 1);
        } else {
            series = series.mul(&geometric_tail(t, 2 * a, l + 1));
        }
    }
    for x in 0..cfg.punctures.len() {
        series = series.mul(&macdonald_factor(t, mu, x));
    }
    series.map_coeffs(|c| scalar.mul_mot(c))
}

/// The master series `Omega` up to the truncation of `cfg`.
pub fn omega_series(cfg: &ModelConfig) -> GradedSeries<FractionCoeff> {
    let t = cfg.truncation();
    let l_coeffs: Vec<MotCoeff> = cfg.curve.symbolic_l_coeffs().iter().map(|b| cfg.curve.weil_reduce(b)).collect();
    let parts: Vec<Partition> = (1..=t.r_max).flat_map(Partition::all).collect();
    let terms: Vec<GradedSeries<FractionCoeff>> =
        parts.par_iter().map(|mu| omega_term(cfg, &t, &l_coeffs, mu)).collect();
    terms.iter().fold(GradedSeries::one(t.clone()), |acc, s| acc.add(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motivic_coeff::CurveData;

    #[test]
    fn rank_one_on_projective_line() {
        let cfg = ModelConfig::new(CurveData::rational(), vec![], q(1), 1, 6).unwrap();
        let om = omega_series(&cfg);
        // 1 / ((z^2 - 1)(1 - L)) = -1/(1 - L) * sum z^{2j}
        for z in 0..=6 {
            let c = om.coefficient_at(&MonomialIndex::plain(1, z, 0)).unwrap();
            let expect = if z % 2 == 0 { FractionCoeff::inv_one_minus_l_pow(1).scale(&q(-1)) } else { FractionCoeff::zero() };
            assert_eq!(c, expect, "z^{z}");
        }
    }
}
