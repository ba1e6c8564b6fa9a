//! Closed formulas: Kapranov zeta functions, stacks of bundles, Hilbert schemes
//! of points on surfaces, and `[GL(n)]`.

use crate::error::{Error, Result};
use crate::graded_series::{GradedSeries, MonomialIndex, Truncation};
use crate::motivic_coeff::{CurveData, FractionCoeff, MotCoeff};

fn z_trunc(z_max: u32) -> Truncation {
    Truncation::new(0, z_max, vec![])
}

fn zi(k: u32) -> MonomialIndex {
    MonomialIndex::plain(0, k, 0)
}

/// `L_X(z)` with coefficients in the power-sum symbols.
pub fn l_polynomial(curve: &CurveData, z_max: u32) -> GradedSeries<MotCoeff> {
    GradedSeries::from_terms(
        z_trunc(z_max),
        curve.symbolic_l_coeffs().into_iter().enumerate().map(|(k, c)| (zi(k as u32), c)),
    )
}

/// `zeta_X(z) = sum [Sym^n X] z^n = L_X(z) / ((1 - z)(1 - L z))`.
pub fn kapranov_zeta(curve: &CurveData, z_max: u32) -> GradedSeries<MotCoeff> {
    let t = z_trunc(z_max);
    let one = GradedSeries::one(t.clone());
    let a = one.sub(&GradedSeries::monomial(t.clone(), zi(1), MotCoeff::one()));
    let b = one.sub(&GradedSeries::monomial(t, zi(1), MotCoeff::lefschetz()));
    let den = a.mul(&b).invert().expect("constant term 1");
    l_polynomial(curve, z_max).mul(&den)
}

/// `[Bun_{r,d}] = L^{(r^2-1)(g-1)} [Jac] / (L - 1) prod_{i=2}^r zeta_X(L^{-i})`.
pub fn bun_class(curve: &CurveData, r: u32) -> Result<FractionCoeff> {
    if r == 0 {
        return Err(Error::InvalidInput("rank must be positive".into()));
    }
    let g = curve.genus() as i32;
    let r_i = r as i32;
    let lead = MotCoeff::l_pow((r_i * r_i - 1) * (g - 1)) * MotCoeff::jac();
    // 1/(L - 1) = -1/(1 - L)
    let mut acc = FractionCoeff::inv_one_minus_l_pow(1).mul_mot(&lead.scale(&crate::rational::q(-1)));
    let b = curve.symbolic_l_coeffs();
    for i in 2..=r_i {
        // L_X(L^{-i}) = sum_k b_k L^{-ik}
        let mut lx = MotCoeff::zero();
        for (k, bk) in b.iter().enumerate() {
            lx = &lx + &bk.shift_half(-2 * i * k as i32);
        }
        let factor = &FractionCoeff::inv_one_minus_l_pow(-i) * &FractionCoeff::inv_one_minus_l_pow(1 - i);
        acc = &acc * &factor.mul_mot(&lx);
    }
    Ok(acc)
}

/// The zeta series `sum [Sym^n S] z^n` of a surface.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceZeta {
    series: GradedSeries<MotCoeff>,
}

impl SurfaceZeta {
    pub fn new(series: GradedSeries<MotCoeff>) -> Result<Self> {
        if !series.constant_term().is_one() {
            return Err(Error::InvalidInput("surface zeta series must have constant term 1".into()));
        }
        if series.terms().any(|(i, _)| i.rank != 0 || i.punct.iter().any(|&x| x != 0)) {
            return Err(Error::InvalidInput("surface zeta series must be a series in z alone".into()));
        }
        Ok(SurfaceZeta { series })
    }

    /// From the classes `[Sym^n S]`, `n = 0, 1, ...`.
    pub fn from_coeffs(coeffs: Vec<MotCoeff>) -> Result<Self> {
        let z_max = coeffs.len().saturating_sub(1) as u32;
        Self::new(GradedSeries::from_terms(
            z_trunc(z_max),
            coeffs.into_iter().enumerate().map(|(k, c)| (zi(k as u32), c)),
        ))
    }

    /// `A^2`: `zeta = 1 / (1 - L^2 z)`.
    pub fn affine_plane(z_max: u32) -> Self {
        let t = z_trunc(z_max);
        let f = GradedSeries::one(t.clone()).sub(&GradedSeries::monomial(t, zi(1), MotCoeff::l_pow(2)));
        SurfaceZeta { series: f.invert().expect("constant term 1") }
    }

    pub fn series(&self) -> &GradedSeries<MotCoeff> {
        &self.series
    }
}

/// `sum [Hilb_n S] z^n = prod_{m >= 1} zeta_S(L^{m-1} z^m)`, up to `z^{z_max}`.
pub fn goettsche_series(surface: &SurfaceZeta, z_max: u32) -> Result<GradedSeries<MotCoeff>> {
    if surface.series.trunc().z_max < z_max {
        return Err(Error::InvalidInput(format!(
            "surface zeta known to z^{} only, need z^{z_max}",
            surface.series.trunc().z_max
        )));
    }
    let t = z_trunc(z_max);
    let mut acc = GradedSeries::one(t.clone());
    for m in 1..=z_max {
        let sub = GradedSeries::from_terms(
            t.clone(),
            surface.series.terms().filter(|(i, _)| i.z * m <= z_max).map(|(i, c)| {
                (zi(i.z * m), c.shift_half(2 * (m as i32 - 1) * i.z as i32))
            }),
        );
        acc = acc.mul(&sub);
    }
    Ok(acc)
}

/// `[GL(n)] = prod_{k=0}^{n-1} (L^n - L^k)`.
pub fn gl_class(n: u32) -> MotCoeff {
    let mut acc = MotCoeff::one();
    for k in 0..n {
        acc = &acc * &(&MotCoeff::l_pow(n as i32) - &MotCoeff::l_pow(k as i32));
    }
    acc
}
