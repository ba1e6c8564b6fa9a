//! The master series and the extraction of motivic classes.
//!
//! For a curve `X` with punctures `D` of orders `n_x` (irregularity `delta = sum (n_x - 1)`):
//!
//! ```text
//! Omega = sum_mu w^{|mu|} (-L^{1/2})^{(2g+delta)<mu,mu>} z^{2 delta n(mu')}
//!         prod_{cells} L_X(z^{2a+1} L^{-l-1}) / ((z^{2a+2} - L^l)(z^{2a} - L^{l+1}))
//!         prod_x H_mu(w_{x,1}, ..., w_{x,J_x}; z^2, L)
//! H = (1 - z^2) Log Omega
//! ```
//!
//! with denominators expanded in positive powers of `z`. `H` is polynomial in `z`,
//! so it can be evaluated at `z = 1`; the class of the stack of connections of
//! class `gamma'` is the `w^{gamma'}` coefficient of
//! `(-L^{1/2})^{chi(gamma')} Exp(L * H|_{z=1})`, restricted to the monomials
//! allowed by the residue (and, for semistable objects, weight) conditions.

mod omega;
mod theorems;

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded_series::{GradedSeries, Truncation};
use crate::motivic_coeff::{CurveData, FractionCoeff};
use crate::rational::Q;

pub use omega::omega_series;
pub use theorems::{Admissibility, ClassResult, Pairings};

/// Data at one puncture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PunctureConfig {
    pub id: String,
    /// Pole order `n_x >= 1`.
    pub order: u32,
    /// For each level `j`, the principal part `(c_{-n_x}, ..., c_{-1})`.
    pub principal_parts: Vec<Vec<Q>>,
    /// Parabolic weights, weakly increasing, one per level.
    pub weights: Vec<Q>,
}

impl PunctureConfig {
    pub fn levels(&self) -> usize {
        self.principal_parts.len()
    }

    pub fn residue(&self, j: usize) -> &Q {
        self.principal_parts[j].last().expect("principal parts are nonempty")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(format!("puncture {}: {m}", self.id)));
        if self.order == 0 {
            return bad("order must be positive".into());
        }
        if self.principal_parts.is_empty() {
            return bad("at least one level is required".into());
        }
        for (j, p) in self.principal_parts.iter().enumerate() {
            if p.len() != self.order as usize {
                return bad(format!("principal part {j} must have {} coefficients", self.order));
            }
        }
        if self.weights.len() != self.principal_parts.len() {
            return bad("one weight per level is required".into());
        }
        if self.weights.windows(2).any(|w| w[0] > w[1]) {
            return bad("weights must be weakly increasing".into());
        }
        let cap = &self.weights[0] + Q::from_integer(self.order.into());
        if self.weights.iter().any(|w| *w > cap) {
            return bad("weights must satisfy sigma_j <= sigma_1 + n_x".into());
        }
        Ok(())
    }
}

/// A class `gamma = (r, r_{x,j})` together with a degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaClass {
    pub r: u32,
    pub r_xj: Vec<Vec<u32>>,
    pub d: i64,
}

impl GammaClass {
    /// A class without punctures.
    pub fn rank(r: u32, d: i64) -> Self {
        GammaClass { r, r_xj: Vec::new(), d }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelConfig {
    pub curve: CurveData,
    pub punctures: Vec<PunctureConfig>,
    pub epsilon: Q,
    pub r_max: u32,
    pub z_max: u32,
}

impl ModelConfig {
    pub fn new(curve: CurveData, punctures: Vec<PunctureConfig>, epsilon: Q, r_max: u32, z_max: u32) -> Result<Self> {
        for p in &punctures {
            p.validate()?;
        }
        Ok(ModelConfig { curve, punctures, epsilon, r_max, z_max })
    }

    /// Irregularity `delta = sum_x (n_x - 1)`.
    pub fn delta(&self) -> u32 {
        self.punctures.iter().map(|p| p.order - 1).sum()
    }

    pub fn truncation(&self) -> Truncation {
        Truncation::new(self.r_max, self.z_max, self.punctures.iter().map(|p| p.levels() as u32).collect())
    }
}

/// Polynomiality check of `H`: w-monomials whose top z-coefficients do not vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialityReport {
    pub guard: u32,
    pub monomials_checked: usize,
    pub passed: bool,
    /// First violation as `(rank, r_xj, highest nonzero z-degree)`.
    pub first_violation: Option<(u32, Vec<Vec<u32>>, u32)>,
}

/// Caches `Omega`, `H` and `H|_{z=1}` for one configuration.
pub struct DtEngine {
    cfg: ModelConfig,
    guard: u32,
    omega: OnceLock<GradedSeries<FractionCoeff>>,
    h: OnceLock<Result<GradedSeries<FractionCoeff>>>,
    h_one: OnceLock<Result<GradedSeries<FractionCoeff>>>,
}

impl DtEngine {
    pub fn new(cfg: ModelConfig, guard: u32) -> Self {
        DtEngine { cfg, guard, omega: OnceLock::new(), h: OnceLock::new(), h_one: OnceLock::new() }
    }

    pub fn config(&self) -> &ModelConfig {
        &self.cfg
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn omega(&self) -> &GradedSeries<FractionCoeff> {
        self.omega.get_or_init(|| omega_series(&self.cfg))
    }

    /// `H = (1 - z^2) Log Omega`.
    pub fn h_series(&self) -> Result<GradedSeries<FractionCoeff>> {
        self.h.get_or_init(|| h_series(self.omega(), &self.cfg.curve)).clone()
    }

    pub fn polynomiality(&self) -> Result<PolynomialityReport> {
        let h = self.h_series()?;
        Ok(check_z_polynomiality(&h, self.guard))
    }

    /// `H` at `z = 1`, guarded by the stabilization window.
    pub fn h_at_z_one(&self) -> Result<GradedSeries<FractionCoeff>> {
        self.h_one.get_or_init(|| self.h_series()?.evaluate_z_one(self.guard)).clone()
    }
}

/// `H = (1 - z^2) Log Omega`, in normal form modulo the functional equation of `L_X`.
pub fn h_series(omega: &GradedSeries<FractionCoeff>, curve: &CurveData) -> Result<GradedSeries<FractionCoeff>> {
    let log = crate::plethystic::pleth_log(omega)?.map_coeffs(|c| c.map_symbolic(|m| curve.weil_reduce(m)));
    let t = omega.trunc().clone();
    let n = t.n_punct_vars();
    let factor = GradedSeries::one(t.clone()).sub(&GradedSeries::monomial(
        t,
        crate::graded_series::MonomialIndex::plain(0, 2, n),
        FractionCoeff::one(),
    ));
    Ok(log.mul(&factor))
}

pub fn check_z_polynomiality(h: &GradedSeries<FractionCoeff>, guard: u32) -> PolynomialityReport {
    let mut ws: Vec<_> = h.terms().map(|(i, _)| i.w_part()).collect();
    ws.dedup();
    ws.sort();
    ws.dedup();
    let v = h.z_tail_violations(guard);
    PolynomialityReport {
        guard,
        monomials_checked: ws.len(),
        passed: v.is_empty(),
        first_violation: v.first().map(|(w, z)| (w.rank, w.split_punct(&h.trunc().levels), *z)),
    }
}
