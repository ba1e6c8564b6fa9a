use num_traits::Zero;
use serde::Serialize;

use super::{DtEngine, GammaClass, ModelConfig};
use crate::error::{Error, Result};
use crate::graded_series::{GradedSeries, MonomialIndex};
use crate::motivic_coeff::{FractionCoeff, MotCoeff};
use crate::rational::{is_integer, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pairings {
    #[serde(serialize_with = "ser_q")]
    pub star_zeta: Q,
    #[serde(serialize_with = "ser_q")]
    pub star_sigma: Q,
    pub chi: i64,
}

fn ser_q<S: serde::Serializer>(v: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::rational::format_rational(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub full_at: Vec<bool>,
    pub nonresonant_at: Vec<bool>,
    pub residue_condition: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassResult {
    pub gamma: GammaClass,
    /// The motivic class; zero when the residue condition fails.
    #[serde(skip)]
    pub class: FractionCoeff,
    /// The filtered `w^{gamma'}` coefficient, computed regardless of the residue condition.
    #[serde(skip)]
    pub pipeline_value: FractionCoeff,
    pub pairings: Pairings,
    pub admissibility: Admissibility,
    pub integer_weights: bool,
}

impl ModelConfig {
    /// `r_{x,j}` padded to `J_x` levels and flattened, after shape checks.
    fn flat_levels(&self, gamma: &GammaClass) -> Result<Vec<u32>> {
        if gamma.r_xj.len() != self.punctures.len() {
            return Err(Error::ShapeMismatch(format!(
                "gamma has {} puncture blocks, configuration has {}",
                gamma.r_xj.len(),
                self.punctures.len()
            )));
        }
        let mut out = Vec::new();
        for (p, rs) in self.punctures.iter().zip(&gamma.r_xj) {
            let levels = p.levels();
            if rs[levels.min(rs.len())..].iter().any(|&r| r != 0) {
                return Err(Error::ShapeMismatch(format!(
                    "puncture {}: only {levels} levels are configured",
                    p.id
                )));
            }
            if rs.iter().sum::<u32>() != gamma.r {
                return Err(Error::ShapeMismatch(format!("puncture {}: sum of r_xj must equal r = {}", p.id, gamma.r)));
            }
            out.extend((0..levels).map(|j| rs.get(j).copied().unwrap_or(0)));
        }
        Ok(out)
    }

    fn star_zeta_flat(&self, flat: &[u32]) -> Q {
        let mut acc = Q::zero();
        let mut at = 0;
        for p in &self.punctures {
            for j in 0..p.levels() {
                acc += p.residue(j) * Q::from_integer(flat[at].into());
                at += 1;
            }
        }
        acc
    }

    fn star_sigma_flat(&self, flat: &[u32]) -> Q {
        let mut acc = Q::zero();
        let mut at = 0;
        for p in &self.punctures {
            for j in 0..p.levels() {
                acc += &p.weights[j] * Q::from_integer(flat[at].into());
                at += 1;
            }
        }
        acc
    }

    fn chi(&self, gamma: &GammaClass) -> i64 {
        let g = self.curve.genus() as i64;
        let r = gamma.r as i64;
        let mut chi = (2 * g - 2) * r * r - self.delta() as i64 * r;
        for (p, rs) in self.punctures.iter().zip(&gamma.r_xj) {
            for i in 0..rs.len() {
                for j in i + 1..rs.len() {
                    chi += 2 * p.order as i64 * rs[i] as i64 * rs[j] as i64;
                }
            }
        }
        chi
    }

    pub fn pairings(&self, gamma: &GammaClass) -> Result<Pairings> {
        let flat = self.flat_levels(gamma)?;
        Ok(Pairings { star_zeta: self.star_zeta_flat(&flat), star_sigma: self.star_sigma_flat(&flat), chi: self.chi(gamma) })
    }

    pub fn admissibility(&self, gamma: &GammaClass) -> Admissibility {
        let mut full_at = Vec::new();
        let mut nonresonant_at = Vec::new();
        let mut star_zeta = Q::zero();
        for (x, p) in self.punctures.iter().enumerate() {
            let rs = gamma.r_xj.get(x).map(Vec::as_slice).unwrap_or(&[]);
            full_at.push(rs.iter().all(|&r| r <= 1));
            let used: Vec<usize> = (0..rs.len().min(p.levels())).filter(|&j| rs[j] != 0).collect();
            let mut ok = true;
            for (a, &i) in used.iter().enumerate() {
                for &j in &used[a + 1..] {
                    if p.principal_parts[i][0] == p.principal_parts[j][0] {
                        ok = false;
                    }
                }
            }
            nonresonant_at.push(ok);
            for (j, &r) in rs.iter().enumerate().take(p.levels()) {
                star_zeta += p.residue(j) * Q::from_integer(r.into());
            }
        }
        let residue_condition = (&self.epsilon * Q::from_integer(gamma.d.into()) + star_zeta).is_zero();
        Admissibility { full_at, nonresonant_at, residue_condition }
    }

    fn check_hypotheses(&self, adm: &Admissibility) -> Result<()> {
        for (x, p) in self.punctures.iter().enumerate() {
            if p.order < 2 {
                continue;
            }
            if !adm.full_at[x] {
                return Err(Error::Precondition(format!("gamma is not full at irregular puncture {}", p.id)));
            }
            if !adm.nonresonant_at[x] {
                return Err(Error::Precondition(format!("principal parts at puncture {} are resonant for gamma", p.id)));
            }
        }
        Ok(())
    }
}

/// `(-L^{1/2})^k`.
fn signed_half_power(k: i64) -> MotCoeff {
    let m = MotCoeff::l_pow_half(k as i32);
    if k % 2 == 0 {
        m
    } else {
        -m
    }
}

impl DtEngine {
    pub fn pairings(&self, gamma: &GammaClass) -> Result<Pairings> {
        self.config().pairings(gamma)
    }

    pub fn admissibility(&self, gamma: &GammaClass) -> Admissibility {
        self.config().admissibility(gamma)
    }

    /// Class of the stack of `epsilon`-connections of class `gamma'`.
    pub fn conn_class(&self, gamma: &GammaClass) -> Result<ClassResult> {
        let cfg = self.config();
        if cfg.epsilon.is_zero() {
            return Err(Error::Precondition("conn_class needs epsilon != 0; use conn_ss_class for Higgs bundles".into()));
        }
        let eps = cfg.epsilon.clone();
        self.extract(gamma, |flat, _| is_integer(&(cfg.star_zeta_flat(flat) / &eps)))
    }

    /// Class of the stack of `sigma`-semistable objects of class `gamma'`.
    pub fn conn_ss_class(&self, gamma: &GammaClass) -> Result<ClassResult> {
        let cfg = self.config();
        if gamma.r == 0 {
            return Err(Error::Precondition("semistable classes need positive rank".into()));
        }
        let flat = cfg.flat_levels(gamma)?;
        let tau = (Q::from_integer(gamma.d.into()) + cfg.star_sigma_flat(&flat)) / Q::from_integer(gamma.r.into());
        let eps = cfg.epsilon.clone();
        self.extract(gamma, |flat, rank| {
            let zeta = cfg.star_zeta_flat(flat);
            let zeta_ok = if eps.is_zero() { zeta.is_zero() } else { is_integer(&(zeta / &eps)) };
            zeta_ok && is_integer(&(cfg.star_sigma_flat(flat) - &tau * Q::from_integer(rank.into())))
        })
    }

    fn extract(&self, gamma: &GammaClass, keep: impl Fn(&[u32], u32) -> bool) -> Result<ClassResult> {
        let cfg = self.config();
        let flat = cfg.flat_levels(gamma)?;
        if gamma.r > cfg.r_max {
            return Err(Error::BeyondTruncation);
        }
        let pairings = cfg.pairings(gamma)?;
        let admissibility = cfg.admissibility(gamma);
        cfg.check_hypotheses(&admissibility)?;

        let h1 = self.h_at_z_one()?;
        // only monomials dividing w^{gamma'} can contribute to its coefficient
        let filtered = h1.filter_monomials(|i| {
            i.rank <= gamma.r && i.punct.iter().zip(&flat).all(|(a, b)| a <= b) && keep(&i.punct, i.rank)
        });
        let lifted: GradedSeries<FractionCoeff> = filtered.map_coeffs(|c| c.shift_half(2));
        let e = crate::plethystic::pleth_exp(&lifted)?;
        let coeff = e.coefficient_at(&MonomialIndex::new(gamma.r, flat, 0))?;
        let pipeline_value = coeff.mul_mot(&signed_half_power(pairings.chi)).map_symbolic(|m| cfg.curve.weil_reduce(m));
        let class = if admissibility.residue_condition { pipeline_value.clone() } else { FractionCoeff::zero() };
        let integer_weights = class.has_integer_weights();
        Ok(ClassResult { gamma: gamma.clone(), class, pipeline_value, pairings, admissibility, integer_weights })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve_formulas::gl_class;
    use crate::dt_engine::PunctureConfig;
    use crate::motivic_coeff::{CurveData, Realization, RealizedValue};
    use crate::rational::{frac, q};

    fn engine(curve: CurveData, punctures: Vec<PunctureConfig>, eps: i64, r_max: u32, z_max: u32) -> DtEngine {
        DtEngine::new(ModelConfig::new(curve, punctures, q(eps), r_max, z_max).unwrap(), 6)
    }

    fn inv_gl(r: u32) -> FractionCoeff {
        FractionCoeff::from(gl_class(r)).inverse().unwrap()
    }

    #[test]
    fn projective_line_gives_inverse_gl() {
        let e = engine(CurveData::rational(), vec![], 1, 2, 16);
        for r in 1..=2 {
            let c = e.conn_class(&GammaClass::rank(r, 0)).unwrap();
            assert_eq!(c.class, inv_gl(r), "r = {r}");
            assert!(c.integer_weights);
        }
    }

    #[test]
    fn elliptic_rank_one() {
        let curve = CurveData::elliptic(2, 5);
        let e = engine(curve.clone(), vec![], 1, 1, 12);
        let c = e.conn_class(&GammaClass::rank(1, 0)).unwrap();
        let v = c.class.realize(&Realization::point_count(5), Some(&curve)).unwrap();
        assert_eq!(v, RealizedValue::Rational(q(5)));
        let expect = FractionCoeff::inv_one_minus_l_pow(1).mul_mot(&curve.jacobian_class().shift_half(2)).scale(&q(-1));
        assert_eq!(c.class, expect);
    }

    fn regular(res: Q) -> PunctureConfig {
        PunctureConfig { id: "x".into(), order: 1, principal_parts: vec![vec![res]], weights: vec![q(0)] }
    }

    #[test]
    fn one_regular_puncture() {
        let e = engine(CurveData::rational(), vec![regular(q(-2))], 1, 1, 8);
        let g = GammaClass { r: 1, r_xj: vec![vec![1]], d: 2 };
        let c = e.conn_ss_class(&g).unwrap();
        assert_eq!(c.class, inv_gl(1));
        let e = engine(CurveData::rational(), vec![regular(frac(1, 2))], 1, 1, 8);
        let g = GammaClass { r: 1, r_xj: vec![vec![1]], d: 0 };
        let c = e.conn_ss_class(&g).unwrap();
        assert!(c.pipeline_value.is_zero() && c.class.is_zero());
        assert!(!c.admissibility.residue_condition);
    }

    #[test]
    fn pairing_examples() {
        let p = PunctureConfig {
            id: "x".into(),
            order: 1,
            principal_parts: vec![vec![q(-3)], vec![q(0)]],
            weights: vec![q(0), frac(1, 2)],
        };
        let cfg = ModelConfig::new(CurveData::elliptic(2, 5), vec![p], q(1), 2, 4).unwrap();
        let pr = cfg.pairings(&GammaClass { r: 2, r_xj: vec![vec![1, 1]], d: 0 }).unwrap();
        assert_eq!(pr.chi, 2);
        assert_eq!(pr.star_sigma, frac(1, 2));
        assert_eq!(cfg.pairings(&GammaClass { r: 1, r_xj: vec![vec![1]], d: 0 }).unwrap().star_zeta, q(-3));
        assert!(matches!(cfg.pairings(&GammaClass { r: 2, r_xj: vec![vec![1]], d: 0 }), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn resonance_and_fullness() {
        let p = PunctureConfig {
            id: "x".into(),
            order: 2,
            principal_parts: vec![vec![q(1), q(0)], vec![q(1), q(5)], vec![q(2), q(0)]],
            weights: vec![q(0), q(0), q(0)],
        };
        let cfg = ModelConfig::new(CurveData::rational(), vec![p], q(1), 2, 8).unwrap();
        let a = cfg.admissibility(&GammaClass { r: 2, r_xj: vec![vec![1, 1, 0]], d: 0 });
        assert_eq!((a.full_at[0], a.nonresonant_at[0]), (true, false));
        let a = cfg.admissibility(&GammaClass { r: 2, r_xj: vec![vec![2]], d: 0 });
        assert!(!a.full_at[0]);
        let e = DtEngine::new(cfg, 6);
        let err = e.conn_class(&GammaClass { r: 2, r_xj: vec![vec![1, 1, 0]], d: 0 }).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn higgs_needs_conn_ss() {
        let e = engine(CurveData::rational(), vec![], 0, 1, 8);
        assert!(matches!(e.conn_class(&GammaClass::rank(1, 0)), Err(Error::Precondition(_))));
        assert_eq!(e.conn_ss_class(&GammaClass::rank(1, 0)).unwrap().class, inv_gl(1));
    }
}
