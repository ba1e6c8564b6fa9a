//! Curve data: genus and the motivic L-polynomial.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::{MotCoeff, Sym, SymMono};
use crate::error::{Error, Result};
use crate::rational::Q;

/// A smooth projective curve, seen through `L_X(z) = b_0 + b_1 z + ... + b_{2g} z^{2g}`.
///
/// In the engine `L_X` is symbolic: `b_k = (-1)^k e_k(alpha)` where the elementary
/// symmetric functions of the Weil numbers are written in the power sums `p_n`.
/// The numeric `l_coeffs` drive realizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    genus: u32,
    l_coeffs: Vec<Q>,
}

impl CurveData {
    pub fn new(genus: u32, l_coeffs: Vec<Q>) -> Result<Self> {
        if l_coeffs.len() != 2 * genus as usize + 1 {
            return Err(Error::InvalidInput(format!(
                "l_coeffs must have length 2g+1 = {}, got {}",
                2 * genus + 1,
                l_coeffs.len()
            )));
        }
        if !l_coeffs[0].is_one() {
            return Err(Error::InvalidInput("l_coeffs[0] must be 1".into()));
        }
        Ok(CurveData { genus, l_coeffs })
    }

    /// The projective line.
    pub fn rational() -> Self {
        CurveData { genus: 0, l_coeffs: vec![Q::one()] }
    }

    /// Genus-1 curve with `L_X(z) = 1 - a z + q z^2`.
    pub fn elliptic(a: i64, q: i64) -> Self {
        CurveData { genus: 1, l_coeffs: vec![Q::one(), Q::from_integer((-a).into()), Q::from_integer(q.into())] }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn l_coeffs(&self) -> &[Q] {
        &self.l_coeffs
    }

    /// Numeric power sums `p_1..p_{n_max}` of the Weil numbers, by Newton's identities.
    pub fn power_sums(&self, n_max: usize) -> Vec<Q> {
        // e_k = (-1)^k b_k
        let two_g = 2 * self.genus as usize;
        let e = |k: usize| -> Q {
            if k > two_g {
                Q::zero()
            } else if k.is_multiple_of(2) {
                self.l_coeffs[k].clone()
            } else {
                -self.l_coeffs[k].clone()
            }
        };
        let mut p: Vec<Q> = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            // p_n = sum_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
            let mut acc = Q::zero();
            for i in 1..n {
                let t = e(i) * &p[n - i - 1];
                if i % 2 == 1 {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
            let last = e(n) * Q::from_integer((n as i64).into());
            if n % 2 == 1 {
                acc += last;
            } else {
                acc -= last;
            }
            p.push(acc);
        }
        p
    }

    /// Symbolic coefficients of `L_X(z)` in the power sums: `b_k = (-1)^k e_k(p)`.
    pub fn symbolic_l_coeffs(&self) -> Vec<MotCoeff> {
        symbolic_l_coeffs(self.genus)
    }

    /// Replaces every `p_n` by its numeric value, keeping `L` and `[Jac]` symbolic.
    pub fn specialize_power_sums(&self, c: &MotCoeff) -> MotCoeff {
        let max = c
            .components()
            .flat_map(|(m, _)| m.p_indices())
            .max()
            .unwrap_or(0);
        if max == 0 {
            return c.clone();
        }
        let p = self.power_sums(max as usize);
        MotCoeff::from_components(c.components().map(|(m, l)| {
            let mut k = Q::one();
            let mut rest = Vec::new();
            for s in m.syms() {
                match s {
                    Sym::P(n) => k *= &p[*n as usize - 1],
                    other => rest.push(*other),
                }
            }
            (SymMono::from_syms(rest), l.scale(&k))
        }))
    }

    /// Normal form modulo the functional equation of `L_X`.
    ///
    /// The Weil numbers pair up as `alpha, L/alpha`, so `e_{2g-k} = L^{g-k} e_k`
    /// and every `p_n` with `n > g` is a polynomial in `L^{1/2}` and `p_1..p_g`.
    /// The relations are stable under Adams operations.
    pub fn weil_reduce(&self, c: &MotCoeff) -> MotCoeff {
        let g = self.genus;
        let max = c.components().flat_map(|(m, _)| m.p_indices()).max().unwrap_or(0);
        if max <= g {
            return c.clone();
        }
        let table = weil_power_sums(g, max);
        let mut acc = MotCoeff::zero();
        for (m, l) in c.components() {
            let mut keep = Vec::new();
            let mut factor = MotCoeff::from_laurent(l.clone());
            for s in m.syms() {
                match s {
                    Sym::P(n) if *n > g => factor = &factor * &table[*n as usize - 1],
                    other => keep.push(*other),
                }
            }
            acc = &acc + &(&factor * &MotCoeff::term(0, SymMono::from_syms(keep), Q::one()));
        }
        acc
    }

    /// `[Jac] = L_X(1)`, in the form produced by [`CurveData::weil_reduce`].
    pub fn jacobian_class(&self) -> MotCoeff {
        let mut acc = MotCoeff::zero();
        for b in self.symbolic_l_coeffs() {
            acc = &acc + &b;
        }
        self.weil_reduce(&acc)
    }

    /// Evaluates `L_X` numerically at a rational point.
    pub fn l_value(&self, z: &Q) -> Q {
        let mut acc = Q::zero();
        for b in self.l_coeffs.iter().rev() {
            acc = acc * z + b;
        }
        acc
    }
}

/// `p_1..p_n` reduced modulo the functional equation, memoized per genus.
fn weil_power_sums(genus: u32, n: u32) -> Vec<MotCoeff> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Vec<MotCoeff>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&genus) {
        if v.len() >= n as usize {
            return v[..n as usize].to_vec();
        }
    }
    let g = genus as usize;
    // e_0..e_g in p_1..p_g, then e_{2g-k} = L^{g-k} e_k
    let low: Vec<MotCoeff> = symbolic_l_coeffs(genus)
        .into_iter()
        .take(g + 1)
        .enumerate()
        .map(|(k, b)| if k % 2 == 0 { b } else { -b })
        .collect();
    let e = |k: usize| -> MotCoeff {
        if k <= g {
            low[k].clone()
        } else if k <= 2 * g {
            low[2 * g - k].shift_half(2 * (k - g) as i32)
        } else {
            MotCoeff::zero()
        }
    };
    let mut p: Vec<MotCoeff> = Vec::with_capacity(n as usize);
    for m in 1..=n as usize {
        if m <= g {
            p.push(MotCoeff::p(m as u32));
            continue;
        }
        // n e_n = sum_{i=1}^n (-1)^{i-1} e_{n-i} p_i, solved for p_n
        let mut acc = e(m).scale(&Q::from_integer((m as i64).into()));
        for i in 1..m {
            let t = &e(m - i) * &p[i - 1];
            acc = if i % 2 == 1 { &acc - &t } else { &acc + &t };
        }
        p.push(if m % 2 == 1 { acc } else { -acc });
    }
    cache.write().unwrap().insert(genus, p.clone());
    p
}

/// `(-1)^k e_k` for `k = 0..=2g`, written in `p_1, p_2, ...`.
pub(crate) fn symbolic_l_coeffs(genus: u32) -> Vec<MotCoeff> {
    let two_g = 2 * genus as usize;
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    let mut e: Vec<MotCoeff> = vec![MotCoeff::one()];
    for k in 1..=two_g {
        let mut acc = MotCoeff::zero();
        for i in 1..=k {
            let t = &e[k - i] * &MotCoeff::p(i as u32);
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        e.push(acc.scale(&Q::new(1.into(), (k as i64).into())));
    }
    e.into_iter().enumerate().map(|(k, x)| if k % 2 == 0 { x } else { -x }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::motivic_coeff::{Realization, RealizedValue};

    #[test]
    fn newton_for_the_fixture_curve() {
        let c = CurveData::elliptic(2, 5);
        assert_eq!(c.power_sums(3), vec![q(2), q(-6), q(-22)]);
    }

    #[test]
    fn rational_curve_has_no_roots() {
        assert!(CurveData::rational().power_sums(4).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn symbolic_coefficients_specialize() {
        let c = CurveData::elliptic(2, 5);
        let ps = c.power_sums(2);
        let sym = c.symbolic_l_coeffs();
        for (k, b) in sym.iter().enumerate() {
            let v = b.substitute_symbols(&|s| match s {
                Sym::P(n) => ps[n as usize - 1].clone(),
                Sym::Jac(_) => unreachable!(),
            });
            assert_eq!(c.specialize_power_sums(b), v);
            assert_eq!(v.as_rational().unwrap(), c.l_coeffs()[k]);
        }
    }

    #[test]
    fn weil_reduction_in_genus_one() {
        let c = CurveData::elliptic(2, 5);
        // p_2 = p_1^2 - 2L
        let p2 = c.weil_reduce(&MotCoeff::p(2));
        assert_eq!(p2, &(&MotCoeff::p(1) * &MotCoeff::p(1)) - &MotCoeff::l_pow(1).scale(&q(2)));
        // and realizations agree with the numeric power sums
        let ps = c.power_sums(6);
        for n in 1..=6u32 {
            let r = c.weil_reduce(&MotCoeff::p(n));
            assert!(r.components().all(|(m, _)| m.p_indices().iter().all(|&i| i == 1)));
            let v = r.realize(&Realization::point_count(5), Some(&c)).unwrap();
            assert_eq!(v, RealizedValue::Rational(ps[n as usize - 1].clone()));
        }
        assert_eq!(c.jacobian_class(), &MotCoeff::poly_in_l(&[1, 1]) - &MotCoeff::p(1));
        assert_eq!(CurveData::rational().weil_reduce(&MotCoeff::p(3)), MotCoeff::zero());
    }

    #[test]
    fn validation() {
        assert!(CurveData::new(1, vec![q(1)]).is_err());
        assert!(CurveData::new(0, vec![q(2)]).is_err());
    }
}
