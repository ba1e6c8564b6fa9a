//! Exact fractions over [`MotCoeff`].
//!
//! A fraction is stored as `num / (prod_d Phi_d(L)^{e_d} * rest)`. Every
//! denominator the engine produces itself is a product of `1 - L^m`, so `rest`
//! is `1` in practice and the representation is canonical: `num` is never
//! divisible by a `Phi_d` that occurs in the denominator, units `c * L^{k/2}`
//! are absorbed into `num`. User-supplied divisions by other elements land in
//! `rest`, and equality then falls back to cross-multiplication.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::cyclotomic::{cyclotomic_adams, cyclotomic_in_s, cyclotomic_product, euler_phi};
use super::laurent::Laurent;
use super::{forward_owned, MotCoeff};
use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Default)]
pub struct FractionCoeff {
    num: MotCoeff,
    cyc: BTreeMap<u32, u32>,
    rest: Option<MotCoeff>,
}

impl From<MotCoeff> for FractionCoeff {
    fn from(num: MotCoeff) -> Self {
        FractionCoeff { num, cyc: BTreeMap::new(), rest: None }
    }
}

impl FractionCoeff {
    pub fn zero() -> Self {
        Self::from(MotCoeff::zero())
    }

    pub fn one() -> Self {
        Self::from(MotCoeff::one())
    }

    pub fn rational(c: Q) -> Self {
        Self::from(MotCoeff::rational(c))
    }

    /// `1 / (1 - L^m)` for `m != 0`.
    pub fn inv_one_minus_l_pow(m: i32) -> Self {
        assert!(m != 0, "1 - L^0 is zero");
        // 1 - L^m = -(L^m - 1) = -prod_{d | m} Phi_d(L) for m > 0;
        // for m < 0, 1 - L^m = L^m (L^{-m} - 1).
        let k = m.unsigned_abs();
        let cyc: BTreeMap<u32, u32> = super::cyclotomic::divisors(k).into_iter().map(|d| (d, 1)).collect();
        let num = if m > 0 { MotCoeff::int(-1) } else { MotCoeff::l_pow(-m) };
        FractionCoeff { num, cyc, rest: None }
    }

    pub fn numerator(&self) -> &MotCoeff {
        &self.num
    }

    /// Cyclotomic denominator exponents `d -> e` for `Phi_d(L)^e`.
    pub fn cyclotomic_factors(&self) -> &BTreeMap<u32, u32> {
        &self.cyc
    }

    /// The non-cyclotomic part of the denominator, if any.
    pub fn residual_denominator(&self) -> Option<&MotCoeff> {
        self.rest.as_ref()
    }

    /// The full denominator, expanded.
    pub fn denominator(&self) -> MotCoeff {
        let c = MotCoeff::from_laurent(cyclotomic_product(&self.cyc));
        match &self.rest {
            Some(r) => &c * r,
            None => c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.cyc.is_empty() && self.rest.is_none() && self.num.is_one()
    }

    /// `Some` if the denominator is trivial.
    pub fn as_mot(&self) -> Option<&MotCoeff> {
        (self.cyc.is_empty() && self.rest.is_none()).then_some(&self.num)
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        FractionCoeff { num: self.num.scale(k), cyc: self.cyc.clone(), rest: self.rest.clone() }
    }

    pub fn shift_half(&self, k: i32) -> Self {
        FractionCoeff { num: self.num.shift_half(k), cyc: self.cyc.clone(), rest: self.rest.clone() }
    }

    pub fn mul_mot(&self, c: &MotCoeff) -> Self {
        let mut out = FractionCoeff { num: &self.num * c, cyc: self.cyc.clone(), rest: self.rest.clone() };
        out.reduce();
        out
    }

    /// Applies a ring endomorphism of the symbol ring to numerator and residual denominator.
    pub fn map_symbolic(&self, f: impl Fn(&MotCoeff) -> MotCoeff) -> Self {
        let mut out = FractionCoeff { num: f(&self.num), cyc: self.cyc.clone(), rest: self.rest.as_ref().map(&f) };
        out.reduce();
        out
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.cyc.clear();
            self.rest = None;
            return;
        }
        let ds: Vec<u32> = self.cyc.keys().copied().collect();
        for d in ds {
            let phi = cyclotomic_in_s(d);
            loop {
                let e = self.cyc[&d];
                if e == 0 {
                    break;
                }
                match self.num.div_laurent_exact(&phi) {
                    Some(qt) => {
                        self.num = qt;
                        self.cyc.insert(d, e - 1);
                    }
                    None => break,
                }
            }
        }
        self.cyc.retain(|_, e| *e > 0);
        if let Some(r) = &self.rest {
            if r.is_symbol_free() {
                let rl = r.components().next().map(|(_, l)| l.clone()).unwrap();
                if let Some(qt) = self.num.div_laurent_exact(&rl) {
                    self.num = qt;
                    self.rest = None;
                }
            } else if let Some(unit) = unit_ratio(&self.num, r) {
                self.num = unit;
                self.rest = None;
            }
        }
    }

    fn lcm_parts(&self, other: &Self) -> (BTreeMap<u32, u32>, Laurent, Laurent) {
        let mut lcm = self.cyc.clone();
        for (&d, &e) in &other.cyc {
            let x = lcm.entry(d).or_insert(0);
            *x = (*x).max(e);
        }
        let cof = |own: &BTreeMap<u32, u32>| {
            let missing: BTreeMap<u32, u32> = lcm
                .iter()
                .filter_map(|(&d, &e)| {
                    let m = e - own.get(&d).copied().unwrap_or(0);
                    (m > 0).then_some((d, m))
                })
                .collect();
            cyclotomic_product(&missing)
        };
        let (a, b) = (cof(&self.cyc), cof(&other.cyc));
        (lcm, a, b)
    }

    /// Sum of many fractions with a single reduction at the end.
    pub fn sum_all(items: Vec<FractionCoeff>) -> FractionCoeff {
        let items: Vec<_> = items.into_iter().filter(|x| !x.is_zero()).collect();
        if items.is_empty() {
            return Self::zero();
        }
        if items.len() == 1 {
            return items.into_iter().next().unwrap();
        }
        if items.iter().any(|x| x.rest.is_some()) {
            return items.into_iter().fold(Self::zero(), |a, b| &a + &b);
        }
        let mut lcm: BTreeMap<u32, u32> = BTreeMap::new();
        for x in &items {
            for (&d, &e) in &x.cyc {
                let y = lcm.entry(d).or_insert(0);
                *y = (*y).max(e);
            }
        }
        // group by denominator to share cofactor multiplications
        let mut groups: BTreeMap<Vec<(u32, u32)>, MotCoeff> = BTreeMap::new();
        for x in items {
            let key: Vec<(u32, u32)> = x.cyc.iter().map(|(&d, &e)| (d, e)).collect();
            let slot = groups.entry(key).or_default();
            *slot = &*slot + &x.num;
        }
        let mut num = MotCoeff::zero();
        for (key, n) in groups {
            let own: BTreeMap<u32, u32> = key.into_iter().collect();
            let missing: BTreeMap<u32, u32> = lcm
                .iter()
                .filter_map(|(&d, &e)| {
                    let m = e - own.get(&d).copied().unwrap_or(0);
                    (m > 0).then_some((d, m))
                })
                .collect();
            let t = if missing.is_empty() { n } else { n.mul_laurent(&cyclotomic_product(&missing)) };
            num = &num + &t;
        }
        let mut out = FractionCoeff { num, cyc: lcm, rest: None };
        out.reduce();
        out
    }

    /// Adams operation `psi_m`; `Phi_d(L^m)` splits into the `Phi_n` with `n / gcd(n, m) = d`.
    pub fn adams(&self, m: u32) -> Self {
        if m == 1 {
            return self.clone();
        }
        let mut cyc = BTreeMap::new();
        for (&d, &e) in &self.cyc {
            for n in cyclotomic_adams(d, m) {
                *cyc.entry(n).or_insert(0) += e;
            }
        }
        // psi_m preserves coprimality with cyclotomic factors, so no reduction is needed
        // unless a residual denominator is present.
        let mut out = FractionCoeff { num: self.num.adams(m), cyc, rest: self.rest.as_ref().map(|r| r.adams(m)) };
        if out.rest.is_some() {
            out.reduce();
        }
        out
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut num = MotCoeff::from_laurent(cyclotomic_product(&self.cyc));
        if let Some(r) = &self.rest {
            num = &num * r;
        }
        let mut out = FractionCoeff::from(num);
        out.divide_in_place(&self.num);
        Ok(out)
    }

    /// Divides by a nonzero `MotCoeff`, factoring out units and cyclotomic factors.
    fn divide_in_place(&mut self, d: &MotCoeff) {
        debug_assert!(!d.is_zero());
        if let Some((c, k)) = d.as_unit() {
            self.num = self.num.scale(&c.recip()).shift_half(-k);
            return;
        }
        if d.is_symbol_free() {
            let l = d.components().next().map(|(_, l)| l.clone()).unwrap();
            let (unit_c, unit_k, cyc, residual) = factor_laurent(&l);
            self.num = self.num.scale(&unit_c.recip()).shift_half(-unit_k);
            for (dd, e) in cyc {
                *self.cyc.entry(dd).or_insert(0) += e;
            }
            if let Some(res) = residual {
                self.push_rest(MotCoeff::from_laurent(res));
            }
        } else {
            self.push_rest(d.clone());
        }
        self.reduce();
    }

    fn push_rest(&mut self, r: MotCoeff) {
        self.rest = Some(match self.rest.take() {
            Some(old) => &old * &r,
            None => r,
        });
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True if the numerator and the residual denominator only carry integer `L` weights.
    pub fn has_integer_weights(&self) -> bool {
        self.num.has_integer_weights() && self.rest.as_ref().is_none_or(|r| r.has_integer_weights())
    }

    /// Substitutes rational values for the curve symbols.
    pub fn substitute_symbols(&self, value: &dyn Fn(super::Sym) -> Q) -> Result<Self> {
        let num = self.num.substitute_symbols(value);
        let mut out = FractionCoeff { num, cyc: self.cyc.clone(), rest: None };
        if let Some(r) = &self.rest {
            let r = r.substitute_symbols(value);
            if r.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            out.divide_in_place(&r);
        }
        out.reduce();
        Ok(out)
    }
}

/// `num / den` when it is a single term `c L^{k/2}`.
fn unit_ratio(num: &MotCoeff, den: &MotCoeff) -> Option<MotCoeff> {
    let (e0, m0, c0) = den.terms().into_iter().next()?;
    num.terms().into_iter().filter(|(_, m, _)| *m == m0).find_map(|(e, _, c)| {
        let k = e - e0;
        let ratio = c / &c0;
        (den.scale(&ratio).shift_half(k) == *num).then(|| MotCoeff::l_pow_half(k).scale(&ratio))
    })
}

/// Splits a nonzero Laurent polynomial in `s` into `c * s^k * prod Phi_d(s^2)^e * residual`.
fn factor_laurent(l: &Laurent) -> (Q, i32, BTreeMap<u32, u32>, Option<Laurent>) {
    let k = l.low();
    let mut rem = l.shift(-k);
    let lead = rem.coeff(rem.high()).cloned().unwrap();
    rem = rem.scale(&lead.recip());
    let mut cyc = BTreeMap::new();
    let span = rem.high() as u32;
    // phi(d) >= sqrt(d / 2), so Phi_d(s^2) has s-degree >= sqrt(2d)
    let bound = span * span / 2 + 2;
    let mut d = 1u32;
    while d <= bound && rem.high() > 0 {
        if 2 * euler_phi(d) <= rem.high() as u32 {
            let phi = cyclotomic_in_s(d);
            while let Some(qt) = rem.div_exact(&phi) {
                rem = qt;
                *cyc.entry(d).or_insert(0) += 1;
            }
        }
        d += 1;
    }
    let residual = if rem.high() == 0 { None } else { Some(rem) };
    (lead, k, cyc, residual)
}

impl PartialEq for FractionCoeff {
    fn eq(&self, other: &Self) -> bool {
        if self.rest.is_none() && other.rest.is_none() {
            return self.num == other.num && self.cyc == other.cyc;
        }
        &self.num * &other.denominator() == &other.num * &self.denominator()
    }
}

impl Eq for FractionCoeff {}

impl fmt::Debug for FractionCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FractionCoeff({self})")
    }
}

fn format_cyclotomic(d: u32) -> String {
    MotCoeff::from_laurent((*cyclotomic_in_s(d)).clone()).to_string()
}

impl fmt::Display for FractionCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyc.is_empty() && self.rest.is_none() {
            return write!(f, "{}", self.num);
        }
        let mut factors: Vec<String> = self
            .cyc
            .iter()
            .map(|(&d, &e)| {
                let base = format!("({})", format_cyclotomic(d));
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        if let Some(r) = &self.rest {
            factors.push(format!("({r})"));
        }
        let num = if self.num.num_terms() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        write!(f, "{num}/{}", factors.join("*"))
    }
}

impl<'a> Add<&'a FractionCoeff> for &'a FractionCoeff {
    type Output = FractionCoeff;
    fn add(self, other: &FractionCoeff) -> FractionCoeff {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (cyc, ca, cb) = self.lcm_parts(other);
        let mut a = self.num.mul_laurent(&ca);
        let mut b = other.num.mul_laurent(&cb);
        let rest = match (&self.rest, &other.rest) {
            (None, None) => None,
            (Some(r), None) => {
                b = &b * r;
                Some(r.clone())
            }
            (None, Some(r)) => {
                a = &a * r;
                Some(r.clone())
            }
            (Some(r1), Some(r2)) if r1 == r2 => Some(r1.clone()),
            (Some(r1), Some(r2)) => {
                a = &a * r2;
                b = &b * r1;
                Some(r1 * r2)
            }
        };
        let mut out = FractionCoeff { num: &a + &b, cyc, rest };
        out.reduce();
        out
    }
}

impl Neg for &FractionCoeff {
    type Output = FractionCoeff;
    fn neg(self) -> FractionCoeff {
        FractionCoeff { num: -&self.num, cyc: self.cyc.clone(), rest: self.rest.clone() }
    }
}

impl<'a> Sub<&'a FractionCoeff> for &'a FractionCoeff {
    type Output = FractionCoeff;
    fn sub(self, other: &FractionCoeff) -> FractionCoeff {
        self + &(-other)
    }
}

impl<'a> Mul<&'a FractionCoeff> for &'a FractionCoeff {
    type Output = FractionCoeff;
    fn mul(self, other: &FractionCoeff) -> FractionCoeff {
        if self.is_zero() || other.is_zero() {
            return FractionCoeff::zero();
        }
        let mut cyc = self.cyc.clone();
        for (&d, &e) in &other.cyc {
            *cyc.entry(d).or_insert(0) += e;
        }
        let rest = match (&self.rest, &other.rest) {
            (None, None) => None,
            (Some(r), None) | (None, Some(r)) => Some(r.clone()),
            (Some(a), Some(b)) => Some(a * b),
        };
        let mut out = FractionCoeff { num: &self.num * &other.num, cyc, rest };
        // only factors present on one side can cancel against the other numerator
        if !(self.cyc.is_empty() && other.cyc.is_empty() && out.rest.is_none()) {
            out.reduce();
        }
        out
    }
}

impl<'a> Div<&'a FractionCoeff> for &'a FractionCoeff {
    type Output = Result<FractionCoeff>;
    fn div(self, other: &FractionCoeff) -> Result<FractionCoeff> {
        Ok(self * &other.inverse()?)
    }
}

forward_owned!(FractionCoeff, Add add, Sub sub, Mul mul);

impl Neg for FractionCoeff {
    type Output = FractionCoeff;
    fn neg(self) -> FractionCoeff {
        -&self
    }
}

impl FractionCoeff {
    /// Division; errors with "zero denominator" when `other` is zero.
    pub fn checked_div(&self, other: &FractionCoeff) -> Result<FractionCoeff> {
        self / other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn l() -> FractionCoeff {
        FractionCoeff::from(MotCoeff::lefschetz())
    }

    #[test]
    fn symbolic_denominator_cancels() {
        let p = MotCoeff::p(1).shift_half(2).scale(&q(3));
        let f = FractionCoeff::from(p.clone());
        assert!((&f * &f.inverse().unwrap()).is_one());
        let half = FractionCoeff::one().checked_div(&FractionCoeff::from(p)).unwrap();
        assert_eq!(half.mul_mot(&MotCoeff::p(1)), FractionCoeff::from(MotCoeff::l_pow(-1).scale(&frac(1, 3))));
    }

    #[test]
    fn geometric_denominator() {
        // 1/(1-L) + L/(1-L) = (1+L)/(1-L)
        let a = FractionCoeff::inv_one_minus_l_pow(1);
        let b = &a * &l();
        let s = &a + &b;
        let expected = &FractionCoeff::from(MotCoeff::poly_in_l(&[1, 1])) * &a;
        assert_eq!(s, expected);
        // (1-L) * 1/(1-L) = 1
        let one_minus = FractionCoeff::from(MotCoeff::poly_in_l(&[1, -1]));
        assert!((&one_minus * &a).is_one());
    }

    #[test]
    fn cancellation_is_canonical() {
        // (L^2 - 1)/(L - 1) = L + 1
        let x = FractionCoeff::from(MotCoeff::poly_in_l(&[-1, 0, 1]));
        let y = FractionCoeff::from(MotCoeff::poly_in_l(&[-1, 1]));
        let r = (&x / &y).unwrap();
        assert_eq!(r.as_mot(), Some(&MotCoeff::poly_in_l(&[1, 1])));
    }

    #[test]
    fn negative_power_denominators() {
        // 1/(1 - L^{-1}) = L/(L - 1)
        let a = FractionCoeff::inv_one_minus_l_pow(-1);
        let b = (&l() / &FractionCoeff::from(MotCoeff::poly_in_l(&[-1, 1]))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn residual_denominators_cross_multiply() {
        let three_plus_l = FractionCoeff::from(MotCoeff::poly_in_l(&[3, 1]));
        let x = (&FractionCoeff::one() / &three_plus_l).unwrap();
        assert!(x.residual_denominator().is_some());
        assert!((&x * &three_plus_l).is_one());
        let y = &x + &x;
        assert_eq!(y, x.scale(&q(2)));
    }

    #[test]
    fn zero_division_errors() {
        assert!(matches!(&FractionCoeff::one() / &FractionCoeff::zero(), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn adams_on_denominators() {
        let a = FractionCoeff::inv_one_minus_l_pow(1);
        assert_eq!(a.adams(2), FractionCoeff::inv_one_minus_l_pow(2));
        assert_eq!(a.adams(6), FractionCoeff::inv_one_minus_l_pow(6));
        let c = FractionCoeff::inv_one_minus_l_pow(3).scale(&frac(1, 2));
        assert_eq!(c.adams(2), FractionCoeff::inv_one_minus_l_pow(6).scale(&frac(1, 2)));
    }

    #[test]
    fn sum_all_matches_pairwise() {
        let xs: Vec<FractionCoeff> = (1..6)
            .map(|m| &FractionCoeff::inv_one_minus_l_pow(m) * &FractionCoeff::from(MotCoeff::p(1).shift_half(m)))
            .collect();
        let a = FractionCoeff::sum_all(xs.clone());
        let b = xs.iter().fold(FractionCoeff::zero(), |acc, x| &acc + x);
        assert_eq!(a, b);
    }

    #[test]
    fn display_of_gl2_inverse() {
        let gl2 = FractionCoeff::from(MotCoeff::poly_in_l(&[0, 1, -1, -1, 1]));
        let x = (&FractionCoeff::one() / &gl2).unwrap();
        assert_eq!(x.to_string(), "L^-1/(L - 1)^2*(L + 1)");
    }
}
