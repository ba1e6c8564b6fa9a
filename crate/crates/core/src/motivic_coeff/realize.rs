//! Realization homomorphisms: point count, E-polynomial, Euler characteristic.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::cyclotomic::cyclotomic_coeffs;
use super::{CurveData, FractionCoeff, MotCoeff, Sym};
use crate::error::{Error, Result};
use crate::rational::{format_rational, pow_i, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    /// `L -> q`; odd powers of `L^{1/2}` need `sqrt_q`.
    PointCount { q: Q, sqrt_q: Option<Q> },
    /// `L -> uv`.
    EPolynomial,
    /// `L -> 1`.
    EulerCharacteristic,
    /// The identity.
    Symbolic,
}

impl Realization {
    pub fn point_count(q: i64) -> Self {
        Realization::PointCount { q: crate::rational::q(q), sqrt_q: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizedValue {
    Rational(Q),
    EPoly(EValue),
    Symbolic(FractionCoeff),
}

impl RealizedValue {
    pub fn as_rational(&self) -> Option<&Q> {
        match self {
            RealizedValue::Rational(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for RealizedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizedValue::Rational(x) => write!(f, "{}", format_rational(x)),
            RealizedValue::EPoly(e) => write!(f, "{e}"),
            RealizedValue::Symbolic(c) => write!(f, "{c}"),
        }
    }
}

/// Laurent polynomial in `u, v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiLaurent {
    terms: BTreeMap<(i32, i32), Q>,
}

impl BiLaurent {
    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BiLaurent { terms }
    }

    pub fn monomial(i: i32, j: i32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((i, j), Q::one());
        BiLaurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i32, j: i32) -> Q {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &BiLaurent) -> BiLaurent {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let e = terms.entry(*k).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(k);
            }
        }
        BiLaurent { terms }
    }

    pub fn scale(&self, k: &Q) -> BiLaurent {
        if k.is_zero() {
            return BiLaurent::default();
        }
        BiLaurent { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    pub fn mul(&self, other: &BiLaurent) -> BiLaurent {
        let mut terms: BTreeMap<(i32, i32), Q> = BTreeMap::new();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                *terms.entry((a + c, b + d)).or_insert_with(Q::zero) += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BiLaurent { terms }
    }

    pub fn pow(&self, e: u32) -> BiLaurent {
        let mut acc = BiLaurent::constant(Q::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates at rational `u, v` (nonzero if negative exponents occur).
    pub fn eval(&self, u: &Q, v: &Q) -> Q {
        self.terms.iter().map(|((i, j), c)| c * pow_i(u, *i as i64) * pow_i(v, *j as i64)).sum()
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let pw = |x: &str, e: i32| match e {
            0 => String::new(),
            1 => x.to_string(),
            e => format!("{x}^{e}"),
        };
        for (n, ((i, j), c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = [pw("u", *i), pw("v", *j)].into_iter().filter(|s| !s.is_empty()).collect();
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            if vars.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&mag), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A realized E-polynomial, possibly a quotient. Equality cross-multiplies.
#[derive(Clone, Debug)]
pub struct EValue {
    pub numerator: BiLaurent,
    pub denominator: BiLaurent,
}

impl PartialEq for EValue {
    fn eq(&self, other: &Self) -> bool {
        self.numerator.mul(&other.denominator) == other.numerator.mul(&self.denominator)
    }
}

impl Eq for EValue {}

impl EValue {
    pub fn polynomial(p: BiLaurent) -> Self {
        EValue { numerator: p, denominator: BiLaurent::constant(Q::one()) }
    }

    pub fn mul(&self, other: &EValue) -> EValue {
        EValue {
            numerator: self.numerator.mul(&other.numerator),
            denominator: self.denominator.mul(&other.denominator),
        }
    }
}

impl fmt::Display for EValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == BiLaurent::constant(Q::one()) {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/({})", self.numerator, self.denominator)
        }
    }
}

/// Elementary symmetric functions `e_0..e_m` from power sums `p_1..p_m`.
fn elementary_from_power_sums(p: &[Q]) -> Vec<Q> {
    let mut e = vec![Q::one()];
    for k in 1..=p.len() {
        let mut acc = Q::zero();
        for i in 1..=k {
            let t = &e[k - i] * &p[i - 1];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        e.push(acc / Q::from_integer((k as i64).into()));
    }
    e
}

fn need_curve(curve: Option<&CurveData>) -> Result<&CurveData> {
    curve.ok_or_else(|| Error::MissingCurveData("curve symbols present but no curve supplied".into()))
}

fn max_symbol_index(c: &MotCoeff) -> u32 {
    c.components().flat_map(|(m, _)| m.syms().iter().map(|s| match s {
        Sym::P(n) | Sym::Jac(n) => *n,
    })).max().unwrap_or(0)
}

/// Point count of a symbol.
fn point_count_sym(s: Sym, genus: u32, p: &[Q]) -> Q {
    match s {
        Sym::P(n) => p[n as usize - 1].clone(),
        Sym::Jac(n) => {
            // prod_i (1 - alpha_i^n) = sum_k (-1)^k e_k(alpha^n)
            let pn: Vec<Q> = (1..=2 * genus as usize).map(|j| p[j * n as usize - 1].clone()).collect();
            let e = elementary_from_power_sums(&pn);
            e.iter().enumerate().map(|(k, x)| if k % 2 == 0 { x.clone() } else { -x.clone() }).sum()
        }
    }
}

fn realize_point_count(c: &MotCoeff, q: &Q, sqrt_q: Option<&Q>, curve: Option<&CurveData>) -> Result<Q> {
    let max = max_symbol_index(c);
    let p = if max > 0 {
        let curve = need_curve(curve)?;
        curve.power_sums((max as usize) * (2 * curve.genus() as usize).max(1))
    } else {
        Vec::new()
    };
    let genus = curve.map(|c| c.genus()).unwrap_or(0);
    let mut acc = Q::zero();
    for (e, m, coeff) in c.terms() {
        let lp = if e % 2 == 0 {
            pow_i(q, (e / 2) as i64)
        } else {
            let s = sqrt_q.ok_or(Error::HalfIntegerWeight)?;
            pow_i(s, e as i64)
        };
        let mut t = coeff * lp;
        for s in m.syms() {
            t *= point_count_sym(*s, genus, &p);
        }
        acc += t;
    }
    Ok(acc)
}

fn realize_epoly(c: &MotCoeff, curve: Option<&CurveData>) -> Result<BiLaurent> {
    let genus = if c.is_symbol_free() { 0 } else { need_curve(curve)?.genus() };
    let g = Q::from_integer((genus as i64).into());
    let mut acc = BiLaurent::default();
    for (e, m, coeff) in c.terms() {
        if e % 2 != 0 {
            return Err(Error::HalfIntegerWeight);
        }
        let mut t = BiLaurent::monomial(e / 2, e / 2).scale(&coeff);
        for s in m.syms() {
            let f = match *s {
                Sym::P(n) => BiLaurent::monomial(n as i32, 0).add(&BiLaurent::monomial(0, n as i32)).scale(&g),
                Sym::Jac(n) => {
                    let one = BiLaurent::constant(Q::one());
                    let a = one.add(&BiLaurent::monomial(n as i32, 0).scale(&-Q::one())).pow(genus);
                    let b = one.add(&BiLaurent::monomial(0, n as i32).scale(&-Q::one())).pow(genus);
                    a.mul(&b)
                }
            };
            t = t.mul(&f);
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn realize_euler(c: &MotCoeff, curve: Option<&CurveData>) -> Result<Q> {
    let genus = if c.is_symbol_free() { 0 } else { need_curve(curve)?.genus() };
    let mut acc = Q::zero();
    for (e, m, coeff) in c.terms() {
        if e % 2 != 0 {
            return Err(Error::HalfIntegerWeight);
        }
        let mut t = coeff;
        for s in m.syms() {
            t *= match s {
                Sym::P(_) => Q::from_integer((2 * genus as i64).into()),
                Sym::Jac(_) => {
                    if genus == 0 {
                        Q::one()
                    } else {
                        Q::zero()
                    }
                }
            };
        }
        acc += t;
    }
    Ok(acc)
}

impl MotCoeff {
    pub fn realize(&self, r: &Realization, curve: Option<&CurveData>) -> Result<RealizedValue> {
        Ok(match r {
            Realization::PointCount { q, sqrt_q } => {
                RealizedValue::Rational(realize_point_count(self, q, sqrt_q.as_ref(), curve)?)
            }
            Realization::EPolynomial => RealizedValue::EPoly(EValue::polynomial(realize_epoly(self, curve)?)),
            Realization::EulerCharacteristic => RealizedValue::Rational(realize_euler(self, curve)?),
            Realization::Symbolic => RealizedValue::Symbolic(FractionCoeff::from(self.clone())),
        })
    }
}

fn cyclotomic_at(d: u32, x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in cyclotomic_coeffs(d).iter().rev() {
        acc = acc * x + Q::from_integer((*c).into());
    }
    acc
}

impl FractionCoeff {
    pub fn realize(&self, r: &Realization, curve: Option<&CurveData>) -> Result<RealizedValue> {
        match r {
            Realization::Symbolic => Ok(RealizedValue::Symbolic(self.clone())),
            Realization::PointCount { .. } | Realization::EulerCharacteristic => {
                let num = self.numerator().realize(r, curve)?;
                let x = match r {
                    Realization::PointCount { q, .. } => q.clone(),
                    _ => Q::one(),
                };
                let mut den = Q::one();
                for (&d, &e) in self.cyclotomic_factors() {
                    den *= num_traits::pow(cyclotomic_at(d, &x), e as usize);
                }
                if let Some(rest) = self.residual_denominator() {
                    den *= rest.realize(r, curve)?.as_rational().cloned().unwrap();
                }
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(RealizedValue::Rational(num.as_rational().unwrap() / den))
            }
            Realization::EPolynomial => {
                let num = realize_epoly(self.numerator(), curve)?;
                let den = realize_epoly(&self.denominator(), curve)?;
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(RealizedValue::EPoly(EValue { numerator: num, denominator: den }))
            }
        }
    }
}
