//! The coefficient lambda-ring.
//!
//! Motivic classes are represented in the concrete lambda-ring
//! `Q[L^{±1/2}][p_1, p_2, ...][Jac_1, Jac_2, ...]`:
//!
//! - `L` is the Lefschetz motive, stored through `s = L^{1/2}` so that the
//!   sign base `-L^{1/2}` is exact;
//! - `p_n` are power sums of the Weil numbers of the curve (the n-th Adams
//!   operation of `h^1`);
//! - `Jac_k` is the opaque class of the Jacobian twisted by `psi_k`
//!   (`Jac_1 = [Jac(X)]`).
//!
//! Adams operations act by `L^{m/2} -> L^{km/2}`, `p_n -> p_{kn}`,
//! `Jac_n -> Jac_{kn}`. Fractions over this ring live in [`FractionCoeff`].

mod curve;
pub(crate) mod cyclotomic;
mod fraction;
mod json;
pub(crate) mod laurent;
mod realize;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

pub use curve::CurveData;
pub use fraction::FractionCoeff;
pub use json::{CoeffTermJson, FractionJson};
pub use realize::{EValue, Realization, RealizedValue};

use crate::rational::Q;
use laurent::Laurent;

/// A generator of the coefficient ring besides `L^{1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    /// Power sum `p_n` of the Weil numbers.
    P(u32),
    /// `psi_n [Jac(X)]`.
    Jac(u32),
}

/// A monomial in the symbols: a sorted multiset.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMono(Vec<Sym>);

impl SymMono {
    pub fn one() -> Self {
        SymMono(Vec::new())
    }

    pub fn from_syms(mut syms: Vec<Sym>) -> Self {
        syms.sort();
        SymMono(syms)
    }

    pub fn syms(&self) -> &[Sym] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &SymMono) -> SymMono {
        if other.0.is_empty() {
            return self.clone();
        }
        if self.0.is_empty() {
            return other.clone();
        }
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        SymMono(v)
    }

    fn adams(&self, k: u32) -> SymMono {
        SymMono(
            self.0
                .iter()
                .map(|s| match s {
                    Sym::P(n) => Sym::P(n * k),
                    Sym::Jac(n) => Sym::Jac(n * k),
                })
                .collect(),
        )
    }

    pub fn p_indices(&self) -> Vec<u32> {
        self.0.iter().filter_map(|s| if let Sym::P(n) = s { Some(*n) } else { None }).collect()
    }

    pub fn jac_indices(&self) -> Vec<u32> {
        self.0.iter().filter_map(|s| if let Sym::Jac(n) = s { Some(*n) } else { None }).collect()
    }
}

/// An element of the coefficient lambda-ring. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MotCoeff {
    terms: BTreeMap<SymMono, Laurent>,
}

impl MotCoeff {
    pub fn zero() -> Self {
        MotCoeff::default()
    }

    pub fn one() -> Self {
        Self::rational(Q::one())
    }

    pub fn int(n: i64) -> Self {
        Self::rational(crate::rational::q(n))
    }

    pub fn rational(c: Q) -> Self {
        Self::term(0, SymMono::one(), c)
    }

    /// `c * L^{half_exp/2} * mono`.
    pub fn term(half_exp: i32, mono: SymMono, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, Laurent::monomial(half_exp, c));
        }
        MotCoeff { terms }
    }

    /// The Lefschetz motive `L`.
    pub fn lefschetz() -> Self {
        Self::l_pow_half(2)
    }

    /// `L^{k/2}`.
    pub fn l_pow_half(k: i32) -> Self {
        Self::term(k, SymMono::one(), Q::one())
    }

    /// `L^k`.
    pub fn l_pow(k: i32) -> Self {
        Self::l_pow_half(2 * k)
    }

    /// Power sum symbol `p_n`.
    pub fn p(n: u32) -> Self {
        assert!(n >= 1, "power sums are indexed from 1");
        Self::term(0, SymMono(vec![Sym::P(n)]), Q::one())
    }

    /// `[Jac(X)]`.
    pub fn jac() -> Self {
        Self::term(0, SymMono(vec![Sym::Jac(1)]), Q::one())
    }

    /// Polynomial in `L` with the given integer coefficients, ascending.
    pub fn poly_in_l(coeffs: &[i64]) -> Self {
        let mut acc = MotCoeff::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            acc = acc + Self::term(2 * i as i32, SymMono::one(), crate::rational::q(c));
        }
        acc
    }

    pub(crate) fn from_laurent(l: Laurent) -> Self {
        let mut terms = BTreeMap::new();
        if !l.is_zero() {
            terms.insert(SymMono::one(), l);
        }
        MotCoeff { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` if this is the constant `c`.
    pub fn as_rational(&self) -> Option<Q> {
        if self.is_zero() {
            return Some(Q::zero());
        }
        if self.terms.len() != 1 {
            return None;
        }
        let (m, l) = self.terms.iter().next().unwrap();
        if !m.is_one() || l.len() != 1 || l.low() != 0 {
            return None;
        }
        l.coeff(0).cloned()
    }

    /// `Some((c, k))` if this is `c * L^{k/2}` with `c != 0`.
    pub fn as_unit(&self) -> Option<(Q, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, l) = self.terms.iter().next().unwrap();
        if !m.is_one() || l.len() != 1 {
            return None;
        }
        Some((l.coeff(l.low()).unwrap().clone(), l.low()))
    }

    /// Flat list of nonzero terms `(half exponent of L, symbol monomial, coefficient)`.
    pub fn terms(&self) -> Vec<(i32, SymMono, Q)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .flat_map(|(m, l)| l.terms().map(move |(e, c)| (e, m.clone(), c.clone())))
            .collect();
        out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        out
    }

    pub fn num_terms(&self) -> usize {
        self.terms.values().map(|l| l.terms().count()).sum()
    }

    /// True if all exponents of `L^{1/2}` are even.
    pub fn has_integer_weights(&self) -> bool {
        self.terms.values().all(|l| l.terms().all(|(e, _)| e % 2 == 0))
    }

    /// True if no `p_n` or `Jac_n` symbol occurs.
    pub fn is_symbol_free(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub(crate) fn components(&self) -> impl Iterator<Item = (&SymMono, &Laurent)> {
        self.terms.iter()
    }

    pub(crate) fn from_components(it: impl IntoIterator<Item = (SymMono, Laurent)>) -> Self {
        let mut terms: BTreeMap<SymMono, Laurent> = BTreeMap::new();
        for (m, l) in it {
            if l.is_zero() {
                continue;
            }
            match terms.get_mut(&m) {
                Some(existing) => {
                    existing.add_assign(&l);
                    if existing.is_zero() {
                        terms.remove(&m);
                    }
                }
                None => {
                    terms.insert(m, l);
                }
            }
        }
        MotCoeff { terms }
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return MotCoeff::zero();
        }
        MotCoeff { terms: self.terms.iter().map(|(m, l)| (m.clone(), l.scale(k))).collect() }
    }

    /// Multiplies by `L^{k/2}`.
    pub fn shift_half(&self, k: i32) -> Self {
        MotCoeff { terms: self.terms.iter().map(|(m, l)| (m.clone(), l.shift(k))).collect() }
    }

    pub(crate) fn mul_laurent(&self, f: &Laurent) -> Self {
        Self::from_components(self.terms.iter().map(|(m, l)| (m.clone(), l.mul(f))))
    }

    pub(crate) fn div_laurent_exact(&self, f: &Laurent) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, l) in &self.terms {
            terms.insert(m.clone(), l.div_exact(f)?);
        }
        Some(MotCoeff { terms })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MotCoeff::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Adams operation `psi_k`.
    pub fn adams(&self, k: u32) -> Self {
        assert!(k >= 1, "Adams operations are indexed from 1");
        if k == 1 {
            return self.clone();
        }
        Self::from_components(self.terms.iter().map(|(m, l)| (m.adams(k), l.adams(k))))
    }

    /// Substitutes rational values for the symbols, keeping `L` symbolic.
    pub fn substitute_symbols(&self, value: &dyn Fn(Sym) -> Q) -> Self {
        Self::from_components(self.terms.iter().map(|(m, l)| {
            let mut c = Q::one();
            for s in m.syms() {
                c *= value(*s);
            }
            (SymMono::one(), l.scale(&c))
        }))
    }
}

impl fmt::Debug for MotCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotCoeff({self})")
    }
}

pub(crate) fn format_l_power(half: i32) -> Option<String> {
    match half {
        0 => None,
        2 => Some("L".to_string()),
        h if h % 2 == 0 => Some(format!("L^{}", h / 2)),
        h => Some(format!("L^({h}/2)")),
    }
}

fn format_sym(s: &Sym) -> String {
    match s {
        Sym::P(n) => format!("p{n}"),
        Sym::Jac(1) => "Jac".to_string(),
        Sym::Jac(n) => format!("Jac{n}"),
    }
}

impl fmt::Display for MotCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest power of L first
        let mut terms = self.terms();
        terms.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (i, (e, m, c)) in terms.iter().enumerate() {
            let mut factors: Vec<String> = m.syms().iter().map(format_sym).collect();
            if let Some(l) = format_l_power(*e) {
                factors.push(l);
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if factors.is_empty() {
                write!(f, "{}", crate::rational::format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", crate::rational::format_rational(&mag), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MotCoeff> for &'a MotCoeff {
    type Output = MotCoeff;
    fn add(self, other: &MotCoeff) -> MotCoeff {
        let mut out = self.clone();
        for (m, l) in &other.terms {
            match out.terms.get_mut(m) {
                Some(existing) => {
                    existing.add_assign(l);
                    if existing.is_zero() {
                        out.terms.remove(m);
                    }
                }
                None => {
                    out.terms.insert(m.clone(), l.clone());
                }
            }
        }
        out
    }
}

impl Neg for &MotCoeff {
    type Output = MotCoeff;
    fn neg(self) -> MotCoeff {
        MotCoeff { terms: self.terms.iter().map(|(m, l)| (m.clone(), l.neg())).collect() }
    }
}

impl<'a> Sub<&'a MotCoeff> for &'a MotCoeff {
    type Output = MotCoeff;
    fn sub(self, other: &MotCoeff) -> MotCoeff {
        self + &(-other)
    }
}

impl<'a> Mul<&'a MotCoeff> for &'a MotCoeff {
    type Output = MotCoeff;
    fn mul(self, other: &MotCoeff) -> MotCoeff {
        if self.is_zero() || other.is_zero() {
            return MotCoeff::zero();
        }
        let mut terms: BTreeMap<SymMono, Laurent> = BTreeMap::new();
        for (m1, l1) in &self.terms {
            for (m2, l2) in &other.terms {
                let m = m1.mul(m2);
                let l = l1.mul(l2);
                match terms.get_mut(&m) {
                    Some(existing) => existing.add_assign(&l),
                    None => {
                        terms.insert(m, l);
                    }
                }
            }
        }
        terms.retain(|_, l| !l.is_zero());
        MotCoeff { terms }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $method:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, other: $ty) -> $ty { (&self).$method(&other) }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, other: &'a $ty) -> $ty { (&self).$method(other) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(MotCoeff, Add add, Sub sub, Mul mul);

impl Neg for MotCoeff {
    type Output = MotCoeff;
    fn neg(self) -> MotCoeff {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn l() -> MotCoeff {
        MotCoeff::lefschetz()
    }

    #[test]
    fn difference_of_squares() {
        let one = MotCoeff::one();
        let prod = (&l() + &one) * (&l() - &one);
        assert_eq!(prod, MotCoeff::poly_in_l(&[-1, 0, 1]));
    }

    #[test]
    fn projective_line_storage() {
        let p1 = &l() + &MotCoeff::one();
        let terms = p1.terms();
        assert_eq!(terms.len(), 2);
        assert_eq!((terms[0].0, terms[0].2.clone()), (0, q(1)));
        assert_eq!((terms[1].0, terms[1].2.clone()), (2, q(1)));
    }

    #[test]
    fn gl2_product() {
        let a = MotCoeff::poly_in_l(&[0, -1, 1]);
        let b = MotCoeff::poly_in_l(&[-1, 0, 1]);
        assert_eq!(a * b, MotCoeff::poly_in_l(&[0, 1, -1, -1, 1]));
    }

    #[test]
    fn adams_rules() {
        assert_eq!(MotCoeff::l_pow_half(1).adams(2), l());
        let x = &MotCoeff::p(1) + &l();
        assert_eq!(x.adams(2), &MotCoeff::p(2) + &MotCoeff::l_pow(2));
        assert_eq!(x.adams(1), x);
        assert_eq!(MotCoeff::jac().adams(3), MotCoeff::term(0, SymMono(vec![Sym::Jac(3)]), q(1)));
    }

    #[test]
    fn zero_is_not_stored() {
        let x = &MotCoeff::p(1) - &MotCoeff::p(1);
        assert!(x.is_zero());
        assert_eq!(x.num_terms(), 0);
    }

    #[test]
    fn display_is_readable() {
        let x = MotCoeff::poly_in_l(&[-1, 0, 1]);
        assert_eq!(x.to_string(), "L^2 - 1");
        let y = &MotCoeff::l_pow_half(-1).scale(&q(-2)) + &MotCoeff::p(1);
        assert_eq!(y.to_string(), "p1 - 2*L^(-1/2)");
    }
}
