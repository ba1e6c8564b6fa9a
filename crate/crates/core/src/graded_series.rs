//! Truncated power series graded by rank, parabolic flag jumps and `z`.
//!
//! A monomial `w^r * prod_{x,j} w_{x,j}^{r_{x,j}} * z^k` is a [`MonomialIndex`].
//! Every series carries its [`Truncation`]; results of all operations are
//! clipped to it, so terms beyond the window are discarded rather than reported.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::motivic_coeff::{FractionCoeff, MotCoeff};
use crate::rational::Q;

/// Coefficient rings a [`GradedSeries`] can be built over.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_mot(c: MotCoeff) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, k: &Q) -> Self;
    fn adams(&self, k: u32) -> Self;
    fn try_inverse(&self) -> Option<Self>;
    fn to_json(&self) -> Value;
    fn sum_all(items: Vec<Self>) -> Self {
        items.iter().fold(Self::zero(), |a, b| a.add(b))
    }
}

impl Coeff for MotCoeff {
    fn zero() -> Self {
        MotCoeff::zero()
    }
    fn one() -> Self {
        MotCoeff::one()
    }
    fn from_mot(c: MotCoeff) -> Self {
        c
    }
    fn is_zero(&self) -> bool {
        MotCoeff::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Q) -> Self {
        MotCoeff::scale(self, k)
    }
    fn adams(&self, k: u32) -> Self {
        MotCoeff::adams(self, k)
    }
    fn try_inverse(&self) -> Option<Self> {
        let (c, k) = self.as_unit()?;
        Some(MotCoeff::rational(c.recip()).shift_half(-k))
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self.to_json_terms()).expect("serializable")
    }
    fn sum_all(items: Vec<Self>) -> Self {
        MotCoeff::from_components(
            items.iter().flat_map(|c| c.components().map(|(m, l)| (m.clone(), l.clone())).collect::<Vec<_>>()),
        )
    }
}

impl Coeff for FractionCoeff {
    fn zero() -> Self {
        FractionCoeff::zero()
    }
    fn one() -> Self {
        FractionCoeff::one()
    }
    fn from_mot(c: MotCoeff) -> Self {
        FractionCoeff::from(c)
    }
    fn is_zero(&self) -> bool {
        FractionCoeff::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Q) -> Self {
        FractionCoeff::scale(self, k)
    }
    fn adams(&self, k: u32) -> Self {
        FractionCoeff::adams(self, k)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(FractionCoeff::to_json(self)).expect("serializable")
    }
    fn sum_all(items: Vec<Self>) -> Self {
        FractionCoeff::sum_all(items)
    }
}

/// Exponent vector of a monomial. `punct` lists `r_{x,j}` puncture by puncture,
/// with the level counts given by the owning [`Truncation`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIndex {
    pub rank: u32,
    pub punct: Vec<u32>,
    pub z: u32,
}

impl MonomialIndex {
    pub fn new(rank: u32, punct: Vec<u32>, z: u32) -> Self {
        MonomialIndex { rank, punct, z }
    }

    /// `w^rank z^z` with all puncture exponents zero.
    pub fn plain(rank: u32, z: u32, n_punct_vars: usize) -> Self {
        MonomialIndex { rank, punct: vec![0; n_punct_vars], z }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.z == 0 && self.punct.iter().all(|&x| x == 0)
    }

    fn add(&self, other: &MonomialIndex) -> MonomialIndex {
        MonomialIndex {
            rank: self.rank + other.rank,
            punct: self.punct.iter().zip(&other.punct).map(|(a, b)| a + b).collect(),
            z: self.z + other.z,
        }
    }

    fn times(&self, k: u32) -> MonomialIndex {
        MonomialIndex { rank: self.rank * k, punct: self.punct.iter().map(|a| a * k).collect(), z: self.z * k }
    }

    /// The same monomial with `z` set to zero.
    pub fn w_part(&self) -> MonomialIndex {
        MonomialIndex { rank: self.rank, punct: self.punct.clone(), z: 0 }
    }

    /// Exponents `r_{x,j}` split per puncture.
    pub fn split_punct(&self, levels: &[u32]) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(levels.len());
        let mut at = 0;
        for &j in levels {
            out.push(self.punct[at..at + j as usize].to_vec());
            at += j as usize;
        }
        out
    }
}

/// Window of retained exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub r_max: u32,
    pub z_max: u32,
    /// Number of parabolic levels `J_x` kept at each puncture.
    pub levels: Vec<u32>,
}

impl Truncation {
    pub fn new(r_max: u32, z_max: u32, levels: Vec<u32>) -> Self {
        Truncation { r_max, z_max, levels }
    }

    pub fn n_punct_vars(&self) -> usize {
        self.levels.iter().map(|&j| j as usize).sum()
    }

    pub fn contains(&self, idx: &MonomialIndex) -> bool {
        if idx.rank > self.r_max || idx.z > self.z_max || idx.punct.len() != self.n_punct_vars() {
            return false;
        }
        let mut at = 0;
        for &j in &self.levels {
            let s: u32 = idx.punct[at..at + j as usize].iter().sum();
            if s > self.r_max {
                return false;
            }
            at += j as usize;
        }
        true
    }

    /// Pointwise minimum; puncture counts must agree.
    pub fn meet(&self, other: &Truncation) -> Truncation {
        assert_eq!(self.levels.len(), other.levels.len(), "series over different puncture sets");
        Truncation {
            r_max: self.r_max.min(other.r_max),
            z_max: self.z_max.min(other.z_max),
            levels: self.levels.iter().zip(&other.levels).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    fn restrict(&self, idx: &MonomialIndex, from: &Truncation) -> Option<MonomialIndex> {
        if self.levels == from.levels {
            return self.contains(idx).then(|| idx.clone());
        }
        let mut punct = Vec::with_capacity(self.n_punct_vars());
        let mut at = 0;
        for (k, &j) in from.levels.iter().enumerate() {
            let keep = self.levels[k] as usize;
            let block = &idx.punct[at..at + j as usize];
            if block[keep..].iter().any(|&x| x != 0) {
                return None;
            }
            punct.extend_from_slice(&block[..keep]);
            at += j as usize;
        }
        let out = MonomialIndex { rank: idx.rank, punct, z: idx.z };
        self.contains(&out).then_some(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedSeries<C: Coeff> {
    trunc: Truncation,
    terms: BTreeMap<MonomialIndex, C>,
}

impl<C: Coeff> GradedSeries<C> {
    pub fn zero(trunc: Truncation) -> Self {
        GradedSeries { trunc, terms: BTreeMap::new() }
    }

    pub fn one(trunc: Truncation) -> Self {
        let idx = MonomialIndex::plain(0, 0, trunc.n_punct_vars());
        Self::monomial(trunc, idx, C::one())
    }

    /// `c * x^idx`, or zero if `idx` lies outside the window.
    pub fn monomial(trunc: Truncation, idx: MonomialIndex, c: C) -> Self {
        let mut s = Self::zero(trunc);
        s.insert(idx, c);
        s
    }

    /// Builds from terms, clipping and summing duplicates.
    pub fn from_terms(trunc: Truncation, terms: impl IntoIterator<Item = (MonomialIndex, C)>) -> Self {
        let mut s = Self::zero(trunc);
        for (i, c) in terms {
            s.add_term(i, c);
        }
        s
    }

    fn insert(&mut self, idx: MonomialIndex, c: C) {
        if !c.is_zero() && self.trunc.contains(&idx) {
            self.terms.insert(idx, c);
        }
    }

    /// Adds `c * x^idx` in place.
    pub fn add_term(&mut self, idx: MonomialIndex, c: C) {
        if c.is_zero() || !self.trunc.contains(&idx) {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn trunc(&self) -> &Truncation {
        &self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonomialIndex, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> C {
        self.terms.get(&MonomialIndex::plain(0, 0, self.trunc.n_punct_vars())).cloned().unwrap_or_else(C::zero)
    }

    /// The stored coefficient, zero if absent; errors outside the window.
    pub fn coefficient_at(&self, idx: &MonomialIndex) -> Result<C> {
        if !self.trunc.contains(idx) {
            return Err(Error::BeyondTruncation);
        }
        Ok(self.terms.get(idx).cloned().unwrap_or_else(C::zero))
    }

    /// Re-clips to a smaller window.
    pub fn with_trunc(&self, trunc: &Truncation) -> Self {
        let t = self.trunc.meet(trunc);
        let terms = self.terms.iter().filter_map(|(i, c)| t.restrict(i, &self.trunc).map(|i| (i, c.clone()))).collect();
        GradedSeries { trunc: t, terms }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.trunc == other.trunc {
            return (self.clone(), other.clone());
        }
        let t = self.trunc.meet(&other.trunc);
        (self.with_trunc(&t), other.with_trunc(&t))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (i, c) in b.terms {
            a.add_term(i, c);
        }
        a
    }

    pub fn neg(&self) -> Self {
        GradedSeries { trunc: self.trunc.clone(), terms: self.terms.iter().map(|(i, c)| (i.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, k: &C) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(i, c)| (i.clone(), c.mul(k)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        GradedSeries { trunc: self.trunc.clone(), terms }
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::zero(self.trunc.clone());
        }
        GradedSeries { trunc: self.trunc.clone(), terms: self.terms.iter().map(|(i, c)| (i.clone(), c.scale(k))).collect() }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> GradedSeries<D> {
        let terms = self
            .terms
            .iter()
            .map(|(i, c)| (i.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        GradedSeries { trunc: self.trunc.clone(), terms }
    }

    /// Product, parallel over the terms of `self`; exact arithmetic makes the
    /// result independent of scheduling.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let trunc = a.trunc.clone();
        if a.is_zero() || b.is_zero() {
            return Self::zero(trunc);
        }
        let left: Vec<(&MonomialIndex, &C)> = a.terms.iter().collect();
        let right: Vec<(&MonomialIndex, &C)> = b.terms.iter().collect();
        let chunk = (left.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
        let partials: Vec<HashMap<MonomialIndex, Vec<C>>> = left
            .par_chunks(chunk)
            .map(|ch| {
                let mut acc: HashMap<MonomialIndex, Vec<C>> = HashMap::new();
                for (i, x) in ch {
                    for (j, y) in &right {
                        if i.rank + j.rank > trunc.r_max || i.z + j.z > trunc.z_max {
                            continue;
                        }
                        let k = i.add(j);
                        if !trunc.contains(&k) {
                            continue;
                        }
                        acc.entry(k).or_default().push(x.mul(y));
                    }
                }
                acc
            })
            .collect();
        let mut merged: BTreeMap<MonomialIndex, Vec<C>> = BTreeMap::new();
        for p in partials {
            for (k, v) in p {
                merged.entry(k).or_default().extend(v);
            }
        }
        let summed: Vec<(MonomialIndex, C)> =
            merged.into_par_iter().map(|(k, v)| (k, C::sum_all(v))).filter(|(_, c)| !c.is_zero()).collect();
        GradedSeries { trunc, terms: summed.into_iter().collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.trunc.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.constant_term();
        let inv0 = c0.try_inverse().ok_or(Error::NotInvertible)?;
        // f = c0 (1 + g), 1/f = c0^{-1} sum (-g)^n
        let zero = MonomialIndex::plain(0, 0, self.trunc.n_punct_vars());
        let mut g = self.scalar_mul(&inv0);
        g.terms.remove(&zero);
        let neg_g = g.neg();
        let mut acc = Self::one(self.trunc.clone());
        let mut power = Self::one(self.trunc.clone());
        loop {
            power = power.mul(&neg_g);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.scalar_mul(&inv0))
    }

    /// Keeps exactly the terms whose index satisfies `pred`.
    pub fn filter_monomials(&self, pred: impl Fn(&MonomialIndex) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(i, _)| pred(i)).map(|(i, c)| (i.clone(), c.clone())).collect();
        GradedSeries { trunc: self.trunc.clone(), terms }
    }

    /// `psi_k`: exponents times `k`, Adams operation on coefficients.
    pub fn adams(&self, k: u32) -> Self {
        assert!(k >= 1);
        if k == 1 {
            return self.clone();
        }
        let items: Vec<(&MonomialIndex, &C)> =
            self.terms.iter().filter(|(i, _)| self.trunc.contains(&i.times(k))).collect();
        let terms: Vec<(MonomialIndex, C)> = items.into_par_iter().map(|(i, c)| (i.times(k), c.adams(k))).collect();
        GradedSeries { trunc: self.trunc.clone(), terms: terms.into_iter().collect() }
    }

    /// w-monomials whose coefficient of some `z^k` with `k > z_max - guard` is nonzero,
    /// with the largest such `k`.
    pub fn z_tail_violations(&self, guard: u32) -> Vec<(MonomialIndex, u32)> {
        let lowest = (self.trunc.z_max + 1).saturating_sub(guard);
        let mut out: BTreeMap<MonomialIndex, u32> = BTreeMap::new();
        for i in self.terms.keys() {
            if guard > 0 && i.z >= lowest {
                let e = out.entry(i.w_part()).or_insert(0);
                *e = (*e).max(i.z);
            }
        }
        out.into_iter().collect()
    }

    /// Sets `z = 1`, after checking that the top `guard` z-degrees vanish.
    pub fn evaluate_z_one(&self, guard: u32) -> Result<Self> {
        if let Some((w, z)) = self.z_tail_violations(guard).into_iter().next() {
            return Err(Error::NotStabilized(format!(
                "coefficient of w^{} {:?} z^{} is nonzero within the top {} z-degrees",
                w.rank, w.punct, z, guard
            )));
        }
        let mut groups: BTreeMap<MonomialIndex, Vec<C>> = BTreeMap::new();
        for (i, c) in &self.terms {
            groups.entry(i.w_part()).or_default().push(c.clone());
        }
        let terms: Vec<(MonomialIndex, C)> =
            groups.into_par_iter().map(|(i, v)| (i, C::sum_all(v))).filter(|(_, c)| !c.is_zero()).collect();
        Ok(GradedSeries { trunc: self.trunc.clone(), terms: terms.into_iter().collect() })
    }

    /// Wire format: `[{gamma: {r, r_xj}, z, coeff}]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(i, c)| {
                    json!({
                        "gamma": {"r": i.rank, "r_xj": i.split_punct(&self.trunc.levels)},
                        "z": i.z,
                        "coeff": c.to_json(),
                    })
                })
                .collect(),
        )
    }
}

impl GradedSeries<MotCoeff> {
    pub fn to_fraction(&self) -> GradedSeries<FractionCoeff> {
        self.map_coeffs(|c| FractionCoeff::from(c.clone()))
    }
}

/// Series in `z` alone (no `w` variables) over `trunc`'s puncture layout.
pub fn z_series<C: Coeff>(trunc: &Truncation, coeffs: impl IntoIterator<Item = (u32, C)>) -> GradedSeries<C> {
    let n = trunc.n_punct_vars();
    GradedSeries::from_terms(trunc.clone(), coeffs.into_iter().map(|(k, c)| (MonomialIndex::plain(0, k, n), c)))
}

/// `1 - x^idx`-style helper: `1 + c * x^idx`.
pub fn one_plus<C: Coeff>(trunc: &Truncation, idx: MonomialIndex, c: C) -> GradedSeries<C> {
    GradedSeries::one(trunc.clone()).add(&GradedSeries::monomial(trunc.clone(), idx, c))
}

impl<C: Coeff> GradedSeries<C> {
    /// Sum of `(-1)^{n+1} g^n / n` for `f = 1 + g`.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().sub(&C::one()).is_zero() {
            return Err(Error::LogConstantTerm);
        }
        let g = self.sub(&Self::one(self.trunc.clone()));
        let mut acc = Self::zero(self.trunc.clone());
        let mut power = Self::one(self.trunc.clone());
        let mut n = 1i64;
        loop {
            power = power.mul(&g);
            if power.is_zero() {
                break;
            }
            let k = Q::new(if n % 2 == 1 { 1.into() } else { (-1).into() }, n.into());
            acc = acc.add(&power.scale(&k));
            n += 1;
        }
        Ok(acc)
    }

    /// Sum of `g^n / n!` for `g` without constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::ExpAugmentation);
        }
        let mut acc = Self::one(self.trunc.clone());
        let mut power = Self::one(self.trunc.clone());
        let mut n = 1i64;
        loop {
            power = power.mul(self).scale(&Q::new(1.into(), n.into()));
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
            n += 1;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    fn t(r: u32, z: u32) -> Truncation {
        Truncation::new(r, z, vec![])
    }

    fn wz(r: u32, z: u32, c: i64) -> GradedSeries<MotCoeff> {
        GradedSeries::monomial(t(4, 8), MonomialIndex::plain(r, z, 0), MotCoeff::int(c))
    }

    #[test]
    fn difference_of_squares() {
        let one = GradedSeries::<MotCoeff>::one(t(4, 8));
        let a = one.add(&wz(1, 1, 1));
        let b = one.sub(&wz(1, 1, 1));
        assert_eq!(a.mul(&b), one.sub(&wz(2, 2, 1)));
    }

    #[test]
    fn geometric_inverse() {
        let f = GradedSeries::<MotCoeff>::one(t(0, 5)).sub(&GradedSeries::monomial(
            t(0, 5),
            MonomialIndex::plain(0, 1, 0),
            MotCoeff::l_pow(2),
        ));
        let inv = f.invert().unwrap();
        for n in 0..=5 {
            assert_eq!(inv.coefficient_at(&MonomialIndex::plain(0, n, 0)).unwrap(), MotCoeff::l_pow(2 * n as i32));
        }
        assert!(matches!(inv.coefficient_at(&MonomialIndex::plain(0, 6, 0)), Err(Error::BeyondTruncation)));
    }

    #[test]
    fn non_unit_is_not_invertible() {
        let f = GradedSeries::monomial(t(2, 2), MonomialIndex::plain(0, 0, 0), MotCoeff::poly_in_l(&[1, 1]));
        assert!(matches!(f.invert(), Err(Error::NotInvertible)));
        let g = GradedSeries::<FractionCoeff>::monomial(t(2, 2), MonomialIndex::plain(0, 0, 0), FractionCoeff::from(MotCoeff::poly_in_l(&[1, 1])));
        assert!(g.invert().is_ok());
    }

    #[test]
    fn clipping() {
        let x = wz(3, 0, 1);
        assert!(x.mul(&x).is_zero());
    }

    #[test]
    fn z_evaluation_and_guard() {
        let f = wz(1, 0, 1).add(&wz(1, 2, 1));
        let e = f.evaluate_z_one(3).unwrap();
        assert_eq!(e.coefficient_at(&MonomialIndex::plain(1, 0, 0)).unwrap(), MotCoeff::int(2));
        let g = wz(1, 7, 1);
        assert!(matches!(g.evaluate_z_one(3), Err(Error::NotStabilized(_))));
    }

    #[test]
    fn log_exp_inverse() {
        let g = wz(1, 0, 1).add(&wz(1, 1, 3)).add(&wz(2, 3, -2));
        let e = g.exp().unwrap();
        assert_eq!(e.log().unwrap(), g);
        assert_eq!(e.coefficient_at(&MonomialIndex::plain(2, 0, 0)).unwrap(), MotCoeff::rational(crate::rational::frac(1, 2)));
    }

    #[test]
    fn puncture_truncation() {
        let tr = Truncation::new(2, 2, vec![2]);
        let idx = MonomialIndex::new(1, vec![1, 0], 0);
        let s = GradedSeries::monomial(tr.clone(), idx, MotCoeff::one());
        let sq = s.mul(&s);
        assert_eq!(sq.len(), 1);
        assert!(sq.mul(&s).is_zero());
        let json = sq.to_json();
        assert_eq!(json[0]["gamma"]["r_xj"], serde_json::json!([[2, 0]]));
    }
}
