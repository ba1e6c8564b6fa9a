//! The motivic quantum torus `e_a e_b = L^{<a,b>/2} e_{a+b}` and ray-wise DT invariants.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graded_series::{GradedSeries, MonomialIndex, Truncation};
use crate::motivic_coeff::{CoeffTermJson, FractionCoeff, MotCoeff};
use crate::plethystic::{pleth_exp, pleth_log};
use crate::rational::Q;

pub type Charge = Vec<i64>;

/// `Z^n` with an antisymmetric integer form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeLattice {
    skew: Vec<Vec<i64>>,
}

impl ChargeLattice {
    pub fn new(skew: Vec<Vec<i64>>) -> Result<Self> {
        let n = skew.len();
        if skew.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("skew form must be a square matrix".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if skew[i][j] != -skew[j][i] {
                    return Err(Error::InvalidInput(format!("skew form is not antisymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(ChargeLattice { skew })
    }

    /// Rank `n` with the zero form.
    pub fn commutative(n: usize) -> Self {
        ChargeLattice { skew: vec![vec![0; n]; n] }
    }

    pub fn rank(&self) -> usize {
        self.skew.len()
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                acc += x * self.skew[i][j] * y;
            }
        }
        acc
    }
}

fn norm(g: &[i64]) -> u64 {
    g.iter().map(|x| x.unsigned_abs()).sum()
}

/// Finite sum `sum_g c_g e_g`, clipped to charges with `|g|_1 <= window`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElement {
    rank: usize,
    window: u64,
    terms: BTreeMap<Charge, FractionCoeff>,
}

impl TorusElement {
    pub fn zero(rank: usize, window: u64) -> Self {
        TorusElement { rank, window, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize, window: u64) -> Self {
        let mut out = Self::zero(rank, window);
        out.add_term(vec![0; rank], FractionCoeff::one());
        out
    }

    pub fn monomial(rank: usize, window: u64, g: Charge, c: FractionCoeff) -> Self {
        let mut out = Self::zero(rank, window);
        out.add_term(g, c);
        out
    }

    pub fn add_term(&mut self, g: Charge, c: FractionCoeff) {
        assert_eq!(g.len(), self.rank, "charge of wrong rank");
        if norm(&g) > self.window || c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&g) {
            Some(old) => &old + &c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(g, merged);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Charge, &FractionCoeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &[i64]) -> FractionCoeff {
        self.terms.get(g).cloned().unwrap_or_else(FractionCoeff::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.window = self.window.min(other.window);
        out.terms.retain(|g, _| norm(g) <= out.window);
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Q) -> Self {
        let mut out = Self::zero(self.rank, self.window);
        for (g, c) in &self.terms {
            out.add_term(g.clone(), c.scale(k));
        }
        out
    }
}

/// Twisted product.
pub fn torus_mul(a: &TorusElement, b: &TorusElement, lat: &ChargeLattice) -> TorusElement {
    assert_eq!(a.rank, lat.rank(), "element and lattice ranks differ");
    assert_eq!(b.rank, lat.rank(), "element and lattice ranks differ");
    let mut out = TorusElement::zero(a.rank, a.window.min(b.window));
    for (g, x) in &a.terms {
        for (h, y) in &b.terms {
            let sum: Charge = g.iter().zip(h).map(|(p, q)| p + q).collect();
            if norm(&sum) > out.window {
                continue;
            }
            let twist = lat.pairing(g, h) as i32;
            out.add_term(sum, (x * y).shift_half(twist));
        }
    }
    out
}

/// Primitive generator of the ray through `g`.
fn primitive(g: &[i64]) -> Charge {
    let d = g.iter().fold(0i64, |acc, x| acc.gcd(x));
    g.iter().map(|x| x / d).collect()
}

/// The common primitive generator of the support, or an error.
fn ray_of(a: &TorusElement) -> Result<Option<Charge>> {
    let mut ray: Option<Charge> = None;
    for g in a.terms.keys() {
        if g.iter().all(|x| *x == 0) {
            continue;
        }
        let p = primitive(g);
        match &ray {
            None => ray = Some(p),
            Some(r) if *r == p => {}
            Some(_) => return Err(Error::NotSingleRay),
        }
    }
    Ok(ray)
}

fn multiple_of(g: &[i64], ray: &[i64]) -> u32 {
    let i = ray.iter().position(|x| *x != 0).expect("nonzero ray");
    (g[i] / ray[i]) as u32
}

fn along_ray(a: &TorusElement, ray: &[i64]) -> GradedSeries<FractionCoeff> {
    let k_max = (a.window / norm(ray)) as u32;
    let t = Truncation::new(k_max, 0, vec![]);
    GradedSeries::from_terms(t, a.terms.iter().map(|(g, c)| (MonomialIndex::plain(multiple_of(g, ray), 0, 0), c.clone())))
}

fn from_ray(s: &GradedSeries<FractionCoeff>, ray: &[i64], window: u64) -> TorusElement {
    let mut out = TorusElement::zero(ray.len(), window);
    for (i, c) in s.terms() {
        out.add_term(ray.iter().map(|x| x * i.rank as i64).collect(), c.clone());
    }
    out
}

/// `Omega(k g0) = (1 - L^{-1}) [Log A]_{k g0}` for `A` supported on the ray of `g0`.
pub fn dt_extract_ray(a: &TorusElement) -> Result<BTreeMap<Charge, FractionCoeff>> {
    if !a.coefficient(&vec![0; a.rank]).is_one() {
        return Err(Error::LogConstantTerm);
    }
    let Some(ray) = ray_of(a)? else {
        return Ok(BTreeMap::new());
    };
    let log = pleth_log(&along_ray(a, &ray))?;
    let factor = FractionCoeff::from(&MotCoeff::one() - &MotCoeff::l_pow(-1));
    Ok(log
        .terms()
        .map(|(i, c)| (ray.iter().map(|x| x * i.rank as i64).collect::<Charge>(), c * &factor))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// `A = Exp(sum Omega(g) e_g / (1 - L^{-1}))` for invariants supported on one ray.
pub fn ray_element(omega: &BTreeMap<Charge, FractionCoeff>, rank: usize, window: u64) -> Result<TorusElement> {
    let mut f = TorusElement::zero(rank, window);
    for (g, c) in omega {
        if g.len() != rank {
            return Err(Error::ShapeMismatch(format!("charge {g:?} has rank {}, expected {rank}", g.len())));
        }
        f.add_term(g.clone(), c * &FractionCoeff::inv_one_minus_l_pow(-1));
    }
    if f.terms.is_empty() {
        return Ok(TorusElement::one(rank, window));
    }
    if !f.coefficient(&vec![0; rank]).is_zero() {
        return Err(Error::ExpAugmentation);
    }
    let ray = ray_of(&f)?.expect("nonempty support");
    Ok(from_ray(&pleth_exp(&along_ray(&f, &ray))?, &ray, window))
}

/// Central charge as two rational linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharge {
    pub re: Vec<Q>,
    pub im: Vec<Q>,
}

impl CentralCharge {
    pub fn eval(&self, g: &[i64]) -> (Q, Q) {
        let dot = |f: &[Q]| f.iter().zip(g).fold(Q::zero(), |acc, (a, x)| acc + a * Q::from_integer((*x).into()));
        (dot(&self.re), dot(&self.im))
    }
}

/// Ordered product of ray elements, which must be listed clockwise (decreasing `arg Z`).
pub fn sector_factorize(rays: &[TorusElement], z: &CentralCharge, lat: &ChargeLattice) -> Result<TorusElement> {
    let first = rays.first().ok_or_else(|| Error::InvalidInput("no rays given".into()))?;
    let mut prev: Option<(Q, Q)> = None;
    for (k, a) in rays.iter().enumerate() {
        let Some(ray) = ray_of(a)? else { continue };
        let zc = z.eval(&ray);
        if zc.0.is_zero() && zc.1.is_zero() {
            return Err(Error::InvalidInput(format!("ray {k} has zero central charge")));
        }
        if let Some(p) = &prev {
            let cross = &p.0 * &zc.1 - &p.1 * &zc.0;
            if !cross.is_negative() {
                return Err(Error::RayOrder(format!("ray {k} is not clockwise from ray {}", k - 1)));
            }
        }
        prev = Some(zc);
    }
    let mut acc = TorusElement::one(first.rank, rays.iter().map(|a| a.window).min().unwrap_or(0));
    for a in rays {
        acc = torus_mul(&acc, a, lat);
    }
    Ok(acc)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    gamma: Vec<i64>,
    coeff: Vec<CoeffTermJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TorusJson {
    skew: Vec<Vec<i64>>,
    window: u64,
    terms: Vec<TermJson>,
}

const MAX_WINDOW: u64 = 64;
const MAX_RANK: usize = 16;

/// Parses `{"skew": [[..]], "window": n, "terms": [{"gamma": [..], "coeff": [terms]}]}`.
pub fn parse_torus_json(s: &str) -> Result<(ChargeLattice, TorusElement)> {
    let j: TorusJson = serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("torus JSON: {e}")))?;
    if j.skew.len() > MAX_RANK {
        return Err(Error::InvalidInput(format!("lattice rank above {MAX_RANK}")));
    }
    if j.window > MAX_WINDOW {
        return Err(Error::InvalidInput(format!("window above {MAX_WINDOW}")));
    }
    let lat = ChargeLattice::new(j.skew)?;
    let mut a = TorusElement::zero(lat.rank(), j.window);
    for t in j.terms {
        if t.gamma.len() != lat.rank() {
            return Err(Error::ShapeMismatch(format!("charge {:?} does not match lattice rank {}", t.gamma, lat.rank())));
        }
        if t.gamma.iter().any(|x| x.unsigned_abs() > MAX_WINDOW) {
            return Err(Error::InvalidInput("charge entries out of range".into()));
        }
        a.add_term(t.gamma, FractionCoeff::from(MotCoeff::from_json_terms(&t.coeff)?));
    }
    Ok((lat, a))
}
