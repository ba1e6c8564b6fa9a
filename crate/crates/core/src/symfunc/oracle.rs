//! Independent constructions by Gram-Schmidt orthogonalization.
//!
//! Macdonald `P_mu(q, t)` is the unitriangular (w.r.t. dominance) basis orthogonal
//! under `<p_lambda, p_mu> = delta z_lambda prod_i (1 - q^{lambda_i}) / (1 - t^{lambda_i})`.
//! The modified polynomial is
//! `H_mu(x; q, t) = t^{n(mu)} J_mu[X / (1 - 1/t); q, 1/t]` with `J_mu = c_mu P_mu`,
//! `c_mu(q, t) = prod_{cells} (1 - q^{arm} t^{leg + 1})`.
//!
//! Everything is computed exactly at numeric parameter values and the
//! polynomial coefficients are recovered by interpolation, with an extra point
//! as a consistency check. Parameters are taken at distinct primes so that no
//! `q^a = t^b` coincidence can make a norm vanish.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::basis::{interpolate, invert, monomial_product, power_to_monomial, z_lambda};
use super::bipoly::BiPoly;
use super::partition::Partition;
use super::sympoly::SymPoly;
use crate::rational::{pow_i, q as qi, Q};

const PRIMES: [i64; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103,
    107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

struct Tables {
    parts: Vec<Partition>,
    p_to_m: Vec<Vec<Q>>,
    m_to_p: Vec<Vec<Q>>,
}

impl Tables {
    fn new(n: u32) -> Self {
        let (parts, p_to_m) = power_to_monomial(n);
        let m_to_p = invert(&p_to_m);
        Tables { parts, p_to_m, m_to_p }
    }

    fn index(&self, mu: &Partition) -> usize {
        self.parts.iter().position(|p| p == mu).expect("partition of the right size")
    }
}

/// Macdonald `P` for all partitions of `n` at numeric `(q, t)`, as monomial-basis vectors
/// indexed like [`Partition::all`].
fn macdonald_p(tab: &Tables, qv: &Q, tv: &Q) -> Vec<Vec<Q>> {
    let k = tab.parts.len();
    let weight: Vec<Q> = tab
        .parts
        .iter()
        .map(|l| {
            let mut w = z_lambda(l);
            for &part in l.parts() {
                w *= (Q::one() - pow_i(qv, part as i64)) / (Q::one() - pow_i(tv, part as i64));
            }
            w
        })
        .collect();
    let mut gram = vec![vec![Q::zero(); k]; k];
    for a in 0..k {
        for b in 0..k {
            gram[a][b] = (0..k).map(|l| &tab.m_to_p[a][l] * &tab.m_to_p[b][l] * &weight[l]).sum();
        }
    }
    let form = |x: &[Q], y: &[Q]| -> Q {
        let mut s = Q::zero();
        for a in 0..k {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..k {
                if !y[b].is_zero() {
                    s += &x[a] * &y[b] * &gram[a][b];
                }
            }
        }
        s
    };
    let mut result: Vec<Vec<Q>> = vec![Vec::new(); k];
    // increasing lexicographic order extends dominance
    let mut done: Vec<usize> = Vec::new();
    for idx in (0..k).rev() {
        let mut v = vec![Q::zero(); k];
        v[idx] = Q::one();
        let e = v.clone();
        for &j in &done {
            let pj: &Vec<Q> = &result[j];
            let c = form(&e, pj) / form(pj, pj);
            for (x, y) in v.iter_mut().zip(pj) {
                *x -= &c * y;
            }
        }
        result[idx] = v;
        done.push(idx);
    }
    result
}

/// Numeric `H_mu` at `(q, t)` as a monomial-basis vector.
fn modified_numeric(tab: &Tables, mu: &Partition, qv: &Q, tv: &Q) -> Vec<Q> {
    let k = tab.parts.len();
    let tinv = tv.recip();
    let p = macdonald_p(tab, qv, &tinv);
    let mut c = Q::one();
    for (i, j) in mu.cells() {
        c *= Q::one() - pow_i(qv, mu.arm(i, j) as i64) * pow_i(&tinv, mu.leg(i, j) as i64 + 1);
    }
    let jm: Vec<Q> = p[tab.index(mu)].iter().map(|x| x * &c).collect();
    // to power sums, apply p_k -> p_k / (1 - t^{-k}), back to monomials
    let mut in_p = vec![Q::zero(); k];
    for a in 0..k {
        for l in 0..k {
            in_p[l] += &jm[a] * &tab.m_to_p[a][l];
        }
    }
    for (l, x) in in_p.iter_mut().enumerate() {
        for &part in tab.parts[l].parts() {
            *x /= Q::one() - pow_i(&tinv, part as i64);
        }
    }
    let scale = pow_i(tv, mu.n() as i64);
    (0..k)
        .map(|b| (0..k).map(|l| &in_p[l] * &tab.p_to_m[l][b]).sum::<Q>() * &scale)
        .collect()
}

fn degree_bound(n: u32) -> usize {
    (n * n.saturating_sub(1) / 2) as usize
}

/// `H_mu(x_1..x_J; q, t)` from the Gram-Schmidt construction.
pub fn macdonald_oracle(mu: &Partition, n_vars: usize) -> SymPoly {
    let n = mu.size();
    let tab = Tables::new(n);
    let d = degree_bound(n);
    let qs: Vec<Q> = PRIMES[..=d].iter().map(|&x| qi(x)).collect();
    let ts: Vec<Q> = PRIMES[d + 1..2 * d + 2].iter().map(|&x| qi(x)).collect();
    let values: Vec<Vec<Vec<Q>>> =
        qs.iter().map(|qv| ts.iter().map(|tv| modified_numeric(&tab, mu, qv, tv)).collect()).collect();
    let k = tab.parts.len();
    let mut out = SymPoly::zero(n_vars);
    let mut polys = Vec::with_capacity(k);
    for b in 0..k {
        // along t for each q, then along q for each t-degree
        let along_t: Vec<Vec<Q>> =
            (0..=d).map(|i| interpolate(&ts, &(0..=d).map(|j| values[i][j][b].clone()).collect::<Vec<_>>())).collect();
        let mut poly = BiPoly::zero();
        for tdeg in 0..=d {
            let col: Vec<Q> = (0..=d).map(|i| along_t[i][tdeg].clone()).collect();
            for (qdeg, c) in interpolate(&qs, &col).into_iter().enumerate() {
                poly.add_term(qdeg as u32, tdeg as u32, &c);
            }
        }
        polys.push(poly);
    }
    let (qc, tc) = (qi(PRIMES[2 * d + 2]), qi(PRIMES[2 * d + 3]));
    let check = modified_numeric(&tab, mu, &qc, &tc);
    for b in 0..k {
        assert_eq!(polys[b].eval(&qc, &tc), check[b], "interpolation check failed for {mu}");
    }
    for (b, poly) in polys.into_iter().enumerate() {
        out.add_monomial(tab.parts[b].clone(), poly);
    }
    out
}

/// Hall-Littlewood `P_lambda(x_1..x_J; t)`: Macdonald `P` at `q = 0`.
/// Coefficients are returned as polynomials in `t` (exponent pairs `(0, j)`).
pub fn hall_littlewood(lambda: &Partition, n_vars: usize) -> SymPoly {
    let n = lambda.size();
    let tab = Tables::new(n);
    let d = degree_bound(n);
    let ts: Vec<Q> = PRIMES[..=d].iter().map(|&x| qi(x)).collect();
    let idx = tab.index(lambda);
    let values: Vec<Vec<Q>> = ts.iter().map(|tv| macdonald_p(&tab, &Q::zero(), tv)[idx].clone()).collect();
    let tc = qi(PRIMES[d + 1]);
    let check = macdonald_p(&tab, &Q::zero(), &tc)[idx].clone();
    let mut out = SymPoly::zero(n_vars);
    for b in 0..tab.parts.len() {
        let coeffs = interpolate(&ts, &values.iter().map(|v| v[b].clone()).collect::<Vec<_>>());
        let mut poly = BiPoly::zero();
        for (j, c) in coeffs.into_iter().enumerate() {
            poly.add_term(0, j as u32, &c);
        }
        assert_eq!(poly.eval(&Q::zero(), &tc), check[b], "interpolation check failed for {lambda}");
        out.add_monomial(tab.parts[b].clone(), poly);
    }
    out
}

/// Structure constants `f^lambda_{mu nu}(t)` of `P_mu P_nu = sum f P_lambda`, at numeric `t`.
pub fn hall_littlewood_structure_constants(mu: &Partition, nu: &Partition, tv: &Q) -> BTreeMap<Partition, Q> {
    let n = mu.size() + nu.size();
    let (ta, tb, tn) = (Tables::new(mu.size()), Tables::new(nu.size()), Tables::new(n));
    let pa = macdonald_p(&ta, &Q::zero(), tv)[ta.index(mu)].clone();
    let pb = macdonald_p(&tb, &Q::zero(), tv)[tb.index(nu)].clone();
    let mut prod: BTreeMap<Partition, Q> = BTreeMap::new();
    for (i, x) in pa.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in pb.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            for (l, c) in monomial_product(&ta.parts[i], &tb.parts[j]) {
                *prod.entry(l).or_insert_with(Q::zero) += x * y * Q::from_integer(c.into());
            }
        }
    }
    let pn = macdonald_p(&tn, &Q::zero(), tv);
    let mut out = BTreeMap::new();
    // P_lambda = m_lambda + lower terms; peel off from the top
    for (idx, lambda) in tn.parts.iter().enumerate() {
        let c = prod.get(lambda).cloned().unwrap_or_else(Q::zero);
        if c.is_zero() {
            continue;
        }
        for (b, x) in pn[idx].iter().enumerate() {
            if !x.is_zero() {
                *prod.entry(tn.parts[b].clone()).or_insert_with(Q::zero) -= &c * x;
            }
        }
        out.insert(lambda.clone(), c);
    }
    debug_assert!(prod.values().all(|x| x.is_zero()));
    out
}

/// Predicted number of submodules `N` of a module of type `lambda` over a discrete
/// valuation ring with residue field of size `q`, with `N` of type `nu` and the
/// quotient of type `mu`: `q^{n(lambda) - n(mu) - n(nu)} f^lambda_{mu nu}(1/q)`.
pub fn hall_polynomial_prediction(lambda: &Partition, mu: &Partition, nu: &Partition, q: i64) -> Q {
    if lambda.size() != mu.size() + nu.size() {
        return Q::zero();
    }
    let qv = qi(q);
    let f = hall_littlewood_structure_constants(mu, nu, &qv.recip());
    let Some(c) = f.get(lambda) else { return Q::zero() };
    let e = lambda.n() as i64 - mu.n() as i64 - nu.n() as i64;
    c * pow_i(&qv, e)
}
