//! Cyclotomic polynomials in `L`, used as the canonical denominator factors.
//!
//! Every denominator produced by the engine is a product of `1 - L^m`, and
//! `L^m - 1 = prod_{d | m} Phi_d(L)`. Cyclotomic factors are pairwise coprime,
//! which makes reduced fractions unique.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

use super::laurent::Laurent;

/// Integer coefficients of `Phi_d(x)`, ascending.
pub fn cyclotomic_coeffs(d: u32) -> Vec<i64> {
    assert!(d >= 1);
    // x^d - 1
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            num = div_int_poly(&num, &cyclotomic_coeffs(e));
        }
    }
    num
}

fn div_int_poly(a: &[i64], b: &[i64]) -> Vec<i64> {
    // b is monic
    let mut rem = a.to_vec();
    let (n, m) = (a.len(), b.len());
    let mut q = vec![0i64; n - m + 1];
    for k in (0..=n - m).rev() {
        let f = rem[k + m - 1];
        q[k] = f;
        for j in 0..m {
            rem[k + j] -= f * b[j];
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// `Phi_d(L)` as a Laurent polynomial in `s = L^{1/2}`, memoized.
pub(crate) fn cyclotomic_in_s(d: u32) -> Arc<Laurent> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Laurent>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(l) = cache.read().unwrap().get(&d) {
        return l.clone();
    }
    let coeffs = cyclotomic_coeffs(d);
    let mut spread = vec![0i64; 2 * (coeffs.len() - 1) + 1];
    for (i, c) in coeffs.iter().enumerate() {
        spread[2 * i] = *c;
    }
    let l = Arc::new(Laurent::from_ints(0, &spread));
    cache.write().unwrap().insert(d, l.clone());
    l
}

/// Indices `n` with `Phi_d(x^m) = prod Phi_n(x)`.
pub fn cyclotomic_adams(d: u32, m: u32) -> Vec<u32> {
    let dm = d * m;
    (1..=dm).filter(|n| dm.is_multiple_of(*n) && n / n.gcd(&m) == d).collect()
}

/// Factorization of `L^m - 1` into cyclotomic indices.
pub fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// Product of `Phi_d(L)^e` as a Laurent polynomial in `s`.
pub(crate) fn cyclotomic_product(factors: &BTreeMap<u32, u32>) -> Laurent {
    let mut acc = Laurent::from_ints(0, &[1]);
    for (&d, &e) in factors {
        let p = cyclotomic_in_s(d);
        for _ in 0..e {
            acc = acc.mul(&p);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_coeffs(1), vec![-1, 1]);
        assert_eq!(cyclotomic_coeffs(2), vec![1, 1]);
        assert_eq!(cyclotomic_coeffs(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_coeffs(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_coeffs(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_coeffs(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn adams_splitting_preserves_degree() {
        for d in 1..13 {
            for m in 1..7 {
                let parts = cyclotomic_adams(d, m);
                let deg: u32 = parts.iter().map(|&n| euler_phi(n)).sum();
                assert_eq!(deg, euler_phi(d) * m, "d={d} m={m}");
            }
        }
        assert_eq!(cyclotomic_adams(1, 2), vec![1, 2]);
        assert_eq!(cyclotomic_adams(2, 2), vec![4]);
    }
}
