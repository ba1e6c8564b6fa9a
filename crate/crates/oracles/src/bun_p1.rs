//! Rank-2 bundles on the projective line, counted by splitting type.
//!
//! Every rank-2 bundle of degree `d` is `O(a) + O(b)` with `a >= b`, `a + b = d`.
//! With `k = a - b`, the automorphism group has order `#GL(2, F_q)` when `k = 0`
//! and `(q-1)^2 q^{k+1}` when `k > 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{OracleError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCount {
    /// `sum 1/#Aut` over splitting types with `k <= k_max`.
    pub partial_sum: BigRational,
    /// Upper bound for the omitted terms.
    pub tail_bound: BigRational,
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `sum_E 1/#Aut(E)` over rank-2 bundles of degree `d` with `k <= k_max`.
pub fn bun_p1_weighted_count(d: i64, q: u32, k_max: u32) -> Result<WeightedCount> {
    if q < 2 {
        return Err(OracleError::Unsupported(format!("q = {q}")));
    }
    if !(2..=4096).contains(&k_max) {
        return Err(OracleError::Unsupported(format!("k_max = {k_max} (need 2..=4096)")));
    }
    let qq = int(q as u64);
    let gl2 = (&qq * &qq - BigRational::one()) * (&qq * &qq - &qq);
    let aut = |k: u32| -> BigRational {
        if k == 0 {
            gl2.clone()
        } else {
            (&qq - BigRational::one()).pow(2) * qq.pow(k as i32 + 1)
        }
    };
    let parity = d.rem_euclid(2) as u32;
    let mut partial = BigRational::zero();
    let mut k = parity;
    while k <= k_max {
        partial += aut(k).recip();
        k += 2;
    }
    // first omitted term times 1/(1 - q^{-2})
    let first = aut(k).recip();
    let ratio = BigRational::one() - (&qq * &qq).recip();
    Ok(WeightedCount { partial_sum: partial, tail_bound: first / ratio })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn converges_to_one_third_at_q2() {
        for d in [0, 1, -3, 4] {
            let w = bun_p1_weighted_count(d, 2, 40).unwrap();
            let gap = frac(1, 3) - &w.partial_sum;
            assert!(gap >= BigRational::zero() && gap <= w.tail_bound, "d = {d}");
        }
    }

    #[test]
    fn tail_is_exact_geometric_series() {
        let w = bun_p1_weighted_count(0, 3, 12).unwrap();
        let limit = frac(1, 48) + frac(1, 108) / (BigRational::one() - frac(1, 9));
        assert_eq!(&w.partial_sum + &w.tail_bound, limit);
    }
}
