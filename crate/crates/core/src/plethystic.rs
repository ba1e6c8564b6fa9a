//! Plethystic calculus: Adams operations, `Exp` and `Log`.
//!
//! `Exp(f) = exp(sum_k psi_k(f) / k)` and `Log(f) = sum_k mu(k)/k psi_k(log f)`.
//! Since every exponent is multiplied by `k`, the sums stop at the first `k`
//! for which `psi_k` clips to zero.

use crate::error::{Error, Result};
use crate::graded_series::{Coeff, GradedSeries};
use crate::rational::Q;

/// Möbius function.
pub fn mobius(n: u32) -> i32 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn adams_series<C: Coeff>(f: &GradedSeries<C>, k: u32) -> GradedSeries<C> {
    f.adams(k)
}

pub fn pleth_exp<C: Coeff>(f: &GradedSeries<C>) -> Result<GradedSeries<C>> {
    if !f.constant_term().is_zero() {
        return Err(Error::ExpAugmentation);
    }
    let mut acc = GradedSeries::zero(f.trunc().clone());
    for k in 1.. {
        let p = f.adams(k);
        if p.is_zero() {
            break;
        }
        acc = acc.add(&p.scale(&Q::new(1.into(), (k as i64).into())));
    }
    acc.exp()
}

pub fn pleth_log<C: Coeff>(f: &GradedSeries<C>) -> Result<GradedSeries<C>> {
    let l = f.log()?;
    let mut acc = GradedSeries::zero(f.trunc().clone());
    for k in 1.. {
        let p = l.adams(k);
        if p.is_zero() {
            break;
        }
        let m = mobius(k);
        if m != 0 {
            acc = acc.add(&p.scale(&Q::new(m.into(), (k as i64).into())));
        }
    }
    Ok(acc)
}
