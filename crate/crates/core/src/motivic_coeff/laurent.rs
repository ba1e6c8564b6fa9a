//! Dense Laurent polynomials in `s = L^{1/2}` with rational coefficients.

use num_traits::Zero;

use crate::rational::Q;

/// `sum_i c[i] * s^(low + i)`.
///
/// Canonical: either `c` is empty (zero) or both `c[0]` and `c[last]` are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Laurent {
    low: i32,
    c: Vec<Q>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { low: 0, c: Vec::new() }
    }

    pub fn monomial(exp: i32, coeff: Q) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Laurent { low: exp, c: vec![coeff] }
    }

    /// Builds from integer coefficients of an ordinary polynomial in `s`.
    pub fn from_ints(low: i32, coeffs: &[i64]) -> Self {
        let mut l = Laurent { low, c: coeffs.iter().map(|&x| Q::from_integer(x.into())).collect() };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.low += lead as i32;
        }
        if self.c.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn low(&self) -> i32 {
        self.low
    }

    pub fn high(&self) -> i32 {
        self.low + self.c.len() as i32 - 1
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn coeff(&self, exp: i32) -> Option<&Q> {
        let i = exp - self.low;
        if i < 0 {
            return None;
        }
        self.c.get(i as usize).filter(|x| !x.is_zero())
    }

    /// Nonzero terms as `(exponent of s, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Q)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(i, x)| (self.low + i as i32, x))
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let mut c = vec![Q::zero(); (high - low + 1) as usize];
        for (i, x) in self.c.iter().enumerate() {
            c[(self.low - low) as usize + i] += x;
        }
        for (i, x) in other.c.iter().enumerate() {
            c[(other.low - low) as usize + i] += x;
        }
        let mut l = Laurent { low, c };
        l.normalize();
        l
    }

    pub fn add_assign(&mut self, other: &Laurent) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        if other.low >= self.low && other.high() <= self.high() {
            let off = (other.low - self.low) as usize;
            for (i, x) in other.c.iter().enumerate() {
                self.c[off + i] += x;
            }
            self.normalize();
        } else {
            *self = self.add(other);
        }
    }

    pub fn neg(&self) -> Laurent {
        Laurent { low: self.low, c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, k: &Q) -> Laurent {
        if k.is_zero() {
            return Laurent::zero();
        }
        Laurent { low: self.low, c: self.c.iter().map(|x| x * k).collect() }
    }

    pub fn shift(&self, k: i32) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent { low: self.low + k, c: self.c.clone() }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        let mut l = Laurent { low: self.low + other.low, c };
        l.normalize();
        l
    }

    /// `s -> s^k`.
    pub fn adams(&self, k: u32) -> Laurent {
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let k = k as usize;
        let mut c = vec![Q::zero(); (self.c.len() - 1) * k + 1];
        for (i, x) in self.c.iter().enumerate() {
            c[i * k] = x.clone();
        }
        Laurent { low: self.low * k as i32, c }
    }

    /// Exact quotient by a polynomial `divisor` whose constant and leading
    /// coefficients are nonzero; `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Laurent) -> Option<Laurent> {
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        debug_assert!(!divisor.is_zero());
        let n = self.c.len();
        let m = divisor.c.len();
        if n < m {
            return None;
        }
        let lead = divisor.c.last().unwrap();
        let monic = num_traits::One::is_one(lead);
        let mut rem = self.c.clone();
        let mut quot = vec![Q::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &rem[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let f = if monic { top.clone() } else { top / lead };
            for (j, d) in divisor.c.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &f * d;
                }
            }
            quot[k] = f;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut q = Laurent { low: self.low - divisor.low, c: quot };
        q.normalize();
        Some(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn division_is_exact_or_none() {
        // (s^2 - 1)(s^2 + 1) = s^4 - 1
        let a = Laurent::from_ints(0, &[-1, 0, 0, 0, 1]);
        let b = Laurent::from_ints(0, &[-1, 0, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), Laurent::from_ints(0, &[1, 0, 1]));
        let c = Laurent::from_ints(0, &[1, 1]);
        assert!(Laurent::from_ints(0, &[1, 0, 1]).div_exact(&c).is_none());
    }

    #[test]
    fn adams_spreads_exponents() {
        let a = Laurent::from_ints(-1, &[1, 2]);
        let b = a.adams(3);
        assert_eq!(b.low(), -3);
        assert_eq!(b.coeff(0), Some(&q(2)));
        assert_eq!(b.coeff(-3), Some(&q(1)));
    }
}
