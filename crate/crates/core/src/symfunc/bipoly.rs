use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, Q};

/// Polynomial in two parameters `q, t` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Q>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(q exponent, t exponent) -> coefficient`.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Q {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c);
        }
        out
    }

    pub fn scale(&self, k: &Q) -> BiPoly {
        if k.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                out.add_term(a + c, b + d, &(x * y));
            }
        }
        out
    }

    /// Exchanges `q` and `t`.
    pub fn swap(&self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect() }
    }

    pub fn eval(&self, q: &Q, t: &Q) -> Q {
        self.terms
            .iter()
            .map(|((i, j), c)| c * num_traits::pow(q.clone(), *i as usize) * num_traits::pow(t.clone(), *j as usize))
            .sum()
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let pw = |x: &str, e: u32| match e {
            0 => None,
            1 => Some(x.to_string()),
            e => Some(format!("{x}^{e}")),
        };
        for (n, ((i, j), c)) in self.terms.iter().enumerate() {
            let vars: Vec<String> = [pw("q", *i), pw("t", *j)].into_iter().flatten().collect();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = c.abs();
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn arithmetic_and_display() {
        let a = BiPoly::constant(q(1)).add(&BiPoly::monomial(1, 0, q(1)));
        let b = BiPoly::constant(q(1)).add(&BiPoly::monomial(0, 1, q(-1)));
        let c = a.mul(&b);
        assert_eq!(c.to_string(), "1 - t + q - q*t");
        assert_eq!(c.eval(&q(2), &q(3)), q(-6));
        assert_eq!(c.swap().coeff(0, 1), q(1));
    }
}
