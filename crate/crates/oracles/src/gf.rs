//! Finite fields of order 2, 3, 4 and 5 by lookup tables.

use crate::{OracleError, Result};

/// Elements are `0..q`; for `q = 4` the element `2a + b` stands for `a x + b` in `F_2[x]/(x^2+x+1)`.
#[derive(Clone, Debug)]
pub struct Gf {
    q: u8,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl Gf {
    pub fn new(q: u32) -> Result<Self> {
        let (add, mul): (Vec<Vec<u8>>, Vec<Vec<u8>>) = match q {
            2 | 3 | 5 => {
                let q = q as u8;
                (
                    (0..q).map(|a| (0..q).map(|b| (a + b) % q).collect()).collect(),
                    (0..q).map(|a| (0..q).map(|b| (a * b) % q).collect()).collect(),
                )
            }
            4 => {
                let mul = |a: u8, b: u8| -> u8 {
                    // carry-less product, then reduce x^2 = x + 1
                    let mut p = 0u8;
                    for i in 0..2 {
                        if b >> i & 1 == 1 {
                            p ^= a << i;
                        }
                    }
                    if p & 4 != 0 {
                        p ^= 0b111;
                    }
                    p
                };
                (
                    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
                    (0..4).map(|a| (0..4).map(|b| mul(a, b)).collect()).collect(),
                )
            }
            _ => return Err(OracleError::Unsupported(format!("field of order {q}"))),
        };
        let n = q as usize;
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a][b] == 0).unwrap() as u8).collect();
        let inv = (0..n).map(|a| if a == 0 { 0 } else { (1..n).find(|&b| mul[a][b] == 1).unwrap() as u8 }).collect();
        Ok(Gf { q: q as u8, add, mul, neg, inv })
    }

    pub fn order(&self) -> u32 {
        self.q as u32
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize][b as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize][b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5] {
            let f = Gf::new(q).unwrap();
            let n = q as u8;
            for a in 0..n {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..n {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..n {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
        assert!(Gf::new(6).is_err());
    }
}
