//! Nilpotent matrices by Jordan type.

use std::collections::BTreeMap;

use crate::gf::Gf;
use crate::linalg::{decode, jordan_type, mul, rank};
use crate::{check_size, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentCount {
    /// Jordan type (decreasing block sizes) to number of matrices.
    pub by_type: BTreeMap<Vec<u32>, u64>,
    pub total: u64,
    /// `#GL(d, F_q)`, so that `total / gl_order` is the stack count.
    pub gl_order: u64,
}

/// Enumerates all `d x d` matrices over `F_q` and sorts the nilpotent ones by Jordan type.
pub fn count_nilpotent_types(d: usize, q: u32) -> Result<NilpotentCount> {
    let f = Gf::new(q)?;
    let n_mats = (q as u128).pow((d * d) as u32);
    check_size("nilpotent enumeration", n_mats)?;
    let mut by_type = BTreeMap::new();
    let mut total = 0;
    let mut gl_order = 0;
    for idx in 0..n_mats as u64 {
        let m = decode(q, d, idx);
        let mut ranks = vec![d];
        let mut p = m.clone();
        loop {
            let r = rank(&f, &p);
            if r == *ranks.last().unwrap() {
                break;
            }
            ranks.push(r);
            if r == 0 {
                break;
            }
            p = mul(&f, &p, &m);
        }
        if ranks.len() == 1 {
            gl_order += 1;
        }
        if *ranks.last().unwrap() == 0 {
            total += 1;
            *by_type.entry(jordan_type(&ranks)).or_insert(0) += 1;
        }
    }
    Ok(NilpotentCount { by_type, total, gl_order })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_over_f2() {
        let c = count_nilpotent_types(2, 2).unwrap();
        assert_eq!(c.total, 4);
        assert_eq!(c.by_type[&vec![1, 1]], 1);
        assert_eq!(c.by_type[&vec![2]], 3);
        assert_eq!(c.gl_order, 6);
    }

    #[test]
    fn one_by_one() {
        let c = count_nilpotent_types(1, 3).unwrap();
        assert_eq!(c.total, 1);
        assert_eq!(c.by_type.keys().collect::<Vec<_>>(), vec![&vec![1]]);
    }

    #[test]
    fn size_limit() {
        assert!(count_nilpotent_types(5, 5).is_err());
    }
}
