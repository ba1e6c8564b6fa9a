use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// An integer partition `mu_1 >= mu_2 >= ... > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

/// Combinatorial statistics of a partition. Boxes are listed row by row,
/// `arm` counting cells to the right and `leg` cells below (English convention).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub size: u32,
    pub conjugate: Vec<u32>,
    /// `(arm, leg)` per box.
    pub arm_leg: Vec<(u32, u32)>,
    /// `n(mu') = sum_i (i-1) mu'_i`.
    pub n_conj: u32,
    /// `<mu, mu> = sum_i (mu'_i)^2`.
    pub mu_mu: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("partition parts must be weakly decreasing: {parts:?}")));
        }
        let parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        Ok(Partition(parts))
    }

    /// Sorts the parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i as u32, j)))
    }

    pub fn arm(&self, row: u32, col: u32) -> u32 {
        self.0[row as usize] - col - 1
    }

    pub fn leg(&self, row: u32, col: u32) -> u32 {
        self.0.iter().skip(row as usize + 1).filter(|&&p| p > col).count() as u32
    }

    /// `n(mu) = sum_i (i-1) mu_i`.
    pub fn n(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    pub fn n_conj(&self) -> u32 {
        self.conjugate().n()
    }

    pub fn mu_mu(&self) -> u32 {
        self.conjugate().0.iter().map(|&c| c * c).sum()
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            size: self.size(),
            conjugate: self.conjugate().0,
            arm_leg: self.cells().map(|(i, j)| (self.arm(i, j), self.leg(i, j))).collect(),
            n_conj: self.n_conj(),
            mu_mu: self.mu_mu(),
        }
    }

    /// Dominance order `self >= other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicities `m_i` of each part size `i`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, by size.
    pub fn up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_row() {
        let s = p(&[2]).stats();
        assert_eq!(s.conjugate, vec![1, 1]);
        assert_eq!(s.arm_leg, vec![(1, 0), (0, 0)]);
        assert_eq!(s.n_conj, 1);
        assert_eq!(s.mu_mu, 2);
    }

    #[test]
    fn one_column() {
        let s = p(&[1, 1]).stats();
        assert_eq!(s.conjugate, vec![2]);
        assert_eq!(s.n_conj, 0);
        assert_eq!(s.mu_mu, 4);
        assert_eq!(p(&[1]).stats().arm_leg, vec![(0, 0)]);
    }

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(Partition::all(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn dominance() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
    }
}
