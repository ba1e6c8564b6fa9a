//! Dense matrices over a [`Gf`].

use crate::gf::Gf;

pub type Mat = Vec<Vec<u8>>;

pub fn zero(n: usize) -> Mat {
    vec![vec![0; n]; n]
}

pub fn mul(f: &Gf, a: &Mat, b: &Mat) -> Mat {
    let (n, m, k) = (a.len(), b.first().map_or(0, |r| r.len()), b.len());
    let mut out = vec![vec![0u8; m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = f.add(out[i][j], f.mul(x, b[l][j]));
            }
        }
    }
    out
}

/// `a v` for a column vector `v`.
pub fn apply(f: &Gf, a: &[Vec<u8>], v: &[u8]) -> Vec<u8> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (x, y)| f.add(acc, f.mul(*x, *y))))
        .collect()
}

/// Rank of a list of row vectors.
pub fn rank(f: &Gf, rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = f.inv(m[r][c]);
        let pivot: Vec<u8> = m[r].iter().map(|x| f.mul(*x, inv)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let k = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(k, *y));
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

/// All `n x n` matrices, as an index-to-matrix decoder.
pub fn decode(q: u32, n: usize, mut idx: u64) -> Mat {
    let mut m = zero(n);
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = (idx % q as u64) as u8;
            idx /= q as u64;
        }
    }
    m
}

/// Jordan type of a nilpotent operator from the ranks of its powers,
/// as a partition in decreasing order.
pub fn jordan_type(ranks: &[usize]) -> Vec<u32> {
    // ranks[k] = rank of N^k, ranks[0] = dimension
    let mut at_least: Vec<usize> = Vec::new();
    for k in 1..ranks.len() {
        at_least.push(ranks[k - 1] - ranks[k]);
    }
    // at_least[k-1] = number of blocks of size >= k; conjugate to get the block sizes
    let mut parts = Vec::new();
    for (k, &c) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..c - next {
            parts.push(k as u32 + 1);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Bases (as row vectors) of all `k`-dimensional subspaces of `F_q^n`, in reduced echelon form.
pub fn subspaces(q: u32, n: usize, k: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            choose(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    choose(n, k, 0, &mut Vec::new(), &mut pivots);
    for piv in pivots {
        // free positions: row r, column c > piv[r], c not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| ((piv[r] + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = (q as u64).pow(free.len() as u32);
        for mut idx in 0..total {
            let mut rows = vec![vec![0u8; n]; k];
            for (r, &p) in piv.iter().enumerate() {
                rows[r][p] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = (idx % q as u64) as u8;
                idx /= q as u64;
            }
            out.push(rows);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        // [4 choose 2]_2 = 35, [3 choose 1]_3 = 13
        assert_eq!(subspaces(2, 4, 2).len(), 35);
        assert_eq!(subspaces(3, 3, 1).len(), 13);
        assert_eq!(subspaces(4, 2, 1).len(), 5);
    }

    #[test]
    fn jordan_types_from_ranks() {
        assert_eq!(jordan_type(&[3, 1, 0]), vec![2, 1]);
        assert_eq!(jordan_type(&[2, 0]), vec![1, 1]);
        assert_eq!(jordan_type(&[3, 2, 1, 0]), vec![3]);
    }
}
