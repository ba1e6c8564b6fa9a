//! Change-of-basis tables and exact linear algebra for small degrees.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::partition::Partition;
use crate::rational::Q;

/// Coefficient of `x^mu` (exponent vector `mu`) in `p_lambda`.
fn power_sum_monomial_coeff(lambda: &Partition, mu: &Partition) -> u64 {
    fn go(parts: &[u32], rem: &mut Vec<u32>) -> u64 {
        match parts.split_first() {
            None => rem.iter().all(|&r| r == 0) as u64,
            Some((&p, rest)) => {
                let mut total = 0;
                for i in 0..rem.len() {
                    if rem[i] >= p {
                        rem[i] -= p;
                        total += go(rest, rem);
                        rem[i] += p;
                    }
                }
                total
            }
        }
    }
    go(lambda.parts(), &mut mu.parts().to_vec())
}

/// `p_lambda = sum_mu M[lambda][mu] m_mu` over partitions of `n` in the order of [`Partition::all`].
pub fn power_to_monomial(n: u32) -> (Vec<Partition>, Vec<Vec<Q>>) {
    let ps = Partition::all(n);
    let m = ps
        .iter()
        .map(|l| ps.iter().map(|mu| Q::from_integer(power_sum_monomial_coeff(l, mu).into())).collect())
        .collect();
    (ps, m)
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_lambda(l: &Partition) -> Q {
    let mut z = Q::one();
    for (v, m) in l.multiplicities() {
        for k in 1..=m {
            z *= Q::from_integer((v as i64 * k as i64).into());
        }
    }
    z
}

/// Inverse of a square matrix over `Q`; panics if singular.
pub fn invert(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular matrix");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Distinct rearrangements of `parts` padded with zeros to length `n`.
pub fn distinct_permutations(parts: &[u32], n: usize) -> Vec<Vec<u32>> {
    if parts.len() > n {
        return Vec::new();
    }
    let mut v: Vec<u32> = parts.to_vec();
    v.resize(n, 0);
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// `m_a * m_b` in the monomial basis.
pub fn monomial_product(a: &Partition, b: &Partition) -> BTreeMap<Partition, i64> {
    let n = (a.size() + b.size()) as usize;
    let ea = distinct_permutations(a.parts(), n);
    let eb = distinct_permutations(b.parts(), n);
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    for x in &ea {
        for y in &eb {
            let s: Vec<u32> = x.iter().zip(y).map(|(u, v)| u + v).collect();
            // count only weakly decreasing exponent vectors: the coefficient of m_lambda
            if s.windows(2).all(|w| w[0] >= w[1]) {
                *out.entry(Partition::from_unsorted(s)).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Kostka number: semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut content = mu.parts().to_vec();
    fn go(shape: &[usize], grid: &mut Vec<Vec<u32>>, content: &mut Vec<u32>, cell: usize, cells: &[(usize, usize)]) -> u64 {
        if cell == cells.len() {
            return 1;
        }
        let (r, c) = cells[cell];
        let mut total = 0;
        let lo = if c > 0 { grid[r][c - 1] } else { 1 };
        for v in lo..=content.len() as u32 {
            if content[v as usize - 1] == 0 {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            content[v as usize - 1] -= 1;
            total += go(shape, grid, content, cell + 1, cells);
            content[v as usize - 1] += 1;
            grid[r][c] = 0;
        }
        total
    }
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
    go(&shape, &mut grid, &mut content, 0, &cells)
}

/// Lagrange interpolation: coefficients (ascending) of the polynomial through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Q], ys: &[Q]) -> Vec<Q> {
    let n = xs.len();
    let mut coeffs = vec![Q::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![Q::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xs[j];
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let f = &ys[i] / denom;
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += b * &f;
        }
    }
    coeffs
}
