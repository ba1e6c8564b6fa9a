//! Hall numbers of finite modules over `F_q[[t]]`.
//!
//! `M_lambda = sum_i F_q[t]/t^{lambda_i}` is an `F_q`-space with the nilpotent
//! operator `t`. Submodules are the `t`-stable subspaces; types of a submodule
//! and its quotient are read off from the ranks of powers of `t`.

use crate::gf::Gf;
use crate::linalg::{apply, jordan_type, rank, subspaces, zero, Mat};
use crate::{check_size, OracleError, Result};

fn canonical(lambda: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = lambda.iter().copied().filter(|&p| p > 0).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Matrix of `t` on `M_lambda`, acting on column vectors.
fn shift_operator(lambda: &[u32]) -> Mat {
    let n: usize = lambda.iter().map(|&p| p as usize).sum();
    let mut t = zero(n);
    let mut at = 0;
    for &p in lambda {
        // basis e_0 .. e_{p-1} with t e_i = e_{i+1}
        for i in 0..p as usize - 1 {
            t[at + i + 1][at + i] = 1;
        }
        at += p as usize;
    }
    t
}

/// `g^lambda_{mu nu}(q)`: submodules `N` of `M_lambda` with `N ~ M_nu` and `M_lambda/N ~ M_mu`.
pub fn hall_numbers_bruteforce(lambda: &[u32], mu: &[u32], nu: &[u32], q: u32) -> Result<u64> {
    let (lambda, mu, nu) = (canonical(lambda), canonical(mu), canonical(nu));
    let n: usize = lambda.iter().map(|&p| p as usize).sum();
    if n > 6 {
        return Err(OracleError::Unsupported(format!("|lambda| = {n} (at most 6)")));
    }
    let k: usize = nu.iter().map(|&p| p as usize).sum();
    if k + mu.iter().map(|&p| p as usize).sum::<usize>() != n {
        return Ok(0);
    }
    let f = Gf::new(q)?;
    check_size("subspace enumeration", (q as u128).pow((k * (n - k)) as u32) * 64)?;
    let t = shift_operator(&lambda);
    let images = |rows: &[Vec<u8>]| -> Vec<Vec<u8>> { rows.iter().map(|r| apply(&f, &t, r)).collect() };
    let full: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u8).collect()).collect();
    let mut count = 0;
    for basis in subspaces(q, n, k) {
        let tn = images(&basis);
        let mut joined = basis.clone();
        joined.extend(tn.iter().cloned());
        if rank(&f, &joined) != k {
            continue;
        }
        // ranks of t^j on N, and on M/N as dim(t^j M + N) - dim N
        let mut sub_ranks = vec![k];
        let mut quo_ranks = vec![n - k];
        let mut cur_n = basis.clone();
        let mut cur_m = full.clone();
        for _ in 0..n {
            cur_n = images(&cur_n);
            cur_m = images(&cur_m);
            sub_ranks.push(rank(&f, &cur_n));
            let mut s = cur_m.clone();
            s.extend(basis.iter().cloned());
            quo_ranks.push(rank(&f, &s) - k);
        }
        if jordan_type(&sub_ranks) == nu && jordan_type(&quo_ranks) == mu {
            count += 1;
        }
    }
    Ok(count)
}
