//! Ideals of finite colength in `F_q[x, y]`.
//!
//! A colength-`n` ideal `I` is the same as the triple `(X, Y, v)` given by
//! multiplication by `x`, `y` on `F_q[x, y]/I` and the class of `1`: commuting
//! operators with a cyclic vector, up to the free action of `GL(n, F_q)`.
//! So the number of ideals is `#{(X, Y, v)} / #GL(n, F_q)`.

use crate::gf::Gf;
use crate::linalg::{apply, decode, mul, rank};
use crate::{check_size, OracleError, Result};

fn is_cyclic(f: &Gf, x: &[Vec<u8>], y: &[Vec<u8>], v: &[u8]) -> bool {
    let n = v.len();
    // span of all words in X, Y applied to v, grown breadth-first
    let mut span: Vec<Vec<u8>> = vec![v.to_vec()];
    let mut frontier = vec![v.to_vec()];
    while !frontier.is_empty() && rank(f, &span) < n {
        let mut next = Vec::new();
        for w in &frontier {
            for m in [x, y] {
                let u = apply(f, m, w);
                let mut test = span.clone();
                test.push(u.clone());
                if rank(f, &test) > rank(f, &span) {
                    span.push(u.clone());
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    rank(f, &span) == n
}

/// Number of ideals of colength `n` in `F_q[x, y]`.
pub fn hilb_a2_bruteforce(n: usize, q: u32) -> Result<u64> {
    if n == 0 {
        return Ok(1);
    }
    if n > 3 {
        return Err(OracleError::Unsupported(format!("colength {n} (at most 3)")));
    }
    let f = Gf::new(q)?;
    let n_mats = (q as u128).pow((n * n) as u32);
    check_size("commuting pairs with cyclic vectors", n_mats * n_mats * (q as u128).pow(n as u32))?;
    let mats: Vec<_> = (0..n_mats as u64).map(|i| decode(q, n, i)).collect();
    let gl = mats.iter().filter(|m| rank(&f, m) == n).count() as u64;
    let vectors: Vec<Vec<u8>> = (0..(q as u64).pow(n as u32))
        .map(|mut i| {
            (0..n)
                .map(|_| {
                    let d = (i % q as u64) as u8;
                    i /= q as u64;
                    d
                })
                .collect()
        })
        .collect();
    let mut triples = 0u64;
    for x in &mats {
        for y in &mats {
            if mul(&f, x, y) != mul(&f, y, x) {
                continue;
            }
            triples += vectors.iter().filter(|v| is_cyclic(&f, x, y, v)).count() as u64;
        }
    }
    assert_eq!(triples % gl, 0, "GL(n) acts freely on cyclic triples");
    Ok(triples / gl)
}
