//! Modified Macdonald polynomials by the combinatorial inv/maj formula.
//!
//! `H_mu = sum_sigma q^{inv(sigma)} t^{maj(sigma)} x^sigma` over fillings of the
//! diagram of `mu`, drawn with rows stacked upward (row 0 at the bottom):
//!
//! - a descent is a cell whose entry exceeds the entry directly below it;
//!   `maj` adds `leg + 1` per descent, `leg` counting cells above;
//! - cells attack when they share a row, or sit in adjacent rows with the upper
//!   cell strictly to the right; an inversion is an attacking pair read
//!   top-to-bottom, left-to-right with the earlier entry larger;
//!   `inv` is the number of inversions minus the arms of all descents.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::bipoly::BiPoly;
use super::partition::Partition;
use super::sympoly::SymPoly;
use crate::rational::q;

struct Diagram {
    /// cells in reading order: (row from bottom, column)
    cells: Vec<(usize, usize)>,
    /// index of the cell directly below, if any
    below: Vec<Option<usize>>,
    arm: Vec<u32>,
    leg: Vec<u32>,
    attacks: Vec<(usize, usize)>,
}

impl Diagram {
    fn new(mu: &Partition) -> Self {
        let rows: Vec<usize> = mu.parts().iter().map(|&p| p as usize).collect();
        let mut cells = Vec::new();
        for r in (0..rows.len()).rev() {
            for c in 0..rows[r] {
                cells.push((r, c));
            }
        }
        let pos = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c));
        let below = cells.iter().map(|&(r, c)| if r == 0 { None } else { pos(r - 1, c) }).collect();
        let arm = cells.iter().map(|&(r, c)| (rows[r] - c - 1) as u32).collect();
        let leg = cells.iter().map(|&(r, c)| rows[r + 1..].iter().filter(|&&l| l > c).count() as u32).collect();
        let mut attacks = Vec::new();
        for a in 0..cells.len() {
            for b in a + 1..cells.len() {
                let ((ra, ca), (rb, cb)) = (cells[a], cells[b]);
                // a precedes b in reading order, so ra >= rb
                if ra == rb || (ra == rb + 1 && ca > cb) {
                    attacks.push((a, b));
                }
            }
        }
        Diagram { cells, below, arm, leg, attacks }
    }

    fn stats(&self, fill: &[u32]) -> (u32, u32) {
        let mut maj = 0;
        let mut arm_sum = 0;
        for (i, b) in self.below.iter().enumerate() {
            if let Some(b) = b {
                if fill[i] > fill[*b] {
                    maj += self.leg[i] + 1;
                    arm_sum += self.arm[i];
                }
            }
        }
        let inv = self.attacks.iter().filter(|&&(a, b)| fill[a] > fill[b]).count() as u32;
        (inv - arm_sum, maj)
    }
}

/// Coefficient of `m_lambda` in `H_mu`: fillings with content `lambda`.
fn monomial_coefficient(d: &Diagram, lambda: &Partition) -> BiPoly {
    let n = d.cells.len();
    let mut content: Vec<u32> = lambda.parts().to_vec();
    let mut fill = vec![0u32; n];
    let mut acc = BiPoly::zero();
    fn go(d: &Diagram, i: usize, fill: &mut Vec<u32>, content: &mut Vec<u32>, acc: &mut BiPoly) {
        if i == fill.len() {
            let (inv, maj) = d.stats(fill);
            acc.add_term(inv, maj, &q(1));
            return;
        }
        for v in 0..content.len() {
            if content[v] > 0 {
                content[v] -= 1;
                fill[i] = v as u32 + 1;
                go(d, i + 1, fill, content, acc);
                content[v] += 1;
            }
        }
    }
    go(d, 0, &mut fill, &mut content, &mut acc);
    acc
}

/// `H_mu(x_1..x_J; q, t)`, memoized.
pub fn modified_macdonald(mu: &Partition, n_vars: usize) -> Arc<SymPoly> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, usize), Arc<SymPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (mu.clone(), n_vars);
    if let Some(h) = cache.read().unwrap().get(&key) {
        return h.clone();
    }
    let d = Diagram::new(mu);
    let mut out = SymPoly::zero(n_vars);
    for lambda in Partition::all(mu.size()) {
        if lambda.len() <= n_vars {
            out.add_monomial(lambda.clone(), monomial_coefficient(&d, &lambda));
        }
    }
    let out = Arc::new(out);
    cache.write().unwrap().insert(key, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::bipoly::BiPoly;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn degree_one() {
        let h = modified_macdonald(&p(&[1]), 3);
        assert_eq!(h.monomial_coeff(&p(&[1])), BiPoly::constant(q(1)));
        assert_eq!(h.monomial_coeffs().len(), 1);
    }

    #[test]
    fn degree_two_schur() {
        let h = modified_macdonald(&p(&[2]), 2).schur_coeffs();
        assert_eq!(h[&p(&[2])], BiPoly::constant(q(1)));
        assert_eq!(h[&p(&[1, 1])], BiPoly::monomial(1, 0, q(1)));
        let h = modified_macdonald(&p(&[1, 1]), 2).schur_coeffs();
        assert_eq!(h[&p(&[1, 1])], BiPoly::monomial(0, 1, q(1)));
    }

    #[test]
    fn hook_three() {
        // H_{21} = s_3 + (q + t) s_21 + q t s_111
        let h = modified_macdonald(&p(&[2, 1]), 3).schur_coeffs();
        assert_eq!(h[&p(&[3])], BiPoly::constant(q(1)));
        assert_eq!(h[&p(&[2, 1])], BiPoly::monomial(1, 0, q(1)).add(&BiPoly::monomial(0, 1, q(1))));
        assert_eq!(h[&p(&[1, 1, 1])], BiPoly::monomial(1, 1, q(1)));
    }
}
