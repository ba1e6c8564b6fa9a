use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::basis::{distinct_permutations, kostka};
use super::bipoly::BiPoly;
use super::partition::Partition;
use crate::rational::Q;

/// Symmetric polynomial in `n_vars` variables with coefficients in `Q[q, t]`,
/// stored in the monomial basis `m_lambda` (only `len(lambda) <= n_vars`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    n_vars: usize,
    coeffs: BTreeMap<Partition, BiPoly>,
}

impl SymPoly {
    pub fn zero(n_vars: usize) -> Self {
        SymPoly { n_vars, coeffs: BTreeMap::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn add_monomial(&mut self, lambda: Partition, c: BiPoly) {
        if lambda.len() > self.n_vars || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(lambda.clone()).or_default();
        *e = e.add(&c);
        if e.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    /// Coefficients in the monomial basis.
    pub fn monomial_coeffs(&self) -> &BTreeMap<Partition, BiPoly> {
        &self.coeffs
    }

    pub fn monomial_coeff(&self, lambda: &Partition) -> BiPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Exchanges the parameters `q` and `t`.
    pub fn swap_params(&self) -> SymPoly {
        SymPoly { n_vars: self.n_vars, coeffs: self.coeffs.iter().map(|(l, c)| (l.clone(), c.swap())).collect() }
    }

    /// Expansion in Schur functions `s_lambda`, via Kostka numbers.
    pub fn schur_coeffs(&self) -> BTreeMap<Partition, BiPoly> {
        let mut rem = self.coeffs.clone();
        let mut out = BTreeMap::new();
        // dominance-maximal partitions first; decreasing lex refines dominance
        let mut order: Vec<Partition> = rem.keys().cloned().collect();
        let mut sizes: Vec<u32> = order.iter().map(|p| p.size()).collect();
        sizes.dedup();
        order = sizes
            .iter()
            .flat_map(|&n| Partition::all(n).into_iter().filter(|p| p.len() <= self.n_vars))
            .collect();
        for lambda in order {
            let Some(c) = rem.get(&lambda).cloned() else { continue };
            if c.is_zero() {
                continue;
            }
            for mu in Partition::all(lambda.size()) {
                if mu.len() > self.n_vars {
                    continue;
                }
                let k = kostka(&lambda, &mu);
                if k > 0 {
                    let e = rem.entry(mu.clone()).or_default();
                    *e = e.add(&c.scale(&-Q::from_integer((k as i64).into())));
                }
            }
            out.insert(lambda, c);
        }
        debug_assert!(rem.values().all(|c| c.is_zero()));
        out
    }

    /// Explicit expansion: exponent vector of length `n_vars` -> coefficient.
    pub fn explicit(&self) -> BTreeMap<Vec<u32>, BiPoly> {
        let mut out = BTreeMap::new();
        for (l, c) in &self.coeffs {
            for e in distinct_permutations(l.parts(), self.n_vars) {
                out.insert(e, c.clone());
            }
        }
        out
    }

    /// Checks invariance of the explicit expansion under adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        let ex = self.explicit();
        ex.iter().all(|(e, c)| {
            (0..self.n_vars.saturating_sub(1)).all(|i| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                ex.get(&f) == Some(c)
            })
        })
    }

    pub fn to_json(&self) -> Value {
        let enc = |m: &BTreeMap<Partition, BiPoly>| -> Value {
            Value::Array(
                m.iter()
                    .map(|(l, c)| json!({"partition": l.parts(), "coeff": c.to_string()}))
                    .collect(),
            )
        };
        json!({"n_vars": self.n_vars, "monomial": enc(&self.coeffs), "schur": enc(&self.schur_coeffs())})
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().rev().map(|(l, c)| format!("({c})*m{l}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
