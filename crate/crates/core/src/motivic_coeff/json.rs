//! Wire format for coefficients.

use serde::{Deserialize, Serialize};

use super::{FractionCoeff, MotCoeff, Sym, SymMono};
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational};

/// One term `coeff * L^{L_half_exponent/2} * prod p_i * prod Jac_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffTermJson {
    #[serde(rename = "L_half_exponent")]
    pub l_half_exponent: i32,
    pub p_monomial: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub jac_monomial: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionJson {
    pub numerator: Vec<CoeffTermJson>,
    pub denominator: Vec<CoeffTermJson>,
    #[serde(default)]
    pub display: String,
}

const MAX_SYMBOL_INDEX: u32 = 1 << 16;
const MAX_HALF_EXPONENT: i32 = 1 << 16;

impl MotCoeff {
    pub fn to_json_terms(&self) -> Vec<CoeffTermJson> {
        self.terms()
            .into_iter()
            .map(|(e, m, c)| CoeffTermJson {
                l_half_exponent: e,
                p_monomial: m.p_indices(),
                jac_monomial: m.jac_indices(),
                coeff: format_rational(&c),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[CoeffTermJson]) -> Result<MotCoeff> {
        let mut acc = MotCoeff::zero();
        for t in terms {
            if t.l_half_exponent.abs() > MAX_HALF_EXPONENT {
                return Err(Error::InvalidInput("L exponent out of range".into()));
            }
            let mut syms = Vec::new();
            for &i in &t.p_monomial {
                if i == 0 || i > MAX_SYMBOL_INDEX {
                    return Err(Error::InvalidInput(format!("bad power-sum index {i}")));
                }
                syms.push(Sym::P(i));
            }
            for &i in &t.jac_monomial {
                if i == 0 || i > MAX_SYMBOL_INDEX {
                    return Err(Error::InvalidInput(format!("bad Jacobian index {i}")));
                }
                syms.push(Sym::Jac(i));
            }
            let c = parse_rational(&t.coeff)?;
            acc = &acc + &MotCoeff::term(t.l_half_exponent, SymMono::from_syms(syms), c);
        }
        Ok(acc)
    }

    pub fn from_json_str(s: &str) -> Result<MotCoeff> {
        let terms: Vec<CoeffTermJson> =
            serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("coefficient JSON: {e}")))?;
        Self::from_json_terms(&terms)
    }
}

impl FractionCoeff {
    pub fn to_json(&self) -> FractionJson {
        FractionJson {
            numerator: self.numerator().to_json_terms(),
            denominator: self.denominator().to_json_terms(),
            display: self.to_string(),
        }
    }

    pub fn from_json(j: &FractionJson) -> Result<FractionCoeff> {
        let num = FractionCoeff::from(MotCoeff::from_json_terms(&j.numerator)?);
        let den = FractionCoeff::from(MotCoeff::from_json_terms(&j.denominator)?);
        &num / &den
    }
}
