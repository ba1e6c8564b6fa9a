//! JSON model configuration and realization specs.
//!
//! ```json
//! {
//!   "genus": 1,
//!   "l_coeffs": [1, -2, 5],
//!   "punctures": [{"id": "x", "order": 1, "principal_parts": [["-1"]], "weights": ["0"]}],
//!   "epsilon": "1",
//!   "trunc": {"r_max": 2, "z_max": 16},
//!   "gamma": {"r": 1, "r_xj": [[1]], "d": 1}
//! }
//! ```
//!
//! Rationals are integers or strings `"a/b"`. All problems are collected and
//! reported together, each located by a JSON pointer.

use num_traits::One;
use serde_json::{Map, Value};

use crate::dt_engine::{GammaClass, ModelConfig, PunctureConfig};
use crate::error::{Error, Result, Violation};
use crate::motivic_coeff::{CurveData, Realization};
use crate::rational::{parse_rational, Q};

pub const MAX_GENUS: u64 = 8;
pub const MAX_RANK: u64 = 8;
pub const MAX_Z: u64 = 96;
pub const MAX_ORDER: u64 = 16;
pub const MAX_LEVELS: usize = 8;
pub const MAX_PUNCTURES: usize = 8;

/// A validated configuration file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedConfig {
    pub model: ModelConfig,
    pub gamma: Option<GammaClass>,
}

struct Checker {
    violations: Vec<Violation>,
}

impl Checker {
    fn fail(&mut self, pointer: &str, message: impl Into<String>) {
        self.violations.push(Violation { pointer: pointer.to_string(), message: message.into() });
    }

    fn field<'a>(&mut self, obj: &'a Map<String, Value>, ptr: &str, key: &str) -> Option<&'a Value> {
        let v = obj.get(key);
        if v.is_none() {
            self.fail(&format!("{ptr}/{key}"), "missing field");
        }
        v
    }

    fn object<'a>(&mut self, v: &'a Value, ptr: &str) -> Option<&'a Map<String, Value>> {
        let o = v.as_object();
        if o.is_none() {
            self.fail(ptr, "expected an object");
        }
        o
    }

    fn array<'a>(&mut self, v: &'a Value, ptr: &str) -> Option<&'a Vec<Value>> {
        let a = v.as_array();
        if a.is_none() {
            self.fail(ptr, "expected an array");
        }
        a
    }

    fn uint(&mut self, v: &Value, ptr: &str, max: u64) -> Option<u64> {
        match v.as_u64() {
            Some(n) if n <= max => Some(n),
            Some(_) => {
                self.fail(ptr, format!("must be at most {max}"));
                None
            }
            None => {
                self.fail(ptr, "expected a nonnegative integer");
                None
            }
        }
    }

    fn int(&mut self, v: &Value, ptr: &str) -> Option<i64> {
        let n = v.as_i64();
        if n.is_none() {
            self.fail(ptr, "expected an integer");
        }
        n
    }

    fn rational(&mut self, v: &Value, ptr: &str) -> Option<Q> {
        let parsed = match v {
            Value::String(s) => parse_rational(s).ok(),
            Value::Number(n) => n.as_i64().map(|i| Q::from_integer(i.into())),
            _ => None,
        };
        if parsed.is_none() {
            self.fail(ptr, "expected a rational (integer or \"a/b\" string)");
        }
        parsed
    }

    fn rationals(&mut self, v: &Value, ptr: &str) -> Option<Vec<Q>> {
        let a = self.array(v, ptr)?;
        let out: Vec<Option<Q>> = a.iter().enumerate().map(|(i, x)| self.rational(x, &format!("{ptr}/{i}"))).collect();
        out.into_iter().collect()
    }

    fn puncture(&mut self, v: &Value, ptr: &str) -> Option<PunctureConfig> {
        let o = self.object(v, ptr)?;
        let id = match self.field(o, ptr, "id") {
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => {
                self.fail(&format!("{ptr}/id"), "expected a string");
                None
            }
            None => None,
        };
        let order = self.field(o, ptr, "order").and_then(|v| self.uint(v, &format!("{ptr}/order"), MAX_ORDER));
        if order == Some(0) {
            self.fail(&format!("{ptr}/order"), "order must be positive");
        }
        let pp_ptr = format!("{ptr}/principal_parts");
        let parts = self.field(o, ptr, "principal_parts").and_then(|v| self.array(v, &pp_ptr)).map(|a| {
            a.iter().enumerate().map(|(j, x)| self.rationals(x, &format!("{pp_ptr}/{j}"))).collect::<Vec<_>>()
        });
        let w_ptr = format!("{ptr}/weights");
        let weights = self.field(o, ptr, "weights").and_then(|v| self.rationals(v, &w_ptr));

        let parts: Option<Vec<Vec<Q>>> = parts.and_then(|p| p.into_iter().collect());
        let (id, order, parts, weights) = (id?, order?, parts?, weights?);
        if order == 0 {
            return None;
        }
        let mut ok = true;
        if parts.is_empty() || parts.len() > MAX_LEVELS {
            self.fail(&pp_ptr, format!("between 1 and {MAX_LEVELS} levels are required"));
            ok = false;
        }
        for (j, p) in parts.iter().enumerate() {
            if p.len() != order as usize {
                self.fail(&format!("{pp_ptr}/{j}"), format!("expected {order} coefficients (c_-n, ..., c_-1)"));
                ok = false;
            }
        }
        if weights.len() != parts.len() {
            self.fail(&w_ptr, "one weight per level is required");
            ok = false;
        } else if weights.windows(2).any(|w| w[0] > w[1]) {
            self.fail(&w_ptr, "parabolic weights must be weakly increasing");
            ok = false;
        } else if let Some(first) = weights.first() {
            let cap = first + Q::from_integer((order as i64).into());
            if weights.iter().any(|w| *w > cap) {
                self.fail(&w_ptr, "weights must satisfy sigma_j <= sigma_1 + order");
                ok = false;
            }
        }
        ok.then_some(PunctureConfig { id, order: order as u32, principal_parts: parts, weights })
    }

    fn gamma(&mut self, v: &Value, ptr: &str) -> Option<GammaClass> {
        let o = self.object(v, ptr)?;
        let r = self.field(o, ptr, "r").and_then(|v| self.uint(v, &format!("{ptr}/r"), MAX_RANK));
        let d = self.field(o, ptr, "d").and_then(|v| self.int(v, &format!("{ptr}/d")));
        let rx_ptr = format!("{ptr}/r_xj");
        let r_xj = match o.get("r_xj") {
            None => Some(Vec::new()),
            Some(v) => self.array(v, &rx_ptr).and_then(|a| {
                let rows: Vec<Option<Vec<u32>>> = a
                    .iter()
                    .enumerate()
                    .map(|(x, row)| {
                        let p = format!("{rx_ptr}/{x}");
                        let row = self.array(row, &p)?;
                        let vals: Vec<Option<u32>> = row
                            .iter()
                            .enumerate()
                            .map(|(j, e)| self.uint(e, &format!("{p}/{j}"), MAX_RANK).map(|n| n as u32))
                            .collect();
                        vals.into_iter().collect()
                    })
                    .collect();
                rows.into_iter().collect()
            }),
        };
        let (r, d, r_xj) = (r?, d?, r_xj?);
        for (x, row) in r_xj.iter().enumerate() {
            if row.iter().sum::<u32>() as u64 != r {
                self.fail(&format!("{rx_ptr}/{x}"), format!("entries must sum to r = {r}"));
                return None;
            }
        }
        Some(GammaClass { r: r as u32, r_xj, d })
    }
}

/// Parses and validates a model configuration.
pub fn parse_config(text: &str) -> Result<ParsedConfig> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| Error::Config(vec![Violation { pointer: String::new(), message: format!("malformed JSON: {e}") }]))?;
    let mut c = Checker { violations: Vec::new() };
    let Some(o) = c.object(&root, "") else {
        return Err(Error::Config(c.violations));
    };
    for key in o.keys() {
        if !["genus", "l_coeffs", "punctures", "epsilon", "trunc", "gamma"].contains(&key.as_str()) {
            c.fail(&format!("/{key}"), "unknown field");
        }
    }
    let genus = c.field(o, "", "genus").and_then(|v| c.uint(v, "/genus", MAX_GENUS));
    let l_coeffs = c.field(o, "", "l_coeffs").and_then(|v| c.rationals(v, "/l_coeffs"));
    let curve = match (genus, l_coeffs) {
        (Some(g), Some(l)) => {
            if l.len() != 2 * g as usize + 1 {
                c.fail("/l_coeffs", format!("expected 2g+1 = {} coefficients", 2 * g + 1));
                None
            } else if !l[0].is_one() {
                c.fail("/l_coeffs/0", "b_0 must be 1");
                None
            } else {
                CurveData::new(g as u32, l).ok()
            }
        }
        _ => None,
    };
    let punctures = match o.get("punctures") {
        None => Some(Vec::new()),
        Some(v) => c.array(v, "/punctures").and_then(|a| {
            if a.len() > MAX_PUNCTURES {
                c.fail("/punctures", format!("at most {MAX_PUNCTURES} punctures"));
                return None;
            }
            let ps: Vec<Option<PunctureConfig>> =
                a.iter().enumerate().map(|(x, p)| c.puncture(p, &format!("/punctures/{x}"))).collect();
            ps.into_iter().collect()
        }),
    };
    let epsilon = c.field(o, "", "epsilon").and_then(|v| c.rational(v, "/epsilon"));
    let trunc = c.field(o, "", "trunc").and_then(|v| c.object(v, "/trunc")).and_then(|t| {
        let r = c.field(t, "/trunc", "r_max").and_then(|v| c.uint(v, "/trunc/r_max", MAX_RANK));
        let z = c.field(t, "/trunc", "z_max").and_then(|v| c.uint(v, "/trunc/z_max", MAX_Z));
        Some((r? as u32, z? as u32))
    });
    let gamma = match o.get("gamma") {
        None => Some(None),
        Some(v) => c.gamma(v, "/gamma").map(Some),
    };
    if let (Some(ps), Some(Some(g))) = (&punctures, &gamma) {
        if g.r_xj.len() != ps.len() {
            c.fail("/gamma/r_xj", format!("expected one row per puncture ({})", ps.len()));
        }
    }
    if !c.violations.is_empty() {
        return Err(Error::Config(c.violations));
    }
    let (curve, punctures, epsilon, (r_max, z_max), gamma) =
        (curve.unwrap(), punctures.unwrap(), epsilon.unwrap(), trunc.unwrap(), gamma.unwrap());
    let model = ModelConfig::new(curve, punctures, epsilon, r_max, z_max)?;
    Ok(ParsedConfig { model, gamma })
}

/// Parses `point-count:q=<rational>[,sqrt_q=<rational>]`, `q=<rational>`,
/// `e-polynomial`, `euler` or `symbolic`.
pub fn parse_realization(spec: &str) -> Result<Realization> {
    let bad = |m: &str| Error::InvalidInput(format!("realization {spec:?}: {m}"));
    let spec = spec.trim();
    let (kind, args) = match spec.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None if spec.starts_with("q=") => ("point-count", Some(spec)),
        None => (spec, None),
    };
    match kind {
        "point-count" | "point_count" | "pc" => {
            let args = args.ok_or_else(|| bad("point count needs q=<rational>"))?;
            let mut q = None;
            let mut sqrt_q = None;
            for part in args.split(',') {
                match part.trim().split_once('=') {
                    Some(("q", v)) => q = Some(parse_rational(v)?),
                    Some(("sqrt_q", v)) => sqrt_q = Some(parse_rational(v)?),
                    _ => return Err(bad("expected q=<rational> or sqrt_q=<rational>")),
                }
            }
            let q = q.ok_or_else(|| bad("missing q"))?;
            if let Some(s) = &sqrt_q {
                if s * s != q {
                    return Err(bad("sqrt_q^2 must equal q"));
                }
            }
            Ok(Realization::PointCount { q, sqrt_q })
        }
        "e-polynomial" | "e-poly" | "e_polynomial" if args.is_none() => Ok(Realization::EPolynomial),
        "euler" | "euler-characteristic" | "euler_characteristic" if args.is_none() => Ok(Realization::EulerCharacteristic),
        "symbolic" if args.is_none() => Ok(Realization::Symbolic),
        _ => Err(bad("unknown kind")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    const MINIMAL: &str = r#"{"genus":0,"l_coeffs":[1],"punctures":[],"epsilon":"1","trunc":{"r_max":2,"z_max":12}}"#;

    fn violations(text: &str) -> Vec<Violation> {
        match parse_config(text) {
            Err(Error::Config(v)) => v,
            other => panic!("expected config error, got {other:?}"),
        }
    }

    #[test]
    fn minimal_config() {
        let c = parse_config(MINIMAL).unwrap();
        assert_eq!(c.model.r_max, 2);
        assert_eq!(c.model.epsilon, q(1));
        assert!(c.gamma.is_none());
    }

    #[test]
    fn decreasing_weights() {
        let text = r#"{"genus":0,"l_coeffs":[1],"epsilon":"1","trunc":{"r_max":2,"z_max":12},
            "punctures":[{"id":"x","order":1,"principal_parts":[["0"],["1"]],"weights":["1","0"]}]}"#;
        let v = violations(text);
        assert_eq!(v[0].pointer, "/punctures/0/weights");
    }

    #[test]
    fn zero_order() {
        let text = r#"{"genus":0,"l_coeffs":[1],"epsilon":"1","trunc":{"r_max":2,"z_max":12},
            "punctures":[{"id":"x","order":0,"principal_parts":[[]],"weights":["0"]}]}"#;
        let v = violations(text);
        assert!(v.iter().any(|v| v.pointer == "/punctures/0/order" && v.message == "order must be positive"));
    }

    #[test]
    fn collects_several_problems() {
        let v = violations(r#"{"genus":1,"l_coeffs":[2,0,1],"epsilon":"x"}"#);
        let ptrs: Vec<&str> = v.iter().map(|v| v.pointer.as_str()).collect();
        assert!(ptrs.contains(&"/epsilon"));
        assert!(ptrs.contains(&"/trunc"));
        assert!(ptrs.contains(&"/l_coeffs/0"));
        assert!(matches!(parse_config("{"), Err(Error::Config(_))));
    }

    #[test]
    fn gamma_block() {
        let text = r#"{"genus":0,"l_coeffs":[1],"epsilon":"1","trunc":{"r_max":2,"z_max":12},
            "punctures":[{"id":"x","order":1,"principal_parts":[["-1"]],"weights":["0"]}],
            "gamma":{"r":1,"r_xj":[[1]],"d":1}}"#;
        let c = parse_config(text).unwrap();
        assert_eq!(c.gamma.unwrap(), GammaClass { r: 1, r_xj: vec![vec![1]], d: 1 });
    }

    #[test]
    fn realization_specs() {
        assert_eq!(parse_realization("q=2").unwrap(), Realization::point_count(2));
        assert_eq!(parse_realization("point-count:q=4,sqrt_q=2").unwrap(), Realization::PointCount { q: q(4), sqrt_q: Some(q(2)) });
        assert_eq!(parse_realization("e-polynomial").unwrap(), Realization::EPolynomial);
        assert!(parse_realization("point-count:q=4,sqrt_q=3").is_err());
        assert!(parse_realization("euler:q=1").is_err());
    }
}
