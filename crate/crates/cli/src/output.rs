//! JSON rendering and error classification.

use motivic_dt::graded_series::Truncation;
use motivic_dt::{CurveData, Error, FractionCoeff, MotCoeff, Realization, ENGINE_VERSION};
use motivic_dt_oracles::OracleError;
use serde_json::{json, Value};

pub const EXIT_OTHER: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_STABILIZATION: i32 = 4;
pub const EXIT_ORACLE_SIZE: i32 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub exit: i32,
    pub message: String,
    pub details: Value,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: "usage".into(), exit: EXIT_CONFIG, message: message.into(), details: Value::Null }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError { code: "io".into(), exit: EXIT_OTHER, message: message.into(), details: Value::Null }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"code": self.code, "message": self.message, "details": self.details}})
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let exit = match &e {
            Error::Config(_) | Error::InvalidInput(_) | Error::ShapeMismatch(_) => EXIT_CONFIG,
            Error::Precondition(_) | Error::BeyondTruncation => EXIT_PRECONDITION,
            Error::NotStabilized(_) => EXIT_STABILIZATION,
            _ => EXIT_OTHER,
        };
        let details = match &e {
            Error::Config(v) => v.iter().map(|v| json!({"pointer": v.pointer, "message": v.message})).collect(),
            _ => Value::Null,
        };
        CliError { code: e.code().into(), exit, message: e.to_string(), details }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        let (code, exit) = match &e {
            OracleError::SizeLimit(_) => ("oracle_size_limit", EXIT_ORACLE_SIZE),
            OracleError::Unsupported(_) => ("oracle_unsupported", EXIT_CONFIG),
        };
        CliError { code: code.into(), exit, message: e.to_string(), details: Value::Null }
    }
}

pub fn mot_json(c: &MotCoeff) -> Value {
    json!({"terms": c.to_json_terms(), "display": c.to_string()})
}

pub fn fraction_json(c: &FractionCoeff) -> Value {
    serde_json::to_value(c.to_json()).expect("serializable")
}

/// `{"spec", "value"}` for the requested realization, if any.
pub fn realized(c: &FractionCoeff, r: Option<&(String, Realization)>, curve: Option<&CurveData>) -> Result<Value, CliError> {
    match r {
        None => Ok(Value::Null),
        Some((spec, r)) => {
            let v = c.realize(r, curve)?;
            Ok(json!({"spec": spec, "value": v.to_string()}))
        }
    }
}

pub fn truncation_json(t: &Truncation) -> Value {
    json!({"r_max": t.r_max, "z_max": t.z_max, "levels": t.levels})
}

pub fn provenance(trunc: Option<&Truncation>, guard: Option<u32>) -> Value {
    json!({
        "engine_version": ENGINE_VERSION,
        "truncation": trunc.map(truncation_json),
        "guard": guard,
    })
}
