use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A schema violation located by a JSON pointer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub pointer: String,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.pointer, self.message)
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("half-integer weight not realizable")]
    HalfIntegerWeight,
    #[error("realization needs numeric curve data: {0}")]
    MissingCurveData(String),
    #[error("series not invertible")]
    NotInvertible,
    #[error("beyond truncation")]
    BeyondTruncation,
    #[error("z-series not stabilized; increase z_max ({0})")]
    NotStabilized(String),
    #[error("Exp requires augmentation-zero input")]
    ExpAugmentation,
    #[error("Log requires constant term 1")]
    LogConstantTerm,
    #[error("hypothesis failed: {0}")]
    Precondition(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not supported on a single ray")]
    NotSingleRay,
    #[error("rays out of clockwise order: {0}")]
    RayOrder(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("configuration error: {}", format_violations(.0))]
    Config(Vec<Violation>),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "zero_denominator",
            Error::HalfIntegerWeight => "half_integer_weight",
            Error::MissingCurveData(_) => "missing_curve_data",
            Error::NotInvertible => "not_invertible",
            Error::BeyondTruncation => "beyond_truncation",
            Error::NotStabilized(_) => "not_stabilized",
            Error::ExpAugmentation => "exp_augmentation",
            Error::LogConstantTerm => "log_constant_term",
            Error::Precondition(_) => "precondition",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::NotSingleRay => "not_single_ray",
            Error::RayOrder(_) => "ray_order",
            Error::InvalidInput(_) => "invalid_input",
            Error::Config(_) => "config",
        }
    }
}
