//! Brute-force counts over small finite fields.
//!
//! Nothing here depends on the formula engine: each count is an exhaustive
//! enumeration, so the results can serve as ground truth for the closed formulas.

pub mod bun_p1;
pub mod gf;
pub mod hall;
pub mod hilb;
mod linalg;
pub mod nilpotent;

pub use bun_p1::{bun_p1_weighted_count, WeightedCount};
pub use gf::Gf;
pub use hall::hall_numbers_bruteforce;
pub use hilb::hilb_a2_bruteforce;
pub use nilpotent::{count_nilpotent_types, NilpotentCount};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration too large: {0}")]
    SizeLimit(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;

/// Upper bound on the number of objects any oracle enumerates.
pub const MAX_ENUMERATION: u128 = 1 << 27;

pub(crate) fn check_size(what: &str, n: u128) -> Result<()> {
    if n > MAX_ENUMERATION {
        return Err(OracleError::SizeLimit(format!("{what} needs {n} steps, limit {MAX_ENUMERATION}")));
    }
    Ok(())
}
