//! Exact computer algebra for motivic classes of moduli stacks of parabolic
//! Higgs bundles and epsilon-connections on curves.
//!
//! The crate is organized bottom-up:
//!
//! - [`motivic_coeff`]: the coefficient lambda-ring `Q[L^{±1/2}][p_1, p_2, ...]`,
//!   exact fractions over it, curve data and realizations.
//! - [`graded_series`]: truncated series graded by rank, parabolic flag jumps and `z`.
//! - [`plethystic`]: Adams operations and the plethystic `Exp` / `Log` pair.
//! - [`symfunc`]: partitions, modified Macdonald and Hall-Littlewood polynomials.
//! - [`curve_formulas`]: Kapranov zeta, stacks of bundles, Hilbert schemes of surfaces.
//! - [`dt_engine`]: the master series, its plethystic logarithm and the class extraction.
//! - [`quantum_torus`]: the twisted torus algebra and ray-wise DT invariants.
//! - [`config`]: JSON configuration parsing with pointer-addressed diagnostics.

pub mod config;
pub mod curve_formulas;
pub mod dt_engine;
pub mod error;
pub mod graded_series;
pub mod motivic_coeff;
pub mod plethystic;
pub mod quantum_torus;
pub mod rational;
pub mod symfunc;

pub use error::{Error, Result};
pub use motivic_coeff::{CurveData, FractionCoeff, MotCoeff, Realization, RealizedValue};
pub use rational::Q;

/// Engine version reported in CLI provenance metadata.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
