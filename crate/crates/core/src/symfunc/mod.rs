//! Partitions and symmetric polynomials.
//!
//! [`modified_macdonald`] is the production route (a combinatorial sum over
//! fillings); [`macdonald_oracle`] rebuilds the same polynomials by
//! Gram-Schmidt orthogonalization and is used to cross-check it.

pub mod basis;
mod bipoly;
mod hhl;
mod oracle;
mod partition;
mod sympoly;

pub use bipoly::BiPoly;
pub use hhl::modified_macdonald;
pub use oracle::{hall_littlewood, hall_littlewood_structure_constants, hall_polynomial_prediction, macdonald_oracle};
pub use partition::{Partition, PartitionStats};
pub use sympoly::SymPoly;
