//! Exact dense linear algebra over the rationals and prime fields.

mod matrix;
mod random;
mod scalar;
mod subspace;

pub use matrix::{axpy, is_zero_vec, Matrix, Rref};
pub use random::{random_matrix, ScalarRng};
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
