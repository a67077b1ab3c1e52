//! Exact rational scalars and dense linear algebra over them.

mod matrix;
mod scalar;

pub use matrix::Matrix;
pub use scalar::Scalar;
