use thiserror::Error;

use crate::poly::{Mode, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid scalar {0:?}: expected p or p/q")]
    InvalidScalar(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("mode mismatch: {left} vs {right}")]
    ModeMismatch { left: Mode, right: Mode },
    #[error("operation requires {expected} mode, got {found}")]
    WrongMode { expected: Mode, found: Mode },
    #[error("parameter count mismatch: {left} vs {right}")]
    ParamMismatch { left: usize, right: usize },
    #[error("index out of range: {what} = {index}, allowed 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },
    #[error("negative exponent {exponent} on variable {var} in polynomial mode")]
    NegativeExponent { var: String, exponent: i64 },
    #[error("cannot substitute a non-monomial expression into a negative power of {var}")]
    NonInvertibleSubstitution { var: String },
    #[error("cannot evaluate a negative power of {var} at zero")]
    EvaluationAtZero { var: String },
    #[error("power sum index must be nonzero, and positive in polynomial mode (got {0})")]
    InvalidPowerSum(i64),
    #[error("permutation of size {found} does not match block size {expected}")]
    PermutationSize { expected: usize, found: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("closure did not converge within {limit} subspaces")]
    NonConvergence { limit: usize },
    #[error("max_subspaces {limit} is smaller than the input size {size}")]
    CapTooSmall { limit: usize, size: usize },
}
