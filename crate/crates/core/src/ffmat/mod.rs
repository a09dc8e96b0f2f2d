//! Exact arithmetic over the prime field GF(p): residues, dense matrices and
//! subspaces in canonical echelon form.

mod field;
mod matrix;
mod subspace;

pub use field::FieldCtx;
pub use matrix::GfpMatrix;
pub use subspace::{kernel, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 2^31 - 1")]
    ModulusTooLarge(u64),
    #[error("expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}
