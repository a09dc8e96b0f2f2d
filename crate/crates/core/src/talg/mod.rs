//! The Terwilliger algebra `T(x)` over GF(p) and its distinguished ideals.

mod algebra;
mod context;
mod ideals;
mod radical;

pub use algebra::{generate_algebra, AlgebraBasis};
pub use context::{build_context, TalgContext};
pub use ideals::{annihilator_w0, b0_b1, b0_identity, is_two_sided_ideal, square_witness};
pub use radical::{radical, radical_unchecked, verify_radical, RadicalCertificate};

use crate::ffmat::FfError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TalgError {
    #[error("base point {x} outside [0, {n})")]
    BasePointOutOfRange { x: usize, n: usize },
    #[error("relation index {index} outside [0, {d}]")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("matrix identity violated: {0}")]
    IdentityViolated(String),
    #[error("not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("scheme is not p'-valenced: p divides k_{relation}")]
    NotPPrimeValenced { relation: usize },
    #[error("identity element check failed: {0}")]
    IdentityElement(String),
    #[error("radical postcondition failed: {0}")]
    RadicalPostcondition(String),
    #[error(transparent)]
    Field(#[from] FfError),
}
