//! Association schemes given by relation tables: parsing, axiom validation,
//! intersection numbers, valuation strata and a few generator families.

mod data;
pub mod generators;
mod strata;
mod table;

pub use data::{validate_axioms, SchemeData};
pub use generators::{gen_cyclic, gen_hamming, gen_thin};
pub use strata::{strata, Strata};
pub use table::{parse_scheme, RelationTable};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed scheme file (line {line}): {reason}")]
    Malformed { line: usize, reason: String },
    #[error("relation index {missing} never occurs although the largest index is {d}")]
    OutOfRange { missing: usize, d: usize },
    #[error("axiom (i) violated: r({x},{y}) = {relation}")]
    AxiomI { x: usize, y: usize, relation: usize },
    #[error("axiom (ii) violated: ({x},{y}) lies in R_{i} but ({y},{x}) lies in R_{j}, expected R_{expected}")]
    AxiomII {
        x: usize,
        y: usize,
        i: usize,
        j: usize,
        expected: usize,
    },
    #[error("axiom (iii) violated: pair ({x},{y}) in R_{l} has {got} points z with (x,z) in R_{i} and (z,y) in R_{j}, expected {expected}")]
    AxiomIII {
        x: usize,
        y: usize,
        i: usize,
        j: usize,
        l: usize,
        expected: u64,
        got: u64,
    },
    #[error("relation index {index} outside [0, {d}]")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl SchemeError {
    /// Whether the error is an axiom violation of a well-formed table.
    pub fn is_axiom_violation(&self) -> bool {
        matches!(
            self,
            SchemeError::AxiomI { .. } | SchemeError::AxiomII { .. } | SchemeError::AxiomIII { .. }
        )
    }
}
