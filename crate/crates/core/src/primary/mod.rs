//! The primary module `W_0 = span{E_i* 1}` of `T(x)`: action, filtration by
//! valuation, the relation `~`, composition factors and duality.

mod composition;
mod contra;
mod digraph;
mod module;

pub use composition::{composition_factors, uniserial_check, verify_ml_iso, CompositionFactor, CompositionReport, Level};
pub use contra::{contragredient_action, factor_duality, is_selfcontragredient, SelfContraVerdict};
pub use digraph::{closure_digraph, tarjan_scc, ClosureDigraph};
pub use module::{build_primary, filtration, ModuleAction, PrimaryModule};

use crate::ffmat::FfError;
use crate::talg::TalgError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimaryError {
    #[error("relation index {index} outside [0, {d}]")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("primary module invariant violated: {0}")]
    Invariant(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Talg(#[from] TalgError),
    #[error(transparent)]
    Field(#[from] FfError),
}
