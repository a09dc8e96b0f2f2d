//! Modular Terwilliger algebras of association schemes over GF(p).
//!
//! The crate validates a scheme from its relation table, builds the algebra
//! `T(x)` generated by the adjacency matrices and the dual idempotents at a
//! base point, and analyses the primary module `W_0 = span{E_i* 1}`: its
//! filtration by p-adic valuation of the valencies, composition factors,
//! uniseriality and self-duality, together with the ideals `B_0`, `B_1`, the
//! Jacobson radical and `Ann_T(W_0)`. [`characterize`] evaluates the
//! p'-valenced criteria side by side and refuses to report a result in which
//! they disagree.

pub mod analysis;
pub mod characterize;
pub mod ffmat;
pub mod oracle;
pub mod primary;
pub mod scheme;
pub mod talg;

pub use ffmat::{FfError, FieldCtx, GfpMatrix, Subspace};
pub use scheme::{RelationTable, SchemeData, SchemeError, Strata};
pub use talg::{AlgebraBasis, TalgContext, TalgError};
pub use analysis::{analyze, AnalysisError, AnalysisReport};
pub use characterize::{CharError, CharReport};
pub use primary::PrimaryError;
