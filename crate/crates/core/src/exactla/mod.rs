//! Exact rational arithmetic and sparse row reduction.
//!
//! Column order is always supplied by the caller; nothing here reorders
//! columns, and pivots are the first nonzero entry of a row.

mod rational;
mod sparse;

pub use rational::Rational;
pub use sparse::{contains, invert, nullspace, rank_of_union, reduce, same_span, EchelonBuilder, ReducedBasis, SparseVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);
