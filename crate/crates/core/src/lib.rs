//! Exact computations with the invariant modules `M_{k,ξ}` of the
//! polynomial ring and the tensor-space global Weyl modules of
//! `sl_{n+1}[t]`.

pub mod cli;
pub mod combinat;
pub mod error;
pub mod exactla;
pub mod generators;
pub mod invmod;
pub mod polyring;
pub mod report;
pub mod store;
pub mod weylmod;

pub use error::{Error, Result};
