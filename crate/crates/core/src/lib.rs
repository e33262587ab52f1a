//! Exact symbolic engine for free symmetric and unitary pairs in division
//! rings built from the Heisenberg group and the first Weyl algebra.

pub mod arith;
pub mod algebras;
pub mod error;
pub mod freeness;
pub mod heisenberg;
pub mod places;
pub mod scenarios;
pub mod weyl;

pub use error::{Error, PlaceDefect, Result};
