//! High-precision multiple zeta values and relatives, with a catalog of
//! numerically checkable identities between them.
//!
//! The crate is layered bottom-up: [`index_algebra`] holds the exact index
//! combinatorics, [`precision`] the big-float contract, [`series`] the direct
//! summation evaluators, [`word`] the iterated-integral backend, and
//! [`catalog`] the identity registry and verification runner.

pub mod catalog;
pub mod error;
pub mod index_algebra;
pub mod precision;
pub mod series;
pub mod values;
pub mod word;

pub use error::{Divergence, Error, Result};
pub use index_algebra::{FormalIndexSum, Index, Rational, SignedIndex};
pub use precision::{Backend, BoundKind, HpReal, PrecisionConfig, ValueWithError};
