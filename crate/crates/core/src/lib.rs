//! Exact structure-constant computations for the general Diamond Lie
//! algebras, their faithful matrix representations, and the Leibniz algebras
//! obtained by extending them by the associated right modules.
//!
//! Everything is computed over ℚ(i) with exact arithmetic; see
//! [`exactmath`] for the scalar and linear-algebra layer.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod exactmath;
pub mod extensions;
pub mod io;
pub mod report;
pub mod reps;

pub use error::{Error, Result};
pub use exactmath::{ExactMatrix, GaussianRational, Rational, Subspace};
