//! Diagram algebras and their homology.

pub mod algebra;
pub mod coeff;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod idempotent;
pub mod linkstate;
pub mod tate;

pub use error::{Error, Result};
