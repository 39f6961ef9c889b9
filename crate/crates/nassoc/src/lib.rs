//! Exact structure-constant toolkit for the Vidinli family of
//! non-associative algebras and their relatives.

pub mod algebra;
pub mod analysis;
pub mod characterization;
pub mod constructors;
pub mod error;
pub mod geometry;
pub mod json;
pub mod linalg;
pub mod pushout;
pub mod spectral;
pub mod suite;

pub use error::{Error, Result};
