//! Exact linear algebra over the rationals.

pub mod matrix;
pub mod polynomial;
pub mod rational;
pub mod subspace;
pub mod vector;

pub use matrix::Matrix;
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use subspace::{subspace_contains, subspace_equal, subspace_sum, Echelon, Subspace};
pub use vector::Vector;
