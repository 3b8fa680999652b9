//! Exact trilinear, quadratic and linear forms on a free abelian group of
//! finite rank. Everything here is an immutable value; no floating point.

mod linear;
mod matrix;
mod polynomial;
mod quadratic;
mod trilinear;
mod vector;

pub use linear::LinearFunctional;
pub use matrix::IntMatrix;
pub use polynomial::{CubicPolynomial, Polynomial};
pub use quadratic::{Diagonalization, QuadraticForm, Signature};
pub use trilinear::TrilinearForm;
pub use vector::Vector;
