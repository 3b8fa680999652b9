//! Rational linear factors `nu` of the cubic form `C(a) = mu(a,a,a)`, the
//! residual quadratic forms `xi = C / nu`, and their signatures.

mod classify;
mod hyperplane;
mod lattice;
mod search;

pub use classify::{classify_prop41, CITE_FACTOR_CLASSIFICATION};
pub use hyperplane::{restrict_to_hyperplane, HyperplaneBasis};
pub use lattice::{lattice_gram, realzero_witness, Isotropic, LatticeGram};
pub use search::find_linear_factors;

use crate::error::{Error, Result};
use crate::forms::{CubicPolynomial, LinearFunctional, QuadraticForm, Signature};

/// One decomposition `C = nu * xi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Primitive integer coefficients; sign fixed by a Kähler sample when one
    /// was given, otherwise first nonzero coefficient positive.
    pub nu: LinearFunctional,
    pub xi: QuadraticForm,
    pub signature: Signature,
    pub kernel_dim: usize,
    pub hyperplane: HyperplaneBasis,
    /// `xi` restricted to `ker(nu)` in the basis `hyperplane`.
    pub xi_restricted: QuadraticForm,
    pub restricted_signature: Signature,
}

impl Factorization {
    /// Assembles all derived data for a factor already known to divide `c`.
    pub fn new(c: &CubicPolynomial, nu: LinearFunctional) -> Result<Self> {
        let xi = divide_by_linear(c, &nu)?;
        let (hyperplane, xi_restricted) = restrict_to_hyperplane(&xi, &nu)?;
        Ok(Factorization {
            signature: xi.signature(),
            kernel_dim: xi.kernel_dimension(),
            restricted_signature: xi_restricted.signature(),
            nu,
            xi,
            hyperplane,
            xi_restricted,
        })
    }

    /// Whether `nu * xi` expands to `c` coefficient by coefficient.
    pub fn verify(&self, c: &CubicPolynomial) -> bool {
        self.xi.to_polynomial().mul_linear(&self.nu) == *c
    }
}

/// `xi` with `nu * xi = c`, by elimination of the pivot variable of `nu`.
pub fn divide_by_linear(c: &CubicPolynomial, nu: &LinearFunctional) -> Result<QuadraticForm> {
    if nu.is_zero() {
        return Err(Error::ZeroLinear);
    }
    QuadraticForm::from_polynomial(&c.div_linear(nu)?)
}
