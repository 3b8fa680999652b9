use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, Vector};
use crate::arith::{fmt_rat, primitive_integer, rat, rat_int};
use crate::error::{Error, Result};

/// A rational covector on the lattice: `c2(X)`, `p1(X)` or a linear factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearFunctional {
    coeffs: Vec<BigRational>,
}

impl LinearFunctional {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(LinearFunctional { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Result<Self> {
        Self::new(coeffs.iter().map(rat_int).collect())
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(fmt_rat(c)))
                }
            })
            .collect()
    }

    pub fn eval(&self, x: &Vector) -> Result<BigRational> {
        if x.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: x.rank(),
            });
        }
        Ok(self.eval_slice(x.entries()))
    }

    pub(crate) fn eval_slice(&self, x: &[BigRational]) -> BigRational {
        self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// Largest index with a nonzero coefficient.
    pub fn pivot(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Same hyperplane, primitive integer coefficients, first nonzero positive.
    pub fn primitive(&self) -> Option<LinearFunctional> {
        let mut ints = primitive_integer(&self.coeffs)?;
        if ints.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative) {
            ints.iter_mut().for_each(|c| *c = -c.clone());
        }
        Some(LinearFunctional {
            coeffs: ints.iter().map(rat_int).collect(),
        })
    }

    pub fn neg(&self) -> LinearFunctional {
        LinearFunctional {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> LinearFunctional {
        LinearFunctional {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// The pulled-back functional `x -> self(M x)`.
    pub fn compose(&self, m: &IntMatrix) -> Result<LinearFunctional> {
        if m.rows() != self.rank() || m.cols() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: m.rows(),
            });
        }
        let coeffs = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .map(|i| &self.coeffs[i] * rat_int(m.get(i, j)))
                    .sum()
            })
            .collect();
        Ok(LinearFunctional { coeffs })
    }
}

impl fmt::Display for LinearFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if !mag.is_one() {
                out.push_str(&format!("{}*", fmt_rat(&mag)));
            }
            out.push_str(&format!("a{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
