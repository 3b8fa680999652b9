use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinearFunctional;
use crate::arith::fmt_rat;
use crate::error::{Error, Result};

/// Sparse polynomial in `a1..an` with rational coefficients, keyed by
/// exponent vectors. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

/// Coefficients of `mu(a, a, a)` in the monomial basis.
pub type CubicPolynomial = Polynomial;

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `c * a^exps` to the polynomial.
    pub fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Total degree of the leading term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
            })
            .sum()
    }

    pub fn mul_linear(&self, nu: &LinearFunctional) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            for (i, l) in nu.coeffs().iter().enumerate() {
                if l.is_zero() {
                    continue;
                }
                let mut e2 = e.clone();
                e2[i] += 1;
                out.add_term(e2, c * l);
            }
        }
        out
    }

    /// Exact quotient by a linear form.
    ///
    /// The pivot variable of `nu` (largest index with nonzero coefficient) is
    /// eliminated term by term in decreasing pivot degree; whatever survives
    /// without the pivot variable is the remainder, and must vanish.
    pub fn div_linear(&self, nu: &LinearFunctional) -> Result<Polynomial> {
        if nu.rank() != self.nvars {
            return Err(Error::RankMismatch {
                expected: self.nvars,
                found: nu.rank(),
            });
        }
        let p = nu.pivot().ok_or(Error::ZeroLinear)?;
        let lead = nu.coeffs()[p].clone();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        loop {
            let next = rem
                .terms
                .iter()
                .filter(|(e, _)| e[p] > 0)
                .max_by_key(|(e, _)| e[p])
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = next else { break };
            let mut qe = e;
            qe[p] -= 1;
            let qc = c / &lead;
            let mut single = Polynomial::zero(self.nvars);
            single.add_term(qe.clone(), qc.clone());
            let prod = single.mul_linear(nu);
            for (pe, pc) in prod.terms {
                rem.add_term(pe, -pc);
            }
            quot.add_term(qe, qc);
        }
        if let Some((e, c)) = rem.terms.iter().next_back() {
            let mut term = Polynomial::zero(self.nvars);
            term.add_term(e.clone(), c.clone());
            return Err(Error::NotDivisible(term.to_string()));
        }
        Ok(quot)
    }
}

fn fmt_monomial(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("a{}", i + 1)
            } else {
                format!("a{}^{}", i + 1, k)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        // a1 is the highest variable: descending exponent vectors.
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = fmt_monomial(e);
            if mono.is_empty() {
                f.write_str(&fmt_rat(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_rat(&mag), mono)?;
            }
        }
        Ok(())
    }
}
