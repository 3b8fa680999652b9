use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{gcd_all, lcm_denominators, primitive_integer, rat, rat_int};
use crate::error::{Error, Result};
use crate::forms::{IntMatrix, QuadraticForm, Vector};

/// `scale * A_xi`, integral with entry gcd 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeGram {
    pub scale: BigRational,
    pub gram: IntMatrix,
}

/// Smallest positive multiple of `A_xi` with integer entries, made content-free.
pub fn lattice_gram(xi: &QuadraticForm) -> Result<LatticeGram> {
    if xi.is_zero() {
        return Err(Error::ZeroQuadratic);
    }
    let l = lcm_denominators(xi.gram().iter().flatten());
    let ints: Vec<Vec<BigInt>> = xi
        .gram()
        .iter()
        .map(|r| r.iter().map(|v| (v * rat_int(&l)).to_integer()).collect())
        .collect();
    let g = gcd_all(ints.iter().flatten());
    let gram = IntMatrix::new(
        ints.into_iter()
            .map(|r| r.into_iter().map(|v| v / &g).collect())
            .collect(),
    )?;
    Ok(LatticeGram {
        scale: BigRational::new(l, g),
        gram,
    })
}

/// A nonzero real zero of a quadratic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isotropic {
    /// Primitive integral vector with `xi(v) = 0`.
    Rational(Vec<BigInt>),
    /// `base + sqrt(radicand) * direction`, used when no rational zero was
    /// found; `radicand` is a positive non-square rational.
    Surd {
        base: Vector,
        radicand: BigRational,
        direction: Vector,
    },
}

impl Isotropic {
    /// `xi(v) = 0` checked exactly; for the surd form this means both the
    /// rational part and the `sqrt(radicand)` part of `xi(v)` vanish.
    pub fn is_zero_of(&self, xi: &QuadraticForm) -> Result<bool> {
        match self {
            Isotropic::Rational(v) => {
                Ok(!v.iter().all(Zero::is_zero) && xi.eval(&Vector::from_bigints(v))?.is_zero())
            }
            Isotropic::Surd {
                base,
                radicand,
                direction,
            } => {
                let rational = xi.eval(base)? + radicand * xi.eval(direction)?;
                let irrational = xi.bilinear(base, direction)?;
                Ok(rational.is_zero() && irrational.is_zero() && !direction.is_zero())
            }
        }
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

fn as_primitive(v: &Vector) -> Vec<BigInt> {
    primitive_integer(v.entries()).expect("nonzero vector")
}

/// Search bound for small integral zeros in low rank.
const SMALL_SEARCH_RANK: usize = 4;
const SMALL_SEARCH_BOUND: i64 = 3;

/// A nonzero vector on the real quadric `xi = 0`, or `None` when `xi` is
/// definite.
///
/// Tries, in order: a kernel direction of the diagonalization, a pair of
/// opposite-sign diagonal directions whose ratio is a rational square, and
/// (in rank at most 4) small integral vectors. If none is rational, the
/// first opposite-sign pair is returned in surd form.
pub fn realzero_witness(xi: &QuadraticForm) -> Option<Isotropic> {
    let n = xi.rank();
    if n == 0 {
        return None;
    }
    let d = xi.diagonalize();
    if let Some(i) = d.diagonal.iter().position(Zero::is_zero) {
        return Some(Isotropic::Rational(as_primitive(&d.basis[i])));
    }
    let pos: Vec<usize> = (0..n).filter(|&i| d.diagonal[i].is_positive()).collect();
    let neg: Vec<usize> = (0..n).filter(|&i| d.diagonal[i].is_negative()).collect();
    if pos.is_empty() || neg.is_empty() {
        return None;
    }
    for &i in &pos {
        for &j in &neg {
            let ratio = -&d.diagonal[i] / &d.diagonal[j];
            if let Some(t) = rational_sqrt(&ratio) {
                let v = d.basis[i].add(&d.basis[j].scale(&t));
                return Some(Isotropic::Rational(as_primitive(&v)));
            }
        }
    }
    if n <= SMALL_SEARCH_RANK {
        if let Some(v) = small_zero(xi) {
            return Some(Isotropic::Rational(v));
        }
    }
    let (i, j) = (pos[0], neg[0]);
    Some(Isotropic::Surd {
        base: d.basis[i].clone(),
        radicand: -&d.diagonal[i] / &d.diagonal[j],
        direction: d.basis[j].clone(),
    })
}

fn small_zero(xi: &QuadraticForm) -> Option<Vec<BigInt>> {
    let n = xi.rank();
    let span = (2 * SMALL_SEARCH_BOUND + 1) as usize;
    let total = span.pow(n as u32);
    (1..total).find_map(|mut code| {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(rat((code % span) as i64 - SMALL_SEARCH_BOUND));
            code /= span;
        }
        let v = Vector::new(v);
        (!v.is_zero() && xi.eval(&v).ok()?.is_zero()).then(|| as_primitive(&v))
    })
}
