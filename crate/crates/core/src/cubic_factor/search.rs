//! Restriction-and-lift search for rational linear factors.
//!
//! Pick an integral `u` with `C(u) != 0` and an index `p` with `u_p = +-1`,
//! so that `u` and the `e_l` (`l != p`) form a basis of `Z^n`. Any linear
//! factor has `nu(u) != 0`; scaled to `nu(u) = 1`, the binary cubic
//! `q_l(s) = C(s u + e_l)` vanishes at `s = -nu(e_l)`. The rational roots of
//! each `q_l` give finitely many candidates per coordinate; those are
//! combined under the pairwise test `C(-(r_l + r_m) u + e_l + e_m) = 0` and
//! every survivor is confirmed by exact division.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Factorization;
use crate::arith::{primitive_integer, rat, rational_roots};
use crate::error::{Error, Result};
use crate::forms::{LinearFunctional, TrilinearForm, Vector};

/// Every primitive integral `nu` dividing `mu(a,a,a)` over `Q`, with its
/// residual form, sorted lexicographically by the coefficients of `nu`.
///
/// With `kahler_sample` given, `nu` is signed so that `nu(sample) > 0`;
/// otherwise (or if `nu` vanishes on the sample) its first nonzero
/// coefficient is positive.
pub fn find_linear_factors(
    mu: &TrilinearForm,
    kahler_sample: Option<&Vector>,
) -> Result<Vec<Factorization>> {
    if mu.is_zero() {
        return Err(Error::ZeroCubic);
    }
    let n = mu.rank();
    if let Some(k) = kahler_sample {
        if k.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: k.rank(),
            });
        }
    }
    let c = mu.cubic_polynomial();
    let u = nonvanishing_point(mu);
    let p = u
        .entries()
        .iter()
        .position(|v| v.abs().is_one())
        .expect("nonvanishing point has a unit entry");

    let cube = |x: &[BigRational]| mu.eval_slices(x, x, x);
    let others: Vec<usize> = (0..n).filter(|&l| l != p).collect();

    // r_l candidates: negated roots of q_l
    let mut per_coord: Vec<Vec<BigRational>> = Vec::with_capacity(others.len());
    for &l in &others {
        let d = Vector::unit(n, l);
        let (ue, de) = (u.entries(), d.entries());
        let q = [
            mu.eval_slices(de, de, de),
            rat(3) * mu.eval_slices(ue, de, de),
            rat(3) * mu.eval_slices(ue, ue, de),
            mu.eval_slices(ue, ue, ue),
        ];
        let roots: Vec<BigRational> = rational_roots(&q).into_iter().map(|r| -r).collect();
        if roots.is_empty() {
            return Ok(Vec::new());
        }
        per_coord.push(roots);
    }

    let pair_ok = |li: usize, ri: &BigRational, lj: usize, rj: &BigRational| {
        let s = -(ri + rj);
        let mut x: Vec<BigRational> = u.entries().iter().map(|v| v * &s).collect();
        x[others[li]] += BigRational::one();
        x[others[lj]] += BigRational::one();
        cube(&x).is_zero()
    };

    let mut assignments: Vec<Vec<BigRational>> = Vec::new();
    let mut stack: Vec<BigRational> = Vec::with_capacity(others.len());
    lift(&per_coord, &mut stack, &mut assignments, &pair_ok);

    let mut seen = BTreeSet::new();
    let mut found = Vec::new();
    for r in assignments {
        // nu(u) = 1 and nu(e_l) = r_l fix the coordinates of nu
        let mut coeffs = vec![BigRational::zero(); n];
        let mut rest = BigRational::one();
        for (idx, &l) in others.iter().enumerate() {
            rest -= &r[idx] * &u[l];
            coeffs[l] = r[idx].clone();
        }
        coeffs[p] = rest / &u[p];
        let Some(ints) = primitive_integer(&coeffs) else {
            continue;
        };
        let nu = LinearFunctional::from_bigints(&ints)?
            .primitive()
            .expect("nonzero");
        if !seen.insert(nu.integer_coeffs()?) {
            continue;
        }
        if c.div_linear(&nu).is_ok() {
            found.push(nu);
        }
    }

    let mut out = Vec::with_capacity(found.len());
    for nu in found {
        let nu = match kahler_sample {
            Some(k) if nu.eval(k)?.is_negative() => nu.neg(),
            _ => nu,
        };
        out.push(Factorization::new(&c, nu)?);
    }
    out.sort_by(|a, b| {
        let ka = a.nu.integer_coeffs().unwrap_or_default();
        let kb = b.nu.integer_coeffs().unwrap_or_default();
        ka.cmp(&kb)
    });
    Ok(out)
}

fn lift<F>(
    per_coord: &[Vec<BigRational>],
    stack: &mut Vec<BigRational>,
    out: &mut Vec<Vec<BigRational>>,
    pair_ok: &F,
) where
    F: Fn(usize, &BigRational, usize, &BigRational) -> bool,
{
    let depth = stack.len();
    if depth == per_coord.len() {
        out.push(stack.clone());
        return;
    }
    for r in &per_coord[depth] {
        if (0..depth).all(|j| pair_ok(j, &stack[j], depth, r)) {
            stack.push(r.clone());
            lift(per_coord, stack, out, pair_ok);
            stack.pop();
        }
    }
}

/// An integral point where the cubic does not vanish, with some entry `+-1`.
///
/// Unit vectors are tried first, then the grid `{0, 1, -1, 2}^n`; a nonzero
/// cubic cannot vanish on a product of four-point sets.
fn nonvanishing_point(mu: &TrilinearForm) -> Vector {
    let n = mu.rank();
    let nonzero = |v: &[BigRational]| !mu.eval_slices(v, v, v).is_zero();
    for i in 0..n {
        let e = Vector::unit(n, i);
        if nonzero(e.entries()) {
            return e;
        }
    }
    const GRID: [i64; 4] = [0, 1, -1, 2];
    let mut idx = vec![0usize; n];
    loop {
        // odometer step
        let mut k = 0;
        while k < n {
            idx[k] += 1;
            if idx[k] < GRID.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        assert!(k < n, "nonzero cubic vanished on the whole grid");
        let v: Vec<BigRational> = idx.iter().map(|&g| rat(GRID[g])).collect();
        if nonzero(&v) {
            if v.iter().any(|x| x.abs().is_one()) {
                return Vector::new(v);
            }
            // entries in {0, 2}
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            return Vector::new(v.iter().map(|x| x * &half).collect());
        }
    }
}
