use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{CubicPolynomial, IntMatrix, QuadraticForm, Vector};
use crate::arith::rat_int;
use crate::error::{Error, Result};

/// Symmetric integer trilinear form on a rank-`n` lattice.
///
/// Stores the cup-product values `mu(e_i, e_j, e_k)` on non-decreasing index
/// triples (0-based). Absent keys are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrilinearForm {
    rank: usize,
    coeffs: BTreeMap<(usize, usize, usize), BigInt>,
}

fn sorted(i: usize, j: usize, k: usize) -> (usize, usize, usize) {
    let mut t = [i, j, k];
    t.sort_unstable();
    (t[0], t[1], t[2])
}

/// Distinct orderings of a sorted triple.
fn permutations(t: (usize, usize, usize)) -> Vec<(usize, usize, usize)> {
    let (i, j, k) = t;
    let mut all = vec![
        (i, j, k),
        (i, k, j),
        (j, i, k),
        (j, k, i),
        (k, i, j),
        (k, j, i),
    ];
    all.sort_unstable();
    all.dedup();
    all
}

impl TrilinearForm {
    pub fn zero(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(TrilinearForm {
            rank,
            coeffs: BTreeMap::new(),
        })
    }

    /// Builds a form from `(i, j, k, value)` entries with 0-based indices in
    /// any order. Repeating a triple (up to permutation) is an error.
    pub fn from_entries<I>(rank: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, BigInt)>,
    {
        let mut form = Self::zero(rank)?;
        for (i, j, k, v) in entries {
            if i >= rank || j >= rank || k >= rank {
                return Err(Error::IndexOutOfRange(i, j, k));
            }
            let key = sorted(i, j, k);
            if form.coeffs.contains_key(&key) {
                return Err(Error::DuplicateEntry(key.0, key.1, key.2));
            }
            if !v.is_zero() {
                form.coeffs.insert(key, v);
            }
        }
        Ok(form)
    }

    pub fn from_i64(rank: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        Self::from_entries(
            rank,
            entries.iter().map(|&(i, j, k, v)| (i, j, k, BigInt::from(v))),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `mu(e_i, e_j, e_k)` for any index order.
    pub fn get(&self, i: usize, j: usize, k: usize) -> BigInt {
        self.coeffs
            .get(&sorted(i, j, k))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero stored coefficients on non-decreasing triples.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &BigInt)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    fn check(&self, v: &Vector) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: v.rank(),
            });
        }
        Ok(())
    }

    pub fn eval(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<BigRational> {
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        Ok(self.eval_slices(x.entries(), y.entries(), z.entries()))
    }

    pub(crate) fn eval_slices(
        &self,
        x: &[BigRational],
        y: &[BigRational],
        z: &[BigRational],
    ) -> BigRational {
        let mut acc = BigRational::zero();
        for (&t, v) in &self.coeffs {
            let mut s = BigRational::zero();
            for (a, b, c) in permutations(t) {
                s += &x[a] * &y[b] * &z[c];
            }
            acc += s * rat_int(v);
        }
        acc
    }

    /// Integer-only variant of [`TrilinearForm::eval`] for integral vectors.
    pub fn eval_integers(&self, x: &[BigInt], y: &[BigInt], z: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (&t, v) in &self.coeffs {
            let mut s = BigInt::zero();
            for (a, b, c) in permutations(t) {
                s += &x[a] * &y[b] * &z[c];
            }
            acc += s * v;
        }
        acc
    }

    /// `mu(a, a, a)`.
    pub fn cubic_value(&self, a: &Vector) -> Result<BigRational> {
        self.eval(a, a, a)
    }

    /// The cubic `C(a) = mu(a, a, a)`; a stored triple contributes with its
    /// multinomial factor 1, 3 or 6.
    pub fn cubic_polynomial(&self) -> CubicPolynomial {
        let mut p = CubicPolynomial::zero(self.rank);
        for (&t, v) in &self.coeffs {
            let mult = permutations(t).len() as i64;
            let mut e = vec![0u32; self.rank];
            e[t.0] += 1;
            e[t.1] += 1;
            e[t.2] += 1;
            p.add_term(e, rat_int(&(v * mult)));
        }
        p
    }

    /// The bilinear form `mu(L, -, -)`.
    pub fn contract(&self, l: &Vector) -> Result<QuadraticForm> {
        self.check(l)?;
        let n = self.rank;
        let mut gram = vec![vec![BigRational::zero(); n]; n];
        for (&t, v) in &self.coeffs {
            let v = rat_int(v);
            for (a, b, c) in permutations(t) {
                if !l[a].is_zero() {
                    gram[b][c] += &l[a] * &v;
                }
            }
        }
        QuadraticForm::new(gram)
    }

    /// The form `mu'(x, y, z) = mu(Mx, My, Mz)`.
    pub fn change_basis(&self, m: &IntMatrix) -> Result<TrilinearForm> {
        if m.rows() != self.rank || m.cols() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: m.rows().max(m.cols()),
            });
        }
        m.ensure_invertible()?;
        let cols: Vec<Vector> = (0..self.rank).map(|j| m.column(j)).collect();
        let mut out = TrilinearForm::zero(self.rank)?;
        for i in 0..self.rank {
            for j in i..self.rank {
                for k in j..self.rank {
                    let v = self.eval_slices(
                        cols[i].entries(),
                        cols[j].entries(),
                        cols[k].entries(),
                    );
                    debug_assert!(v.is_integer());
                    if !v.is_zero() {
                        out.coeffs.insert((i, j, k), v.to_integer());
                    }
                }
            }
        }
        Ok(out)
    }
}
