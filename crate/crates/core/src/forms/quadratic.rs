use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntMatrix, Polynomial, Vector};
use crate::arith::{fmt_rat, rat, rat_int};
use crate::error::{Error, Result};

/// Inertia triple, reported as `(s+, s0, s-)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub plus: usize,
    pub zero: usize,
    pub minus: usize,
}

impl Signature {
    pub fn new(plus: usize, zero: usize, minus: usize) -> Self {
        Signature { plus, zero, minus }
    }

    pub fn rank(&self) -> usize {
        self.plus + self.zero + self.minus
    }

    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.plus == 0 || self.minus == 0)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.plus, self.zero, self.minus)
    }
}

/// `x^t A x` for a symmetric rational Gram matrix `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    gram: Vec<Vec<BigRational>>,
}

/// Result of symmetric congruence reduction: `P^t A P = diag(diagonal)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonalization {
    pub diagonal: Vec<BigRational>,
    /// Columns of `P`, i.e. the new basis vectors.
    pub basis: Vec<Vector>,
}

impl QuadraticForm {
    /// Rank 0 is allowed: restrictions of rank-1 forms to a hyperplane are empty.
    pub fn new(gram: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = gram.len();
        for row in &gram {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(QuadraticForm { gram })
    }

    pub fn from_i64(gram: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            gram.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut gram = vec![vec![BigRational::zero(); n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = rat(1);
        }
        QuadraticForm { gram }
    }

    pub fn zero(n: usize) -> Self {
        QuadraticForm {
            gram: vec![vec![BigRational::zero(); n]; n],
        }
    }

    /// Gram matrix of a homogeneous quadratic polynomial: squares on the
    /// diagonal, half the cross coefficients off it.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let n = p.nvars();
        let mut gram = vec![vec![BigRational::zero(); n]; n];
        for (e, c) in p.terms() {
            let idx: Vec<usize> = e
                .iter()
                .enumerate()
                .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
                .collect();
            match idx.as_slice() {
                [i, j] if i == j => gram[*i][*i] += c,
                [i, j] => {
                    let half = c / rat(2);
                    gram[*i][*j] += &half;
                    gram[*j][*i] += half;
                }
                _ => return Err(Error::NonIntegral(format!("non-quadratic term in {p}"))),
            }
        }
        Ok(QuadraticForm { gram })
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.rank();
        let mut p = Polynomial::zero(n);
        for i in 0..n {
            for j in i..n {
                let mut e = vec![0u32; n];
                e[i] += 1;
                e[j] += 1;
                let c = if i == j {
                    self.gram[i][i].clone()
                } else {
                    &self.gram[i][j] * rat(2)
                };
                p.add_term(e, c);
            }
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.gram[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.gram.iter().flatten().all(Zero::is_zero)
    }

    pub fn bilinear(&self, x: &Vector, y: &Vector) -> Result<BigRational> {
        for v in [x, y] {
            if v.rank() != self.rank() {
                return Err(Error::RankMismatch {
                    expected: self.rank(),
                    found: v.rank(),
                });
            }
        }
        let mut acc = BigRational::zero();
        for (i, row) in self.gram.iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            for (j, a) in row.iter().enumerate() {
                acc += &x[i] * a * &y[j];
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &Vector) -> Result<BigRational> {
        self.bilinear(x, x)
    }

    /// `B^t A B` for an integer `n x m` matrix `B`.
    pub fn congruent(&self, b: &IntMatrix) -> Result<QuadraticForm> {
        if b.rows() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: b.rows(),
            });
        }
        let cols: Vec<Vector> = (0..b.cols()).map(|j| b.column(j)).collect();
        let mut gram = vec![vec![BigRational::zero(); b.cols()]; b.cols()];
        for i in 0..cols.len() {
            for j in i..cols.len() {
                let v = self.bilinear(&cols[i], &cols[j])?;
                gram[j][i] = v.clone();
                gram[i][j] = v;
            }
        }
        Ok(QuadraticForm { gram })
    }

    pub fn scale(&self, s: &BigRational) -> QuadraticForm {
        QuadraticForm {
            gram: self
                .gram
                .iter()
                .map(|r| r.iter().map(|v| v * s).collect())
                .collect(),
        }
    }

    /// Symmetric Gaussian reduction over Q.
    ///
    /// Pivots on the first nonzero diagonal entry among the unreduced indices.
    /// When every such diagonal entry is zero but some `g_ij` (i < j) is not,
    /// substitutes `x_i -> x_i + x_j`, which makes `g_ii = 2 g_ij` nonzero.
    pub fn diagonalize(&self) -> Diagonalization {
        let n = self.rank();
        let mut a = self.gram.clone();
        let mut p: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| rat(i64::from(i == j))).collect())
            .collect();
        let mut active: Vec<bool> = vec![true; n];
        let mut diagonal = vec![BigRational::zero(); n];
        loop {
            let pivot = (0..n).find(|&i| active[i] && !a[i][i].is_zero());
            let Some(i) = pivot else {
                let pair = (0..n)
                    .filter(|&i| active[i])
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| active[j] && !a[i][j].is_zero());
                match pair {
                    Some((i, j)) => {
                        // column i += column j, then row i += row j
                        for row in a.iter_mut() {
                            let v = row[j].clone();
                            row[i] += v;
                        }
                        let rj = a[j].clone();
                        for (x, y) in a[i].iter_mut().zip(rj) {
                            *x += y;
                        }
                        for row in p.iter_mut() {
                            let v = row[j].clone();
                            row[i] += v;
                        }
                        continue;
                    }
                    None => break,
                }
            };
            let d = a[i][i].clone();
            for j in 0..n {
                if j == i || !active[j] || a[i][j].is_zero() {
                    continue;
                }
                let f = &a[i][j] / &d;
                // column j -= f * column i, row j -= f * row i
                for row in a.iter_mut() {
                    let v = &row[i] * &f;
                    row[j] -= v;
                }
                let ri = a[i].clone();
                for (x, y) in a[j].iter_mut().zip(ri) {
                    *x -= y * &f;
                }
                for row in p.iter_mut() {
                    let v = &row[i] * &f;
                    row[j] -= v;
                }
            }
            diagonal[i] = d;
            active[i] = false;
        }
        let basis = (0..n)
            .map(|j| Vector::new((0..n).map(|i| p[i][j].clone()).collect()))
            .collect();
        Diagonalization { diagonal, basis }
    }

    pub fn signature(&self) -> Signature {
        let d = self.diagonalize().diagonal;
        Signature {
            plus: d.iter().filter(|v| v.is_positive()).count(),
            zero: d.iter().filter(|v| v.is_zero()).count(),
            minus: d.iter().filter(|v| v.is_negative()).count(),
        }
    }

    /// Rank of the Gram matrix by row echelon reduction.
    pub fn matrix_rank(&self) -> usize {
        let n = self.rank();
        let mut a = self.gram.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(r) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, r);
            let pivot = a[rank][col].clone();
            for r2 in rank + 1..n {
                if a[r2][col].is_zero() {
                    continue;
                }
                let f = &a[r2][col] / &pivot;
                for c in col..n {
                    let v = &a[rank][c] * &f;
                    a[r2][c] -= v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// `dim Ker(A)` by rank-nullity.
    pub fn kernel_dimension(&self) -> usize {
        self.rank() - self.matrix_rank()
    }

    /// Integer Gram matrix if every entry is integral.
    pub fn to_int_matrix(&self) -> Option<IntMatrix> {
        let rows: Option<Vec<Vec<BigInt>>> = self
            .gram
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.is_integer().then(|| v.to_integer()))
                    .collect()
            })
            .collect();
        IntMatrix::new(rows?).ok()
    }

    pub fn from_int_matrix(m: &IntMatrix) -> Result<Self> {
        Self::new(
            m.to_rows()
                .iter()
                .map(|r| r.iter().map(rat_int).collect())
                .collect(),
        )
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .gram
            .iter()
            .map(|r| {
                let v: Vec<String> = r.iter().map(fmt_rat).collect();
                format!("[{}]", v.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
