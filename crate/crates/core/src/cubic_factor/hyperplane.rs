use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::forms::{IntMatrix, LinearFunctional, QuadraticForm};

/// Integral basis of `ker(nu)`, as the columns of an `n x (n-1)` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneBasis {
    pub matrix: IntMatrix,
    /// A unimodular `n x n` matrix whose columns other than `completion_index`
    /// are the kernel columns, in order.
    pub completion: IntMatrix,
    pub completion_index: usize,
}

impl HyperplaneBasis {
    /// Kernel basis by unimodular column reduction of the row vector `nu`.
    ///
    /// Each step picks the nonzero entry of smallest absolute value (lowest
    /// index on ties) and reduces the others modulo it. Columns are then
    /// signed so that their first nonzero entry is positive.
    pub fn of(nu: &LinearFunctional) -> Result<Self> {
        let prim = nu.primitive().ok_or(Error::ZeroLinear)?;
        let mut row = prim.integer_coeffs()?;
        let n = row.len();
        let mut u = IntMatrix::identity(n);
        let pivot = loop {
            let k = (0..n)
                .filter(|&i| !row[i].is_zero())
                .min_by(|&a, &b| row[a].abs().cmp(&row[b].abs()).then(a.cmp(&b)))
                .expect("primitive form is nonzero");
            let mut reduced = false;
            for j in 0..n {
                if j == k || row[j].is_zero() {
                    continue;
                }
                let q = row[j].div_floor(&row[k]);
                let step = &q * &row[k];
                row[j] -= step;
                for i in 0..n {
                    let v = u.get(i, j) - &q * u.get(i, k);
                    u.set(i, j, v);
                }
                reduced = true;
            }
            if !reduced {
                break k;
            }
        };
        for j in 0..n {
            if j == pivot {
                continue;
            }
            let negative = (0..n)
                .map(|i| u.get(i, j))
                .find(|v| !v.is_zero())
                .is_some_and(Signed::is_negative);
            if negative {
                for i in 0..n {
                    let v = -u.get(i, j);
                    u.set(i, j, v);
                }
            }
        }
        let cols: Vec<usize> = (0..n).filter(|&j| j != pivot).collect();
        let mut matrix = IntMatrix::zeros(n, n - 1);
        for (c, &j) in cols.iter().enumerate() {
            for i in 0..n {
                matrix.set(i, c, u.get(i, j).clone());
            }
        }
        Ok(HyperplaneBasis {
            matrix,
            completion: u,
            completion_index: pivot,
        })
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.matrix.cols())
            .map(|j| (0..self.matrix.rows()).map(|i| self.matrix.get(i, j).clone()).collect())
            .collect()
    }
}

/// `B^t A_xi B` for the kernel basis `B` of `nu`.
pub fn restrict_to_hyperplane(
    xi: &QuadraticForm,
    nu: &LinearFunctional,
) -> Result<(HyperplaneBasis, QuadraticForm)> {
    if nu.rank() != xi.rank() {
        return Err(Error::RankMismatch {
            expected: xi.rank(),
            found: nu.rank(),
        });
    }
    let basis = HyperplaneBasis::of(nu)?;
    let restricted = xi.congruent(&basis.matrix)?;
    Ok((basis, restricted))
}
