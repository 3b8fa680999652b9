//! Finite group actions on `H^2(X, Z)` given by integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::cubic_factor::{find_linear_factors, Factorization};
use crate::error::{Error, Result};
use crate::forms::{IntMatrix, LinearFunctional, QuadraticForm, TrilinearForm, Vector};
use crate::record::ThreefoldRecord;
use crate::report::{Status, StructureReport};

pub const CITE_GROUP: &str =
    "invariance of the linear factor under a finite group preserving the cubic form";

/// A representation by its generators; each has determinant `+1` or `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRep {
    rank: usize,
    generators: Vec<IntMatrix>,
    pub order_hint: Option<u64>,
}

impl GroupRep {
    pub fn new(rank: usize, generators: Vec<IntMatrix>, order_hint: Option<u64>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        for g in &generators {
            if g.rows() != rank || g.cols() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: g.rows().max(g.cols()),
                });
            }
            let det = g.determinant()?;
            if det.abs() != BigInt::one() {
                return Err(Error::NotUnimodular(det));
            }
        }
        Ok(GroupRep {
            rank,
            generators,
            order_hint,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }
}

fn check_square(rank: usize, m: &IntMatrix) -> Result<()> {
    if m.rows() != rank || m.cols() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: m.rows().max(m.cols()),
        });
    }
    m.ensure_invertible()
}

/// `Ok(None)` if `mu(Me_i, Me_j, Me_k) = mu(e_i, e_j, e_k)` for all
/// `i <= j <= k`; otherwise the first violating triple, 0-based.
pub fn preserves_mu(mu: &TrilinearForm, m: &IntMatrix) -> Result<Option<(usize, usize, usize)>> {
    let n = mu.rank();
    check_square(n, m)?;
    let cols: Vec<Vector> = (0..n).map(|j| m.column(j)).collect();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let image = mu.eval(&cols[i], &cols[j], &cols[k])?;
                if image != crate::arith::rat_int(&mu.get(i, j, k)) {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}

/// `nu(M e_i) = nu(e_i)` for every `i`.
pub fn preserves_linear(nu: &LinearFunctional, m: &IntMatrix) -> Result<bool> {
    check_square(nu.rank(), m)?;
    Ok(nu.compose(m)? == *nu)
}

/// `M^t A_xi M = A_xi`.
pub fn in_orthogonal_group(xi: &QuadraticForm, m: &IntMatrix) -> Result<bool> {
    check_square(xi.rank(), m)?;
    Ok(xi.congruent(m)? == *xi)
}

/// Per-generator outcome inside [`Prop42Report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub index: usize,
    /// First basis triple on which `mu` is not preserved.
    pub mu_violation: Option<(usize, usize, usize)>,
    pub preserves_nu: bool,
    pub orthogonal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop42Report {
    pub nu: LinearFunctional,
    pub status: Status,
    pub generators: Vec<GeneratorCheck>,
    /// Some generator preserves `mu` yet moves every linear factor of it.
    /// This cannot happen for an action coming from automorphisms of a
    /// threefold with an invariant Kähler class.
    pub inconsistent: bool,
}

impl Prop42Report {
    pub fn to_structure(&self) -> StructureReport {
        let detail = self
            .generators
            .iter()
            .map(|g| {
                format!(
                    "g{}: mu {}, nu {}, O(xi) {}",
                    g.index + 1,
                    match g.mu_violation {
                        None => "preserved".to_string(),
                        Some((i, j, k)) => format!("moved at ({},{},{})", i + 1, j + 1, k + 1),
                    },
                    if g.preserves_nu { "fixed" } else { "moved" },
                    if g.orthogonal { "yes" } else { "no" },
                )
            })
            .collect::<Vec<_>>()
            .join("; ");
        let mut r = StructureReport::new(
            format!("group_orthogonal[{}]", self.nu),
            self.status,
            if detail.is_empty() { "trivial group".into() } else { detail },
            CITE_GROUP,
        );
        if self.inconsistent {
            r.notes.push(
                "a generator preserves mu but moves every linear factor: no invariant Kahler class can exist"
                    .into(),
            );
        }
        r
    }
}

/// Checks each generator: `mu` preserved (hypothesis), `nu` fixed and `xi`
/// preserved (conclusions). Not applicable when some generator moves `mu`.
pub fn prop42_verify(rec: &ThreefoldRecord, f: &Factorization, rep: &GroupRep) -> Result<Prop42Report> {
    let mu = rec.mu.as_ref().ok_or(Error::ZeroCubic)?;
    if rep.rank() != mu.rank() {
        return Err(Error::RankMismatch {
            expected: mu.rank(),
            found: rep.rank(),
        });
    }
    let mut generators = Vec::with_capacity(rep.generators.len());
    for (index, g) in rep.generators.iter().enumerate() {
        generators.push(GeneratorCheck {
            index,
            mu_violation: preserves_mu(mu, g)?,
            preserves_nu: preserves_linear(&f.nu, g)?,
            orthogonal: in_orthogonal_group(&f.xi, g)?,
        });
    }
    let hypothesis = generators.iter().all(|g| g.mu_violation.is_none());
    let conclusion = generators.iter().all(|g| g.preserves_nu && g.orthogonal);
    let mut inconsistent = false;
    if hypothesis && !conclusion {
        let all = find_linear_factors(mu, None)?;
        for g in &rep.generators {
            let mut fixes_some = false;
            for other in &all {
                if preserves_linear(&other.nu, g)? {
                    fixes_some = true;
                    break;
                }
            }
            if !fixes_some {
                inconsistent = true;
            }
        }
    }
    let status = if !hypothesis {
        Status::NotApplicable
    } else {
        Status::from_bool(conclusion)
    };
    Ok(Prop42Report {
        nu: f.nu.clone(),
        status,
        generators,
        inconsistent,
    })
}
