use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("index triple ({0}, {1}, {2}) out of range")]
    IndexOutOfRange(usize, usize, usize),
    #[error("duplicate coefficient for index triple ({0}, {1}, {2})")]
    DuplicateEntry(usize, usize, usize),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix rows have inconsistent lengths")]
    Ragged,
    #[error("gram matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("group generator has determinant {0}, expected +1 or -1")]
    NotUnimodular(BigInt),
    #[error("cubic form is identically zero; factorization undefined")]
    ZeroCubic,
    #[error("linear form is zero")]
    ZeroLinear,
    #[error("quadratic form is zero")]
    ZeroQuadratic,
    #[error("linear form does not divide the cubic: nonzero remainder term {0}")]
    NotDivisible(String),
    #[error("expected integer coefficients, found {0}")]
    NonIntegral(String),
    #[error("unsupported partition {0:?}: only partitions of 1, 2 and 3 are supported")]
    UnsupportedPartition(Vec<u32>),
    #[error("triple intersection number must be positive, got {0}")]
    NonPositiveDegree(BigInt),
    #[error("sample must be flagged ample before promotion")]
    NotAmple,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
