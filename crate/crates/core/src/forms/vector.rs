use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{fmt_rat, rat};

/// Coordinates of a class in the chosen basis of the lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector(Vec<BigRational>);

impl Vector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        Vector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&v| rat(v)).collect())
    }

    pub fn from_bigints(entries: &[BigInt]) -> Self {
        Vector(
            entries
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect(),
        )
    }

    pub fn zero(rank: usize) -> Self {
        Vector(vec![BigRational::zero(); rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = rat(1);
        v
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigRational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Integer coordinates, if every entry is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.0
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }

    pub fn scale(&self, s: &BigRational) -> Vector {
        Vector(self.0.iter().map(|v| v * s).collect())
    }

    /// Entrywise `self + other`; panics on rank mismatch.
    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.rank(), other.rank(), "vector rank mismatch");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Index<usize> for Vector {
    type Output = BigRational;

    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl From<Vec<BigRational>> for Vector {
    fn from(v: Vec<BigRational>) -> Self {
        Vector(v)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rat).collect();
        write!(f, "({})", parts.join(", "))
    }
}
