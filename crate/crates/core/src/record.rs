//! The invariant data of one threefold and its sample classes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::forms::{LinearFunctional, Signature, TrilinearForm, Vector};
use crate::group_action::GroupRep;

/// Geometric hypotheses that cannot be read off the lattice data and are
/// asserted by whoever supplies the record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SampleFlag {
    Nef,
    Ample,
    VeryAmple,
    LinearSystemFreeDimGe2,
    CanonicalMapBirational,
    QuadricsIntersection,
    KahlerSample,
}

impl SampleFlag {
    pub const ALL: [SampleFlag; 7] = [
        SampleFlag::Nef,
        SampleFlag::Ample,
        SampleFlag::VeryAmple,
        SampleFlag::LinearSystemFreeDimGe2,
        SampleFlag::CanonicalMapBirational,
        SampleFlag::QuadricsIntersection,
        SampleFlag::KahlerSample,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SampleFlag::Nef => "nef",
            SampleFlag::Ample => "ample",
            SampleFlag::VeryAmple => "very_ample",
            SampleFlag::LinearSystemFreeDimGe2 => "linear_system_free_dim_ge2",
            SampleFlag::CanonicalMapBirational => "canonical_map_birational",
            SampleFlag::QuadricsIntersection => "quadrics_intersection",
            SampleFlag::KahlerSample => "kahler_sample",
        }
    }
}

impl fmt::Display for SampleFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SampleFlag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SampleFlag::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown sample flag `{s}`"))
    }
}

/// Adds the implied flags: very ample gives ample, a free linear system of
/// dimension at least 2 and a birational canonical map; ample gives nef.
pub fn flag_closure(flags: impl IntoIterator<Item = SampleFlag>) -> BTreeSet<SampleFlag> {
    let mut out: BTreeSet<SampleFlag> = flags.into_iter().collect();
    if out.contains(&SampleFlag::VeryAmple) {
        out.insert(SampleFlag::Ample);
        out.insert(SampleFlag::LinearSystemFreeDimGe2);
        out.insert(SampleFlag::CanonicalMapBirational);
    }
    if out.contains(&SampleFlag::Ample) {
        out.insert(SampleFlag::Nef);
    }
    out
}

/// An integral class together with the hypotheses asserted about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleClass {
    pub name: String,
    vector: Vec<BigInt>,
    flags: BTreeSet<SampleFlag>,
}

impl SampleClass {
    pub fn new(
        name: impl Into<String>,
        vector: Vec<BigInt>,
        flags: impl IntoIterator<Item = SampleFlag>,
    ) -> Self {
        SampleClass {
            name: name.into(),
            vector,
            flags: flag_closure(flags),
        }
    }

    pub fn from_i64(name: &str, vector: &[i64], flags: &[SampleFlag]) -> Self {
        Self::new(
            name,
            vector.iter().map(|&v| BigInt::from(v)).collect(),
            flags.iter().copied(),
        )
    }

    pub fn integer_vector(&self) -> &[BigInt] {
        &self.vector
    }

    pub fn vector(&self) -> Vector {
        Vector::from_bigints(&self.vector)
    }

    pub fn flags(&self) -> &BTreeSet<SampleFlag> {
        &self.flags
    }

    pub fn has(&self, flag: SampleFlag) -> bool {
        self.flags.contains(&flag)
    }

    /// Missing flags among `required`, in the given order.
    pub fn missing(&self, required: &[SampleFlag]) -> Vec<SampleFlag> {
        required.iter().copied().filter(|f| !self.has(*f)).collect()
    }

    /// Passes from an ample class `H` to `10H`, flagged very ample.
    ///
    /// Backed by the theorem of Oguiso and Peternell that `10H` is very ample
    /// for any ample `H` on a Calabi-Yau threefold; this is a flag promotion
    /// resting on that theorem, nothing is verified here.
    pub fn promote_very_ample(&self) -> Result<SampleClass> {
        if !self.has(SampleFlag::Ample) {
            return Err(Error::NotAmple);
        }
        let mut flags = self.flags.clone();
        flags.insert(SampleFlag::VeryAmple);
        flags.remove(&SampleFlag::QuadricsIntersection);
        Ok(SampleClass::new(
            format!("10*{}", self.name),
            self.vector.iter().map(|v| v * 10).collect(),
            flags,
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProvenanceSource {
    /// Value as tabulated in the cited literature.
    Literature,
    /// Value computed by the maintainers of this corpus.
    Derived,
}

impl ProvenanceSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProvenanceSource::Literature => "literature",
            ProvenanceSource::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub field: String,
    pub source: ProvenanceSource,
    pub note: String,
}

/// Topological invariant system of a threefold.
///
/// `mu`, `c2` and `c3` are optional so that partially known examples can be
/// carried; every check that needs a missing field reports not applicable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreefoldRecord {
    pub name: String,
    pub b2: usize,
    pub mu: Option<TrilinearForm>,
    pub c2: Option<LinearFunctional>,
    pub c3: Option<BigInt>,
    /// First Chern class as a degree-2 class; zero for Calabi-Yau threefolds.
    pub c1: Vector,
    /// Explicit Pontrjagin functional; defaults to `-2 c2` for Calabi-Yau data.
    pub p1: Option<LinearFunctional>,
    pub is_calabi_yau: bool,
    pub torsion_free: bool,
    pub irregularity_zero: bool,
    pub samples: Vec<SampleClass>,
    pub group: Option<GroupRep>,
    pub expected_factor_signatures: Vec<Signature>,
    pub provenance: Vec<Provenance>,
    pub notes: Vec<String>,
}

/// A record-level consistency problem, naming the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordIssue {
    pub field: String,
    pub message: String,
}

impl ThreefoldRecord {
    /// Calabi-Yau skeleton with no samples or optional data.
    pub fn calabi_yau(
        name: impl Into<String>,
        mu: TrilinearForm,
        c2: LinearFunctional,
        c3: Option<BigInt>,
    ) -> Self {
        let b2 = mu.rank();
        ThreefoldRecord {
            name: name.into(),
            b2,
            mu: Some(mu),
            c2: Some(c2),
            c3,
            c1: Vector::zero(b2),
            p1: None,
            is_calabi_yau: true,
            torsion_free: true,
            irregularity_zero: true,
            samples: Vec::new(),
            group: None,
            expected_factor_signatures: Vec::new(),
            provenance: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_sample(mut self, s: SampleClass) -> Self {
        self.samples.push(s);
        self
    }

    /// Checks rank agreement, integrality and the Calabi-Yau conventions.
    pub fn validate(&self) -> std::result::Result<(), RecordIssue> {
        let issue = |field: &str, message: String| {
            Err(RecordIssue {
                field: field.to_string(),
                message,
            })
        };
        if self.b2 == 0 {
            return issue("b2", "must be positive".into());
        }
        if let Some(mu) = &self.mu {
            if mu.rank() != self.b2 {
                return issue("mu", format!("rank {} != b2 {}", mu.rank(), self.b2));
            }
        }
        for (field, lf) in [("c2", &self.c2), ("p1", &self.p1)] {
            if let Some(lf) = lf {
                if lf.rank() != self.b2 {
                    return issue(field, format!("length {} != b2 {}", lf.rank(), self.b2));
                }
                if !lf.is_integral() {
                    return issue(field, "coefficients must be integers".into());
                }
            }
        }
        if self.c1.rank() != self.b2 {
            return issue("c1", format!("length {} != b2 {}", self.c1.rank(), self.b2));
        }
        if self.is_calabi_yau {
            if !self.c1.is_zero() {
                return issue("c1", "a Calabi-Yau record must have c1 = 0".into());
            }
            if !self.irregularity_zero {
                return issue(
                    "irregularity_zero",
                    "a Calabi-Yau record has H^1(O_X) = 0".into(),
                );
            }
        }
        for (i, s) in self.samples.iter().enumerate() {
            if s.integer_vector().len() != self.b2 {
                return issue(
                    &format!("samples[{i}].vector"),
                    format!("length {} != b2 {}", s.integer_vector().len(), self.b2),
                );
            }
        }
        if let Some(g) = &self.group {
            if g.rank() != self.b2 {
                return issue("group", format!("rank {} != b2 {}", g.rank(), self.b2));
            }
        }
        for (i, sig) in self.expected_factor_signatures.iter().enumerate() {
            if sig.rank() != self.b2 {
                return issue(
                    &format!("expected_factor_signatures[{i}]"),
                    format!("entries sum to {} != b2 {}", sig.rank(), self.b2),
                );
            }
        }
        Ok(())
    }

    /// Pontrjagin functional for the Wall conditions: explicit if given,
    /// otherwise `-2 c2` on Calabi-Yau data.
    pub fn pontrjagin(&self) -> Option<LinearFunctional> {
        self.p1.clone().or_else(|| {
            if self.is_calabi_yau {
                self.c2.as_ref().map(|c2| c2.scale(&BigRational::from_integer((-2).into())))
            } else {
                None
            }
        })
    }

    /// The class fixing the sign of linear factors: the first sample flagged
    /// `kahler_sample` (falling back to the first ample one) on which the
    /// cubic form is positive.
    pub fn kahler_sample(&self) -> Option<&SampleClass> {
        let mu = self.mu.as_ref()?;
        let positive = |s: &&SampleClass| {
            mu.cubic_value(&s.vector())
                .map(|v| v.is_positive())
                .unwrap_or(false)
        };
        self.samples
            .iter()
            .filter(|s| s.has(SampleFlag::KahlerSample))
            .find(positive)
            .or_else(|| {
                self.samples
                    .iter()
                    .filter(|s| s.has(SampleFlag::Ample))
                    .find(positive)
            })
    }

    /// Whether `c2` vanishes identically.
    pub fn c2_is_zero(&self) -> Option<bool> {
        self.c2.as_ref().map(|c| c.coeffs().iter().all(Zero::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_very_ample() {
        let s = SampleClass::from_i64("H", &[1], &[SampleFlag::VeryAmple]);
        for f in [
            SampleFlag::Nef,
            SampleFlag::Ample,
            SampleFlag::LinearSystemFreeDimGe2,
            SampleFlag::CanonicalMapBirational,
        ] {
            assert!(s.has(f), "{f} missing");
        }
        assert!(!s.has(SampleFlag::QuadricsIntersection));
    }

    #[test]
    fn flag_names_round_trip() {
        for f in SampleFlag::ALL {
            assert_eq!(f.as_str().parse::<SampleFlag>().unwrap(), f);
        }
        assert!("big".parse::<SampleFlag>().is_err());
    }

    #[test]
    fn promotion_scales_by_ten() {
        let h = SampleClass::from_i64("H", &[1, 2], &[SampleFlag::Ample]);
        let p = h.promote_very_ample().unwrap();
        assert_eq!(p.integer_vector(), &[BigInt::from(10), BigInt::from(20)]);
        assert!(p.has(SampleFlag::VeryAmple));
        let nef = SampleClass::from_i64("D", &[1, 0], &[SampleFlag::Nef]);
        assert_eq!(nef.promote_very_ample(), Err(Error::NotAmple));
    }

    #[test]
    fn validation_catches_rank_and_cy_conventions() {
        let mu = TrilinearForm::from_i64(2, &[(0, 0, 0, 2), (0, 0, 1, 4)]).unwrap();
        let c2 = LinearFunctional::from_ints(&[44, 24, 0]).unwrap();
        let rec = ThreefoldRecord::calabi_yau("bad", mu.clone(), c2, None);
        assert_eq!(rec.validate().unwrap_err().field, "c2");
        let mut rec = ThreefoldRecord::calabi_yau(
            "bad",
            mu,
            LinearFunctional::from_ints(&[44, 24]).unwrap(),
            None,
        );
        assert!(rec.validate().is_ok());
        rec.c1 = Vector::from_ints(&[1, 0]);
        assert_eq!(rec.validate().unwrap_err().field, "c1");
    }
}
