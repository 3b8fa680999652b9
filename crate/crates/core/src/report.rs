//! Check outcomes shared by every verification module.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::arith::fmt_rat;
use crate::record::SampleFlag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not_applicable",
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Vectors on which a congruence failed, with the offending residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vectors: Vec<Vec<BigInt>>,
    pub residue: BigInt,
}

fn vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub check_id: String,
    pub status: Status,
    /// Non-empty exactly when `status` is `Fail`.
    pub witnesses: Vec<Witness>,
    pub citation: String,
    pub notes: Vec<String>,
    /// Number of random vectors (or pairs) evaluated directly as a cross-check.
    pub sampled: usize,
}

impl CongruenceReport {
    pub fn not_applicable(check_id: &str, citation: &str, reason: impl Into<String>) -> Self {
        CongruenceReport {
            check_id: check_id.to_string(),
            status: Status::NotApplicable,
            witnesses: Vec::new(),
            citation: citation.to_string(),
            notes: vec![reason.into()],
            sampled: 0,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "congruence",
            "check_id": self.check_id,
            "status": self.status.as_str(),
            "witnesses": self.witnesses.iter().map(|w| json!({
                "vectors": w.vectors.iter().map(|v| vec_json(v)).collect::<Vec<_>>(),
                "residue": w.residue.to_string(),
            })).collect::<Vec<_>>(),
            "citation": self.citation,
            "notes": self.notes,
            "sampled": self.sampled,
        })
    }
}

/// An inequality `lhs <= rhs` with exact slack `rhs - lhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub check_id: String,
    pub status: Status,
    pub lhs: Option<BigRational>,
    pub rhs: Option<BigRational>,
    pub slack: Option<BigRational>,
    pub citation: String,
    /// Geometric hypotheses asserted by the data and relied upon.
    pub flags_used: Vec<SampleFlag>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn evaluate(
        check_id: impl Into<String>,
        lhs: BigRational,
        rhs: BigRational,
        citation: &str,
        flags_used: &[SampleFlag],
    ) -> Self {
        let slack = &rhs - &lhs;
        BoundReport {
            check_id: check_id.into(),
            status: Status::from_bool(!slack.is_negative()),
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(slack),
            citation: citation.to_string(),
            flags_used: flags_used.to_vec(),
            notes: Vec::new(),
        }
    }

    pub fn not_applicable(
        check_id: impl Into<String>,
        citation: &str,
        reason: impl Into<String>,
    ) -> Self {
        BoundReport {
            check_id: check_id.into(),
            status: Status::NotApplicable,
            lhs: None,
            rhs: None,
            slack: None,
            citation: citation.to_string(),
            flags_used: Vec::new(),
            notes: vec![reason.into()],
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_tight(&self) -> bool {
        self.slack.as_ref().is_some_and(Zero::is_zero)
    }

    pub fn to_json(&self) -> Value {
        let opt = |v: &Option<BigRational>| v.as_ref().map(fmt_rat);
        json!({
            "kind": "bound",
            "check_id": self.check_id,
            "status": self.status.as_str(),
            "lhs": opt(&self.lhs),
            "rhs": opt(&self.rhs),
            "slack": opt(&self.slack),
            "citation": self.citation,
            "flags_used": self.flags_used.iter().map(|f| f.as_str()).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }
}

/// Outcome of a structural check (factorization, signature class, group
/// invariance) that has no numeric slack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub check_id: String,
    pub status: Status,
    pub detail: String,
    pub citation: String,
    pub notes: Vec<String>,
}

impl StructureReport {
    pub fn new(
        check_id: impl Into<String>,
        status: Status,
        detail: impl Into<String>,
        citation: &str,
    ) -> Self {
        StructureReport {
            check_id: check_id.into(),
            status,
            detail: detail.into(),
            citation: citation.to_string(),
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "structure",
            "check_id": self.check_id,
            "status": self.status.as_str(),
            "detail": self.detail,
            "citation": self.citation,
            "notes": self.notes,
        })
    }
}

/// Any check result, in the order the runner produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckReport {
    Congruence(CongruenceReport),
    Bound(BoundReport),
    Structure(StructureReport),
}

impl CheckReport {
    pub fn check_id(&self) -> &str {
        match self {
            CheckReport::Congruence(r) => &r.check_id,
            CheckReport::Bound(r) => &r.check_id,
            CheckReport::Structure(r) => &r.check_id,
        }
    }

    pub fn status(&self) -> Status {
        match self {
            CheckReport::Congruence(r) => r.status,
            CheckReport::Bound(r) => r.status,
            CheckReport::Structure(r) => r.status,
        }
    }

    pub fn citation(&self) -> &str {
        match self {
            CheckReport::Congruence(r) => &r.citation,
            CheckReport::Bound(r) => &r.citation,
            CheckReport::Structure(r) => &r.citation,
        }
    }

    /// `<check_id> <status> lhs=<v> rhs=<v> slack=<v> [cite]`
    pub fn text_line(&self) -> String {
        let dash = || "-".to_string();
        let (lhs, rhs, slack) = match self {
            CheckReport::Bound(b) => (
                b.lhs.as_ref().map_or_else(dash, fmt_rat),
                b.rhs.as_ref().map_or_else(dash, fmt_rat),
                b.slack.as_ref().map_or_else(dash, fmt_rat),
            ),
            _ => (dash(), dash(), dash()),
        };
        format!(
            "{} {} lhs={} rhs={} slack={} [{}]",
            self.check_id(),
            self.status(),
            lhs,
            rhs,
            slack,
            self.citation()
        )
    }

    pub fn to_json(&self) -> Value {
        match self {
            CheckReport::Congruence(r) => r.to_json(),
            CheckReport::Bound(r) => r.to_json(),
            CheckReport::Structure(r) => r.to_json(),
        }
    }
}

impl From<CongruenceReport> for CheckReport {
    fn from(r: CongruenceReport) -> Self {
        CheckReport::Congruence(r)
    }
}

impl From<BoundReport> for CheckReport {
    fn from(r: BoundReport) -> Self {
        CheckReport::Bound(r)
    }
}

impl From<StructureReport> for CheckReport {
    fn from(r: StructureReport) -> Self {
        CheckReport::Structure(r)
    }
}
