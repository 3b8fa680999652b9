//! Batch execution of every check on one record, in a fixed order.

use serde_json::{json, Value};

use crate::arith::fmt_rat;
use crate::chern_bounds as cb;
use crate::congruences::{self, CITE_CY_RR, CITE_WALL_PARITY, CITE_WALL_PONTRJAGIN};
use crate::cubic_factor::{
    classify_prop41, find_linear_factors, lattice_gram, realzero_witness, Factorization,
    Isotropic, LatticeGram, CITE_FACTOR_CLASSIFICATION,
};
use crate::forms::{IntMatrix, QuadraticForm, Signature};
use crate::group_action::{prop42_verify, CITE_GROUP};
use crate::record::{SampleFlag, ThreefoldRecord};
use crate::report::{BoundReport, CheckReport, CongruenceReport, Status, StructureReport};

pub const CITE_FACTORS: &str = "rational linear factors of the cubic form mu(x,x,x)";
pub const CITE_LATTICE: &str = "integral lattice structure from a multiple of xi";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    /// Check ids that failed.
    Violations(Vec<String>),
    /// No failures, but these checks could not run.
    Partial(Vec<String>),
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::Violations(_) => "violations",
            Verdict::Partial(_) => "partial",
        }
    }

    pub fn checks(&self) -> &[String] {
        match self {
            Verdict::Consistent => &[],
            Verdict::Violations(v) | Verdict::Partial(v) => v,
        }
    }
}

/// A factorization together with the derived lattice data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSummary {
    pub factorization: Factorization,
    pub lattice: Option<LatticeGram>,
    pub isotropic: Option<Isotropic>,
}

impl FactorSummary {
    pub fn new(f: Factorization) -> Self {
        FactorSummary {
            lattice: lattice_gram(&f.xi).ok(),
            isotropic: realzero_witness(&f.xi),
            factorization: f,
        }
    }

    pub fn to_json(&self) -> Value {
        let f = &self.factorization;
        let sig = |s: &Signature| json!([s.plus, s.zero, s.minus]);
        json!({
            "nu": f.nu.to_string(),
            "nu_coefficients": f.nu.coeffs().iter().map(fmt_rat).collect::<Vec<_>>(),
            "xi": f.xi.to_polynomial().to_string(),
            "xi_gram": gram_json(&f.xi),
            "signature": sig(&f.signature),
            "kernel_dim": f.kernel_dim,
            "hyperplane_basis": f.hyperplane.columns().iter()
                .map(|c| c.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "xi_restricted_gram": gram_json(&f.xi_restricted),
            "restricted_signature": sig(&f.restricted_signature),
            "lattice_gram": self.lattice.as_ref().map(|l| int_matrix_json(&l.gram)),
            "lattice_scale": self.lattice.as_ref().map(|l| fmt_rat(&l.scale)),
            "isotropic_vector": self.isotropic.as_ref().map(isotropic_json),
        })
    }

    /// Indented multi-line text block.
    pub fn to_text(&self) -> String {
        let f = &self.factorization;
        let mut s = format!(
            "  nu = {}  xi = {}  signature {}  kernel_dim {}\n",
            f.nu,
            f.xi.to_polynomial(),
            f.signature,
            f.kernel_dim
        );
        let cols: Vec<String> = f
            .hyperplane
            .columns()
            .iter()
            .map(|c| format!("({})", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        s += &format!(
            "    hyperplane basis [{}]  restricted gram {}  signature {}\n",
            cols.join(", "),
            f.xi_restricted,
            f.restricted_signature
        );
        if let Some(l) = &self.lattice {
            s += &format!("    lattice gram {} = {} * xi\n", l.gram, fmt_rat(&l.scale));
        }
        match &self.isotropic {
            Some(Isotropic::Rational(v)) => {
                let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                s += &format!("    isotropic vector ({})\n", v.join(", "));
            }
            Some(Isotropic::Surd { base, radicand, direction }) => {
                s += &format!(
                    "    isotropic vector {} + sqrt({}) * {}\n",
                    base,
                    fmt_rat(radicand),
                    direction
                );
            }
            None => s += "    xi is definite\n",
        }
        s
    }
}

fn gram_json(q: &QuadraticForm) -> Value {
    json!(q
        .gram()
        .iter()
        .map(|r| r.iter().map(fmt_rat).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn int_matrix_json(m: &IntMatrix) -> Value {
    json!(m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn isotropic_json(i: &Isotropic) -> Value {
    match i {
        Isotropic::Rational(v) => json!({
            "kind": "rational",
            "vector": v.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        }),
        Isotropic::Surd { base, radicand, direction } => json!({
            "kind": "surd",
            "base": base.entries().iter().map(fmt_rat).collect::<Vec<_>>(),
            "radicand": fmt_rat(radicand),
            "direction": direction.entries().iter().map(fmt_rat).collect::<Vec<_>>(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub name: String,
    pub checks: Vec<CheckReport>,
    pub factorizations: Vec<FactorSummary>,
    pub verdict: Verdict,
}

impl RunReport {
    pub fn has_violations(&self) -> bool {
        matches!(self.verdict, Verdict::Violations(_))
    }

    pub fn bounds(&self) -> impl Iterator<Item = &BoundReport> {
        self.checks.iter().filter_map(|c| match c {
            CheckReport::Bound(b) => Some(b),
            _ => None,
        })
    }

    pub fn find(&self, check_id: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.check_id() == check_id)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "checks": self.checks.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
            "factorizations": self.factorizations.iter().map(FactorSummary::to_json).collect::<Vec<_>>(),
            "verdict": {
                "status": self.verdict.as_str(),
                "checks": self.verdict.checks(),
            },
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("# {}\n", self.name);
        for c in &self.checks {
            s += &c.text_line();
            s.push('\n');
        }
        s += &format!("verdict {}", self.verdict.as_str());
        if !self.verdict.checks().is_empty() {
            s += &format!(" ({})", self.verdict.checks().join(", "));
        }
        s.push('\n');
        s
    }
}

fn structure(id: impl Into<String>, status: Status, detail: impl Into<String>, cite: &str) -> CheckReport {
    StructureReport::new(id, status, detail, cite).into()
}

/// Runs every check in registry order. Checks whose inputs are missing
/// report not applicable; nothing here fails as a whole.
pub fn run_all(rec: &ThreefoldRecord) -> RunReport {
    let mut checks: Vec<CheckReport> = Vec::new();

    // congruences
    match &rec.mu {
        Some(mu) => checks.push(congruences::wall_parity(mu).into()),
        None => checks.push(CongruenceReport::not_applicable("wall_parity", CITE_WALL_PARITY, "no trilinear form").into()),
    }
    let pontrjagin = if !rec.torsion_free {
        Err("H^*(X, Z) not known to be torsion free".to_string())
    } else {
        match (&rec.mu, rec.pontrjagin()) {
            (Some(mu), Some(p1)) => congruences::wall_pontrjagin(mu, &p1).map_err(|e| e.to_string()),
            (None, _) => Err("no trilinear form".into()),
            (_, None) => Err("no p1 and not a Calabi-Yau record".into()),
        }
    };
    checks.push(
        pontrjagin
            .unwrap_or_else(|why| CongruenceReport::not_applicable("wall_pontrjagin", CITE_WALL_PONTRJAGIN, why))
            .into(),
    );
    let rr = match (&rec.mu, &rec.c2) {
        _ if !rec.is_calabi_yau => Err("record is not flagged Calabi-Yau".to_string()),
        (Some(mu), Some(c2)) => congruences::cy_riemann_roch(mu, c2).map_err(|e| e.to_string()),
        _ => Err("needs both mu and c2".into()),
    };
    checks.push(
        rr.unwrap_or_else(|why| CongruenceReport::not_applicable("cy_riemann_roch", CITE_CY_RR, why))
            .into(),
    );

    checks.push(cb::c2_positivity(rec).into());

    // surfaces in |x|
    let surface_samples: Vec<_> = rec
        .samples
        .iter()
        .filter(|s| s.has(SampleFlag::Ample) && s.has(SampleFlag::LinearSystemFreeDimGe2))
        .collect();
    for x in &surface_samples {
        if let Ok(pg) = cb::geometric_genus(rec, x) {
            checks.push(structure(
                format!("geometric_genus[{}]", x.name),
                Status::from_bool(pg.is_integer()),
                format!("p_g(S) = {}", fmt_rat(&pg)),
                cb::CITE_GENUS,
            ));
        }
        checks.push(cb::segre_check(rec, x).into());
    }
    for x in &surface_samples {
        checks.push(cb::c2_bound_noether(rec, x).into());
        checks.push(cb::c2_bound_castelnuovo(rec, x).into());
        checks.push(cb::c2_bound_reid(rec, x).into());
    }

    // nef-bundle inequalities
    for x in rec.samples.iter().filter(|s| s.has(SampleFlag::VeryAmple)) {
        for y in rec.samples.iter().filter(|s| s.has(SampleFlag::Ample)) {
            let r = if rec.is_calabi_yau {
                cb::cy_fl_inequalities(rec, x, y)
            } else {
                cb::dps_inequalities(rec, x, y)
            };
            match r {
                Ok(list) => checks.extend(list.into_iter().map(CheckReport::from)),
                Err(e) => checks.push(
                    BoundReport::not_applicable(format!("nef_bundle[{},{}]", x.name, y.name), cb::CITE_DPS, e.to_string()).into(),
                ),
            }
        }
    }

    for x in rec.samples.iter().filter(|s| s.has(SampleFlag::VeryAmple)) {
        checks.extend(cb::c3_window_check(rec, x).into_iter().map(CheckReport::from));
    }

    // factorization
    let mut factorizations = Vec::new();
    let kahler = rec.kahler_sample().map(|s| s.vector());
    match &rec.mu {
        None => checks.push(structure("linear_factors", Status::NotApplicable, "no trilinear form", CITE_FACTORS)),
        Some(mu) => match find_linear_factors(mu, kahler.as_ref()) {
            Err(e) => checks.push(structure("linear_factors", Status::NotApplicable, e.to_string(), CITE_FACTORS)),
            Ok(fs) => {
                let listed: Vec<String> = fs.iter().map(|f| format!("{} {}", f.nu, f.signature)).collect();
                checks.push(structure(
                    "linear_factors",
                    Status::Pass,
                    if listed.is_empty() {
                        "no rational linear factor".to_string()
                    } else {
                        listed.join("; ")
                    },
                    CITE_FACTORS,
                ));
                for f in &fs {
                    checks.extend(classify_prop41(rec, f).into_iter().map(CheckReport::from));
                    match lattice_gram(&f.xi) {
                        Ok(l) => checks.push(structure(
                            format!("lattice_gram[{}]", f.nu),
                            Status::Pass,
                            format!("{} = {} * xi", l.gram, fmt_rat(&l.scale)),
                            CITE_LATTICE,
                        )),
                        Err(e) => checks.push(structure(
                            format!("lattice_gram[{}]", f.nu),
                            Status::NotApplicable,
                            e.to_string(),
                            CITE_LATTICE,
                        )),
                    }
                }
                factorizations = fs.into_iter().map(FactorSummary::new).collect();
            }
        },
    }
    if !rec.expected_factor_signatures.is_empty() {
        let mut expected = rec.expected_factor_signatures.clone();
        expected.sort();
        let fmt = |v: &[Signature]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
        let report = if rec.mu.is_none() {
            structure(
                "factor_signatures",
                Status::NotApplicable,
                format!("expected {}; no trilinear form to factor", fmt(&expected)),
                CITE_FACTOR_CLASSIFICATION,
            )
        } else {
            let mut found: Vec<Signature> = factorizations.iter().map(|f| f.factorization.signature).collect();
            found.sort();
            structure(
                "factor_signatures",
                Status::from_bool(found == expected),
                format!("expected {} found {}", fmt(&expected), fmt(&found)),
                CITE_FACTOR_CLASSIFICATION,
            )
        };
        checks.push(report);
    }

    if let Some(rep) = &rec.group {
        if factorizations.is_empty() {
            checks.push(structure("group_orthogonal", Status::NotApplicable, "no linear factor", CITE_GROUP));
        }
        for f in &factorizations {
            match prop42_verify(rec, &f.factorization, rep) {
                Ok(r) => checks.push(r.to_structure().into()),
                Err(e) => checks.push(structure(
                    format!("group_orthogonal[{}]", f.factorization.nu),
                    Status::NotApplicable,
                    e.to_string(),
                    CITE_GROUP,
                )),
            }
        }
    }

    let failed: Vec<String> = checks
        .iter()
        .filter(|c| c.status() == Status::Fail)
        .map(|c| c.check_id().to_string())
        .collect();
    let skipped: Vec<String> = checks
        .iter()
        .filter(|c| c.status() == Status::NotApplicable)
        .map(|c| c.check_id().to_string())
        .collect();
    let verdict = if !failed.is_empty() {
        Verdict::Violations(failed)
    } else if !skipped.is_empty() {
        Verdict::Partial(skipped)
    } else {
        Verdict::Consistent
    };
    RunReport {
        name: rec.name.clone(),
        checks,
        factorizations,
        verdict,
    }
}
