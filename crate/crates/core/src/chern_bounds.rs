//! Numerical inequalities between `mu`, `c2(X)` and `c3(X)`.
//!
//! Geometric hypotheses (ampleness, free linear systems, birational canonical
//! maps, quadric intersections) are not decidable from the invariant data.
//! They come in as [`SampleFlag`]s and every report lists the flags it used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{fmt_rat, rat, rat_int};
use crate::error::{Error, Result};
use crate::forms::{LinearFunctional, TrilinearForm, Vector};
use crate::record::{SampleClass, SampleFlag, ThreefoldRecord};
use crate::report::BoundReport;

pub const CITE_GENUS: &str = "Riemann-Roch + Kodaira vanishing: p_g(S) = mu/6 + c2.x/12 - 1";
pub const CITE_SEGRE: &str = "Miyaoka: s2(S) = -c2(X).x <= 0 for a smooth member S of |x|";
pub const CITE_POSITIVITY: &str = "Miyaoka: c2(X).x >= 0 for nef x";
pub const CITE_NOETHER: &str = "Noether inequality K_S^2 >= 2p_g(S) - 4";
pub const CITE_CASTELNUOVO: &str = "Castelnuovo inequality K_S^2 >= 3p_g(S) - 7";
pub const CITE_REID: &str = "Reid inequality K_S^2 >= 4p_g(S) + q(S) - 12";
pub const CITE_DPS: &str = "Demailly-Peternell-Schneider Schur positivity for nef Omega_X(2x)";
pub const CITE_CY_FL: &str = "Schur positivity for nef Omega_X(2x), Calabi-Yau case";
pub const CITE_WINDOW: &str = "Euler characteristic window for very amply polarized Calabi-Yau threefolds";

/// Why a check could not run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotApplicable(pub String);

fn missing_flags(x: &SampleClass, required: &[SampleFlag]) -> std::result::Result<(), NotApplicable> {
    let missing = x.missing(required);
    if missing.is_empty() {
        Ok(())
    } else {
        let names: Vec<&str> = missing.iter().map(SampleFlag::as_str).collect();
        Err(NotApplicable(format!(
            "sample {} lacks flag(s) {}",
            x.name,
            names.join(", ")
        )))
    }
}

fn data(rec: &ThreefoldRecord) -> std::result::Result<(&TrilinearForm, &LinearFunctional), NotApplicable> {
    match (&rec.mu, &rec.c2) {
        (Some(mu), Some(c2)) => Ok((mu, c2)),
        (None, _) => Err(NotApplicable("record carries no trilinear form".into())),
        (_, None) => Err(NotApplicable("record carries no c2".into())),
    }
}

fn require_cy(rec: &ThreefoldRecord) -> std::result::Result<(), NotApplicable> {
    if rec.is_calabi_yau {
        Ok(())
    } else {
        Err(NotApplicable("record is not flagged Calabi-Yau".into()))
    }
}

fn require_c3(rec: &ThreefoldRecord) -> std::result::Result<BigRational, NotApplicable> {
    rec.c3
        .as_ref()
        .map(rat_int)
        .ok_or_else(|| NotApplicable("record carries no c3".into()))
}

/// `mu(x,x,x)` and `c2(X).x` for a sample of matching rank.
fn degree_and_c2(
    mu: &TrilinearForm,
    c2: &LinearFunctional,
    x: &SampleClass,
) -> Result<(BigRational, BigRational)> {
    let v = x.vector();
    Ok((mu.cubic_value(&v)?, c2.eval(&v)?))
}

const SURFACE_FLAGS: [SampleFlag; 2] = [SampleFlag::Ample, SampleFlag::LinearSystemFreeDimGe2];

fn surface_preconditions(
    rec: &ThreefoldRecord,
    x: &SampleClass,
) -> std::result::Result<(BigRational, BigRational), NotApplicable> {
    require_cy(rec)?;
    missing_flags(x, &SURFACE_FLAGS)?;
    let (mu, c2) = data(rec)?;
    degree_and_c2(mu, c2, x).map_err(|e| NotApplicable(e.to_string()))
}

/// Geometric genus of a smooth member `S` of `|x|`.
pub fn geometric_genus(
    rec: &ThreefoldRecord,
    x: &SampleClass,
) -> std::result::Result<BigRational, NotApplicable> {
    let (d, c) = surface_preconditions(rec, x)?;
    Ok(genus_from(&d, &c))
}

fn genus_from(mu_x: &BigRational, c2_x: &BigRational) -> BigRational {
    mu_x / rat(6) + c2_x / rat(12) - rat(1)
}

/// Chern numbers of a smooth member `S` of `|x|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceInvariants {
    /// `K_S^2 = mu(x,x,x)`
    pub k_squared: BigRational,
    /// `c2(S) = mu(x,x,x) + c2(X).x`
    pub c2: BigRational,
    /// `s2(S) = c1(S)^2 - c2(S) = -c2(X).x`
    pub s2: BigRational,
}

pub fn surface_invariants(
    rec: &ThreefoldRecord,
    x: &SampleClass,
) -> std::result::Result<SurfaceInvariants, NotApplicable> {
    let (d, c) = surface_preconditions(rec, x)?;
    Ok(SurfaceInvariants {
        k_squared: d.clone(),
        c2: &d + &c,
        s2: -c,
    })
}

/// `s2(S) <= 0`, strict unless `c2` vanishes identically.
pub fn segre_check(rec: &ThreefoldRecord, x: &SampleClass) -> BoundReport {
    let id = format!("surface_segre[{}]", x.name);
    let inv = match surface_invariants(rec, x) {
        Ok(v) => v,
        Err(NotApplicable(why)) => return BoundReport::not_applicable(id, CITE_SEGRE, why),
    };
    let mut r = BoundReport::evaluate(id, inv.s2.clone(), rat(0), CITE_SEGRE, &SURFACE_FLAGS);
    r.notes.push(format!(
        "K_S^2={} c2(S)={} s2(S)={}",
        fmt_rat(&inv.k_squared),
        fmt_rat(&inv.c2),
        fmt_rat(&inv.s2)
    ));
    if rec.c2_is_zero() == Some(true) {
        r.notes
            .push("c2 vanishes identically: X is the quotient of an Abelian threefold".into());
    } else if inv.s2.is_zero() {
        r.notes
            .push("s2(S) = 0 although c2 is not identically zero".into());
    }
    r
}

fn bound(
    check: &str,
    citation: &str,
    rec: &ThreefoldRecord,
    x: &SampleClass,
    flags: &[SampleFlag],
    f: impl FnOnce(&BigRational, &BigRational) -> (BigRational, BigRational),
) -> BoundReport {
    let id = format!("{check}[{}]", x.name);
    let pre = require_cy(rec)
        .and_then(|_| missing_flags(x, flags))
        .and_then(|_| data(rec))
        .and_then(|(mu, c2)| degree_and_c2(mu, c2, x).map_err(|e| NotApplicable(e.to_string())));
    match pre {
        Ok((d, c)) => {
            let (lhs, rhs) = f(&d, &c);
            BoundReport::evaluate(id, lhs, rhs, citation, flags)
        }
        Err(NotApplicable(why)) => BoundReport::not_applicable(id, citation, why),
    }
}

/// `c2.x / 2 <= 2 mu(x,x,x) + C`, `C = 18` for even `mu(x,x,x)`, else 15.
pub fn c2_bound_noether(rec: &ThreefoldRecord, x: &SampleClass) -> BoundReport {
    bound("c2_bound_noether", CITE_NOETHER, rec, x, &SURFACE_FLAGS, |d, c| {
        let even = d.is_integer() && d.to_integer().is_even();
        let constant = if even { 18 } else { 15 };
        (c / rat(2), d * rat(2) + rat(constant))
    })
}

const CASTELNUOVO_FLAGS: [SampleFlag; 3] = [
    SampleFlag::Ample,
    SampleFlag::LinearSystemFreeDimGe2,
    SampleFlag::CanonicalMapBirational,
];

/// `c2.x / 2 <= mu(x,x,x) + 20`.
pub fn c2_bound_castelnuovo(rec: &ThreefoldRecord, x: &SampleClass) -> BoundReport {
    bound("c2_bound_castelnuovo", CITE_CASTELNUOVO, rec, x, &CASTELNUOVO_FLAGS, |d, c| {
        (c / rat(2), d + rat(20))
    })
}

const REID_FLAGS: [SampleFlag; 4] = [
    SampleFlag::Ample,
    SampleFlag::LinearSystemFreeDimGe2,
    SampleFlag::CanonicalMapBirational,
    SampleFlag::QuadricsIntersection,
];

/// `c2.x <= mu(x,x,x) + 48`.
pub fn c2_bound_reid(rec: &ThreefoldRecord, x: &SampleClass) -> BoundReport {
    bound("c2_bound_reid", CITE_REID, rec, x, &REID_FLAGS, |d, c| {
        (c.clone(), d + rat(48))
    })
}

/// Top intersection numbers of the Chern classes of a rank-3 bundle, each
/// already paired with the complementary power of a Kähler class.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChernNumbers {
    pub c1: BigRational,
    pub c1_sq: BigRational,
    pub c2: BigRational,
    pub c1_cube: BigRational,
    pub c1_c2: BigRational,
    pub c3: BigRational,
}

/// Schur polynomial `P_lambda(c(E))` of a rank-3 bundle, `|lambda| <= 3`.
pub fn schur_eval(partition: &[u32], c: &ChernNumbers) -> Result<BigRational> {
    match partition {
        [1] => Ok(c.c1.clone()),
        [2] => Ok(c.c2.clone()),
        [1, 1] => Ok(&c.c1_sq - &c.c2),
        [3] => Ok(c.c3.clone()),
        [2, 1] => Ok(&c.c1_c2 - &c.c3),
        [1, 1, 1] => Ok(&c.c1_cube - rat(2) * &c.c1_c2 + &c.c3),
        other => Err(Error::UnsupportedPartition(other.to_vec())),
    }
}

/// Intersection numbers entering the nef-bundle inequalities.
struct Terms {
    xxx: BigRational,
    xxy: BigRational,
    xyy: BigRational,
    c1xx: BigRational,
    c1xy: BigRational,
    c1yy: BigRational,
    c1c1x: BigRational,
    c1c1y: BigRational,
    c1c1c1: BigRational,
    c2x: BigRational,
    c2y: BigRational,
    c1c2: BigRational,
    c3: BigRational,
}

fn terms(rec: &ThreefoldRecord, x: &SampleClass, y: &SampleClass) -> std::result::Result<Result<Terms>, NotApplicable> {
    let (mu, c2) = data(rec)?;
    let c3 = require_c3(rec)?;
    let (xv, yv, c1) = (x.vector(), y.vector(), &rec.c1);
    let run = || -> Result<Terms> {
        Ok(Terms {
            xxx: mu.eval(&xv, &xv, &xv)?,
            xxy: mu.eval(&xv, &xv, &yv)?,
            xyy: mu.eval(&xv, &yv, &yv)?,
            c1xx: mu.eval(c1, &xv, &xv)?,
            c1xy: mu.eval(c1, &xv, &yv)?,
            c1yy: mu.eval(c1, &yv, &yv)?,
            c1c1x: mu.eval(c1, c1, &xv)?,
            c1c1y: mu.eval(c1, c1, &yv)?,
            c1c1c1: mu.eval(c1, c1, c1)?,
            c2x: c2.eval(&xv)?,
            c2y: c2.eval(&yv)?,
            c1c2: c2.eval(c1)?,
            c3,
        })
    };
    Ok(run())
}

fn pair_id(prefix: &str, item: usize, x: &SampleClass, y: &SampleClass) -> String {
    format!("{prefix}_{item}[{},{}]", x.name, y.name)
}

fn pair_preconditions(
    x: &SampleClass,
    y: &SampleClass,
) -> std::result::Result<(), NotApplicable> {
    missing_flags(x, &[SampleFlag::VeryAmple])?;
    missing_flags(y, &[SampleFlag::Ample])
}

/// The six inequalities obtained from Schur positivity of the nef bundle
/// `Omega_X(2x)` on a smooth projective threefold, with `x` very ample and
/// `y` ample. Each is reported as `smaller side <= larger side`.
pub fn dps_inequalities(
    rec: &ThreefoldRecord,
    x: &SampleClass,
    y: &SampleClass,
) -> Result<Vec<BoundReport>> {
    let na = |why: String| {
        Ok((1..=6)
            .map(|i| BoundReport::not_applicable(pair_id("dps", i, x, y), CITE_DPS, why.clone()))
            .collect())
    };
    if let Err(NotApplicable(why)) = pair_preconditions(x, y) {
        return na(why);
    }
    let t = match terms(rec, x, y) {
        Ok(t) => t?,
        Err(NotApplicable(why)) => return na(why),
    };
    let r = |n: i64| rat(n);
    let flags = [SampleFlag::VeryAmple, SampleFlag::Ample];
    let items: [(BigRational, BigRational); 6] = [
        (
            r(4) * &t.c1xx + &t.c3,
            r(8) * &t.xxx + r(2) * &t.c2x,
        ),
        (
            r(32) * &t.c1xx + &t.c1c2,
            r(64) * &t.xxx + r(4) * &t.c1c1x + r(4) * &t.c2x + &t.c3,
        ),
        (
            r(40) * &t.c1xx + &t.c1c1c1 + r(10) * &t.c2x + &t.c3,
            r(80) * &t.xxx + r(10) * &t.c1c1x + r(2) * &t.c1c2,
        ),
        (r(4) * &t.c1xy, r(12) * &t.xxy + &t.c2y),
        (
            r(8) * &t.c1xy + &t.c2y,
            r(24) * &t.xxy + &t.c1c1y,
        ),
        (t.c1yy.clone(), r(6) * &t.xyy),
    ];
    Ok(items
        .into_iter()
        .enumerate()
        .map(|(i, (lhs, rhs))| BoundReport::evaluate(pair_id("dps", i + 1, x, y), lhs, rhs, CITE_DPS, &flags))
        .collect())
}

/// The four Calabi-Yau specializations (`c1 = 0`) of the nef-bundle
/// inequalities.
pub fn cy_fl_inequalities(
    rec: &ThreefoldRecord,
    x: &SampleClass,
    y: &SampleClass,
) -> Result<Vec<BoundReport>> {
    let na = |why: String| {
        Ok((1..=4)
            .map(|i| BoundReport::not_applicable(pair_id("cy_fl", i, x, y), CITE_CY_FL, why.clone()))
            .collect())
    };
    if let Err(NotApplicable(why)) = require_cy(rec).and_then(|_| pair_preconditions(x, y)) {
        return na(why);
    }
    let t = match terms(rec, x, y) {
        Ok(t) => t?,
        Err(NotApplicable(why)) => return na(why),
    };
    let r = |n: i64| rat(n);
    let flags = [SampleFlag::VeryAmple, SampleFlag::Ample];
    let items: [(BigRational, BigRational); 4] = [
        (t.c3.clone(), r(8) * &t.xxx + r(2) * &t.c2x),
        (rat(0), r(64) * &t.xxx + r(4) * &t.c2x + &t.c3),
        (r(10) * &t.c2x + &t.c3, r(80) * &t.xxx),
        (t.c2y.clone(), r(24) * &t.xxy),
    ];
    Ok(items
        .into_iter()
        .enumerate()
        .map(|(i, (lhs, rhs))| BoundReport::evaluate(pair_id("cy_fl", i + 1, x, y), lhs, rhs, CITE_CY_FL, &flags))
        .collect())
}

/// Bounds `(lower, upper)` on `c3/2 = h^{1,1} - h^{2,1}` for a Calabi-Yau
/// threefold polarized by a very ample `x` with `mu(x,x,x) = mu_x`.
///
/// General window `[-36 mu_x - 80, 6 mu_x + 40]`; the sharper constants
/// `[-80, 28]` and `[-180, 54]` apply at `mu_x = 1` and `mu_x = 3`.
pub fn c3_window(mu_x: &BigInt) -> Result<(BigInt, BigInt)> {
    if !mu_x.is_positive() {
        return Err(Error::NonPositiveDegree(mu_x.clone()));
    }
    if *mu_x == BigInt::from(1) {
        return Ok((BigInt::from(-80), BigInt::from(28)));
    }
    if *mu_x == BigInt::from(3) {
        return Ok((BigInt::from(-180), BigInt::from(54)));
    }
    Ok((mu_x * -36 - 80, mu_x * 6 + 40))
}

/// Compares `c3/2` against the window for a very ample sample; two reports,
/// lower bound then upper bound.
pub fn c3_window_check(rec: &ThreefoldRecord, x: &SampleClass) -> Vec<BoundReport> {
    let lo_id = format!("c3_window_lower[{}]", x.name);
    let hi_id = format!("c3_window_upper[{}]", x.name);
    let na = |why: String| {
        vec![
            BoundReport::not_applicable(lo_id.clone(), CITE_WINDOW, why.clone()),
            BoundReport::not_applicable(hi_id.clone(), CITE_WINDOW, why),
        ]
    };
    let pre = require_cy(rec)
        .and_then(|_| missing_flags(x, &[SampleFlag::VeryAmple]))
        .and_then(|_| rec.mu.as_ref().ok_or_else(|| NotApplicable("record carries no trilinear form".into())))
        .and_then(|mu| require_c3(rec).map(|c3| (mu, c3)));
    let (mu, c3) = match pre {
        Ok(v) => v,
        Err(NotApplicable(why)) => return na(why),
    };
    let d = match mu.cubic_value(&x.vector()) {
        Ok(d) if d.is_integer() => d.to_integer(),
        Ok(d) => return na(format!("mu(x,x,x) = {} is not integral", fmt_rat(&d))),
        Err(e) => return na(e.to_string()),
    };
    let (lo, hi) = match c3_window(&d) {
        Ok(w) => w,
        Err(e) => return na(e.to_string()),
    };
    let half = c3 / rat(2);
    let flags = [SampleFlag::VeryAmple];
    vec![
        BoundReport::evaluate(lo_id, rat_int(&lo), half.clone(), CITE_WINDOW, &flags),
        BoundReport::evaluate(hi_id, half, rat_int(&hi), CITE_WINDOW, &flags),
    ]
}

/// `c2(X).v >= 0` for every nef sample `v`; reported against the minimum.
pub fn c2_positivity(rec: &ThreefoldRecord) -> BoundReport {
    let id = "c2_positivity";
    let nef: Vec<&SampleClass> = rec.samples.iter().filter(|s| s.has(SampleFlag::Nef)).collect();
    if nef.is_empty() {
        return BoundReport::not_applicable(id, CITE_POSITIVITY, "no nef sample classes");
    }
    let Some(c2) = &rec.c2 else {
        return BoundReport::not_applicable(id, CITE_POSITIVITY, "record carries no c2");
    };
    let mut worst: Option<(BigRational, &str)> = None;
    for s in nef {
        let v = match c2.eval(&s.vector()) {
            Ok(v) => v,
            Err(e) => return BoundReport::not_applicable(id, CITE_POSITIVITY, e.to_string()),
        };
        if worst.as_ref().is_none_or(|(w, _)| v < *w) {
            worst = Some((v, &s.name));
        }
    }
    let (min, name) = worst.expect("non-empty");
    let mut r = BoundReport::evaluate(id, rat(0), min, CITE_POSITIVITY, &[SampleFlag::Nef])
        .with_note(format!("minimum attained at sample {name}"));
    if rec.c2_is_zero() == Some(true) {
        r.notes
            .push("c2 vanishes identically: X is the quotient of an Abelian threefold".into());
    }
    r
}

/// Convenience for callers holding raw numbers rather than a record.
pub fn genus_from_numbers(mu_x: &BigInt, c2_x: &BigInt) -> BigRational {
    genus_from(&rat_int(mu_x), &rat_int(c2_x))
}

/// The evaluation vector of a sample; exposed for report rendering.
pub fn sample_vector(x: &SampleClass) -> Vector {
    x.vector()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn cy1(mu: i64, c2: i64, c3: i64, flags: &[SampleFlag]) -> (ThreefoldRecord, SampleClass) {
        let rec = ThreefoldRecord::calabi_yau(
            "t",
            TrilinearForm::from_i64(1, &[(0, 0, 0, mu)]).unwrap(),
            LinearFunctional::from_ints(&[c2]).unwrap(),
            Some(BigInt::from(c3)),
        );
        (rec, SampleClass::from_i64("H", &[1], flags))
    }

    const VA: &[SampleFlag] = &[SampleFlag::VeryAmple];

    #[test]
    fn genus_examples() {
        let (rec, h) = cy1(5, 50, -200, VA);
        assert_eq!(geometric_genus(&rec, &h).unwrap(), rat(4));
        let (rec, h) = cy1(1, 10, 0, VA);
        assert_eq!(geometric_genus(&rec, &h).unwrap(), rat(0));
        let (rec, h) = cy1(6, 0, 0, VA);
        assert_eq!(geometric_genus(&rec, &h).unwrap(), rat(0));
        let (rec, h) = cy1(5, 50, -200, &[SampleFlag::Nef]);
        assert!(geometric_genus(&rec, &h).is_err());
    }

    #[test]
    fn surface_examples() {
        let (rec, h) = cy1(5, 50, -200, VA);
        let s = surface_invariants(&rec, &h).unwrap();
        assert_eq!((s.k_squared, s.c2, s.s2), (rat(5), rat(55), rat(-50)));
        let (rec, h) = cy1(1, 10, 0, VA);
        let s = surface_invariants(&rec, &h).unwrap();
        assert_eq!((s.k_squared, s.c2, s.s2), (rat(1), rat(11), rat(-10)));
        let (rec, h) = cy1(6, 0, 0, VA);
        let r = segre_check(&rec, &h);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.lhs, Some(rat(0)));
        assert!(r.notes.iter().any(|n| n.contains("Abelian threefold")));
    }

    #[test]
    fn noether_examples() {
        let (rec, h) = cy1(5, 50, -200, VA);
        let r = c2_bound_noether(&rec, &h);
        assert_eq!((r.status, r.slack.clone()), (Status::Pass, Some(rat(0))));
        let (rec, h) = cy1(2, 44, -296, &[SampleFlag::Ample, SampleFlag::LinearSystemFreeDimGe2]);
        let r = c2_bound_noether(&rec, &h);
        assert_eq!((r.lhs.clone(), r.rhs.clone(), r.status), (Some(rat(22)), Some(rat(22)), Status::Pass));
        let (rec, h) = cy1(1, 36, 0, VA);
        let r = c2_bound_noether(&rec, &h);
        assert_eq!((r.lhs.clone(), r.rhs.clone(), r.status), (Some(rat(18)), Some(rat(17)), Status::Fail));
    }

    #[test]
    fn castelnuovo_examples() {
        let (rec, h) = cy1(5, 50, -200, VA);
        assert!(c2_bound_castelnuovo(&rec, &h).is_tight());
        let (rec, h) = cy1(1, 34, 0, VA);
        let r = c2_bound_castelnuovo(&rec, &h);
        assert_eq!((r.lhs.clone(), r.rhs.clone(), r.status), (Some(rat(17)), Some(rat(21)), Status::Pass));
        let (rec, h) = cy1(1, 46, 0, VA);
        assert_eq!(c2_bound_castelnuovo(&rec, &h).status, Status::Fail);
        let (rec, h) = cy1(1, 10, 0, &[SampleFlag::Ample, SampleFlag::LinearSystemFreeDimGe2]);
        assert_eq!(c2_bound_castelnuovo(&rec, &h).status, Status::NotApplicable);
    }

    #[test]
    fn reid_examples() {
        let q = &[SampleFlag::VeryAmple, SampleFlag::QuadricsIntersection];
        let (rec, h) = cy1(5, 50, -200, q);
        let r = c2_bound_reid(&rec, &h);
        assert_eq!((r.lhs.clone(), r.rhs.clone(), r.status), (Some(rat(50)), Some(rat(53)), Status::Pass));
        let (rec, h) = cy1(2, 50, 0, q);
        assert!(c2_bound_reid(&rec, &h).is_tight());
        let (rec, h) = cy1(1, 50, 0, q);
        assert_eq!(c2_bound_reid(&rec, &h).status, Status::Fail);
        let (rec, h) = cy1(1, 50, 0, VA);
        assert_eq!(c2_bound_reid(&rec, &h).status, Status::NotApplicable);
    }

    #[test]
    fn schur_examples() {
        let c = ChernNumbers {
            c1_sq: rat(9),
            c2: rat(4),
            ..Default::default()
        };
        assert_eq!(schur_eval(&[1, 1], &c).unwrap(), rat(5));
        let c = ChernNumbers {
            c1_c2: rat(12),
            c3: rat(12),
            ..Default::default()
        };
        assert_eq!(schur_eval(&[2, 1], &c).unwrap(), rat(0));
        let c = ChernNumbers {
            c3: rat(7),
            ..Default::default()
        };
        assert_eq!(schur_eval(&[3], &c).unwrap(), rat(7));
        assert_eq!(
            schur_eval(&[2, 2], &c),
            Err(Error::UnsupportedPartition(vec![2, 2]))
        );
        assert!(schur_eval(&[4], &c).is_err());
    }

    #[test]
    fn dps_on_calabi_yau() {
        let (rec, h) = cy1(5, 50, -200, VA);
        let r = dps_inequalities(&rec, &h, &h).unwrap();
        assert_eq!(r.len(), 6);
        assert_eq!(r[0].lhs, Some(rat(-200)));
        assert_eq!(r[0].rhs, Some(rat(140)));
        assert!(r.iter().all(|b| b.status == Status::Pass));

        // item 6 with mu(x,y,y) = 1 and item 4 with mu(x,x,y) = 1, c2.y = 30
        let rec = ThreefoldRecord::calabi_yau(
            "t",
            TrilinearForm::from_i64(2, &[(0, 0, 1, 1), (0, 1, 1, 1)]).unwrap(),
            LinearFunctional::from_ints(&[0, 30]).unwrap(),
            Some(BigInt::from(0)),
        );
        let x = SampleClass::from_i64("x", &[1, 0], VA);
        let y = SampleClass::from_i64("y", &[0, 1], &[SampleFlag::Ample]);
        let r = dps_inequalities(&rec, &x, &y).unwrap();
        assert_eq!((r[5].lhs.clone(), r[5].rhs.clone()), (Some(rat(0)), Some(rat(6))));
        assert_eq!((r[3].lhs.clone(), r[3].rhs.clone()), (Some(rat(0)), Some(rat(42))));
    }

    #[test]
    fn dps_needs_flags() {
        let (rec, h) = cy1(5, 50, -200, &[SampleFlag::Ample]);
        let r = dps_inequalities(&rec, &h, &h).unwrap();
        assert!(r.iter().all(|b| b.status == Status::NotApplicable));
    }

    #[test]
    fn cy_fl_examples() {
        let (rec, h) = cy1(5, 50, -200, VA);
        let r = cy_fl_inequalities(&rec, &h, &h).unwrap();
        assert!(r.iter().all(|b| b.status == Status::Pass));
        assert_eq!((r[0].lhs.clone(), r[0].rhs.clone()), (Some(rat(-200)), Some(rat(140))));
        assert_eq!((r[2].lhs.clone(), r[2].rhs.clone()), (Some(rat(300)), Some(rat(400))));
        assert_eq!((r[3].lhs.clone(), r[3].rhs.clone()), (Some(rat(50)), Some(rat(120))));

        let (rec, h) = cy1(3, 0, 0, VA);
        let r = cy_fl_inequalities(&rec, &h, &h).unwrap();
        let rhs: Vec<_> = r.iter().map(|b| b.slack.clone().unwrap()).collect();
        assert_eq!(rhs, vec![rat(24), rat(192), rat(240), rat(72)]);

        let (rec, h) = cy1(1, 10, -120, VA);
        let r = cy_fl_inequalities(&rec, &h, &h).unwrap();
        assert_eq!(r[1].status, Status::Fail);
        assert_eq!(r[1].slack, Some(rat(-16)));
    }

    #[test]
    fn window_examples() {
        let b = BigInt::from;
        assert_eq!(c3_window(&b(5)).unwrap(), (b(-260), b(70)));
        assert_eq!(c3_window(&b(1)).unwrap(), (b(-80), b(28)));
        assert_eq!(c3_window(&b(3)).unwrap(), (b(-180), b(54)));
        assert_eq!(c3_window(&b(2)).unwrap(), (b(-152), b(52)));
        assert_eq!(c3_window(&b(0)), Err(Error::NonPositiveDegree(b(0))));
        let (rec, h) = cy1(5, 50, -200, VA);
        let r = c3_window_check(&rec, &h);
        assert!(r.iter().all(|b| b.status == Status::Pass));
        assert_eq!(r[0].rhs, Some(rat(-100)));
    }

    #[test]
    fn positivity_examples() {
        let (rec, h) = cy1(5, 50, -200, VA);
        let r = c2_positivity(&rec.with_sample(h));
        assert_eq!(r.status, Status::Pass);
        let (rec, h) = cy1(6, 0, 0, VA);
        let r = c2_positivity(&rec.with_sample(h));
        assert_eq!(r.status, Status::Pass);
        assert!(r.notes.iter().any(|n| n.contains("Abelian")));
        let (rec, h) = cy1(5, -2, 0, &[SampleFlag::Nef]);
        assert_eq!(c2_positivity(&rec.with_sample(h)).status, Status::Fail);
        let (rec, _) = cy1(5, 50, 0, VA);
        assert_eq!(c2_positivity(&rec).status, Status::NotApplicable);
    }
}
