use num_traits::Signed;

use super::Factorization;
use crate::forms::Signature;
use crate::record::ThreefoldRecord;
use crate::report::{Status, StructureReport};

pub const CITE_FACTOR_CLASSIFICATION: &str =
    "classification of linear factors of the cubic form on a threefold with a Kahler class";

/// The three sub-checks for a factorization `C = nu * xi` of the record's
/// cubic form, reported separately:
///
/// * `xi_kernel`: `dim Ker(A_xi) <= 1`;
/// * `xi_restriction`: when the kernel is a line, `xi` restricted to
///   `ker(nu)` is non-degenerate (vacuous for a trivial kernel);
/// * `xi_signature`: with `q(X) = 0`, the signature of `xi` is one of
///   `(2,0,b2-2)`, `(1,1,b2-2)`, `(1,0,b2-1)`.
///
/// The signature check needs `nu` to be positive on a Kähler sample of the
/// record and is not applicable without one.
pub fn classify_prop41(rec: &ThreefoldRecord, f: &Factorization) -> Vec<StructureReport> {
    let tag = format!("[{}]", f.nu);
    let cite = CITE_FACTOR_CLASSIFICATION;
    let mut out = Vec::with_capacity(3);

    out.push(StructureReport::new(
        format!("xi_kernel{tag}"),
        Status::from_bool(f.kernel_dim <= 1),
        format!("dim Ker(A_xi) = {}, signature {}", f.kernel_dim, f.signature),
        cite,
    ));

    out.push(if f.kernel_dim == 1 {
        StructureReport::new(
            format!("xi_restriction{tag}"),
            Status::from_bool(f.restricted_signature.zero == 0),
            format!("restricted signature {}", f.restricted_signature),
            cite,
        )
    } else if f.kernel_dim == 0 {
        StructureReport::new(
            format!("xi_restriction{tag}"),
            Status::Pass,
            "xi is non-degenerate; nothing to check",
            cite,
        )
    } else {
        StructureReport::new(
            format!("xi_restriction{tag}"),
            Status::NotApplicable,
            format!("dim Ker(A_xi) = {}", f.kernel_dim),
            cite,
        )
    });

    let id = format!("xi_signature{tag}");
    let sig = if !rec.irregularity_zero {
        StructureReport::new(id, Status::NotApplicable, "irregularity not known to vanish", cite)
    } else {
        match rec.kahler_sample() {
            None => StructureReport::new(id, Status::NotApplicable, "no Kahler sample class", cite),
            Some(k) => match f.nu.eval(&k.vector()) {
                Ok(v) if v.is_positive() => {
                    let allowed = allowed_signatures(rec.b2);
                    let listed: Vec<String> = allowed.iter().map(|s| s.to_string()).collect();
                    StructureReport::new(
                        id,
                        Status::from_bool(allowed.contains(&f.signature)),
                        format!("signature {} vs allowed {}", f.signature, listed.join(" ")),
                        cite,
                    )
                }
                _ => StructureReport::new(
                    id,
                    Status::NotApplicable,
                    format!("nu is not positive on Kahler sample {}", k.name),
                    cite,
                ),
            },
        }
    };
    out.push(sig);
    out
}

/// `(2,0,b2-2)`, `(1,1,b2-2)`, `(1,0,b2-1)`; entries that would be negative
/// are dropped.
pub fn allowed_signatures(b2: usize) -> Vec<Signature> {
    let mut v = Vec::new();
    if b2 >= 2 {
        v.push(Signature::new(2, 0, b2 - 2));
        v.push(Signature::new(1, 1, b2 - 2));
    }
    if b2 >= 1 {
        v.push(Signature::new(1, 0, b2 - 1));
    }
    v
}
