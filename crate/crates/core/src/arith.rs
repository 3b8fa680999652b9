//! Small exact-arithmetic helpers shared by the form and factorization code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_int(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Formats `p/q`, or just `p` for integers.
pub fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector to the primitive integer vector on the same ray.
/// Returns `None` for the zero vector.
pub fn primitive_integer(values: &[BigRational]) -> Option<Vec<BigInt>> {
    let l = lcm_denominators(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * rat_int(&l)).to_integer())
        .collect();
    let g = gcd_all(&ints);
    if g.is_zero() {
        return None;
    }
    Some(ints.into_iter().map(|v| v / &g).collect())
}

/// Positive divisors of `n` (n != 0), ascending.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero requested");
    if let Some(small) = n.to_u64() {
        let mut small_divs = Vec::new();
        let mut large_divs = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                small_divs.push(d);
                if d != small / d {
                    large_divs.push(small / d);
                }
            }
            d += 1;
        }
        small_divs
            .into_iter()
            .chain(large_divs.into_iter().rev())
            .map(BigInt::from)
            .collect()
    } else {
        let root = n.sqrt();
        let mut small_divs = Vec::new();
        let mut large_divs = Vec::new();
        let mut d = BigInt::one();
        while d <= root {
            if (&n % &d).is_zero() {
                let q = &n / &d;
                if q != d {
                    large_divs.push(q);
                }
                small_divs.push(d.clone());
            }
            d += 1;
        }
        small_divs.extend(large_divs.into_iter().rev());
        small_divs
    }
}

/// Evaluates a polynomial given by coefficients in ascending degree order.
pub fn horner(coeffs: &[BigRational], s: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * s + c)
}

/// Distinct rational roots of a univariate polynomial with rational
/// coefficients (ascending degree order), sorted ascending.
///
/// Uses the rational root theorem on the cleared, content-free integer
/// polynomial; zero roots are stripped first so the constant term is nonzero.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut c: Vec<BigRational> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let lead_zeros = c.iter().take_while(|x| x.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(BigRational::zero());
        c.drain(..lead_zeros);
    }
    let ints = match primitive_integer(&c) {
        Some(v) => v,
        None => return roots,
    };
    if ints.len() > 1 {
        let c0 = &ints[0];
        let cn = &ints[ints.len() - 1];
        let num_divs = divisors(c0);
        let den_divs = divisors(cn);
        let poly: Vec<BigRational> = ints.iter().map(rat_int).collect();
        for q in &den_divs {
            for p in &num_divs {
                if !p.gcd(q).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = BigRational::new(p * sign, q.clone());
                    if horner(&poly, &cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}
