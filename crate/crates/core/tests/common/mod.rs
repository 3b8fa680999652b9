//! Independent oracles and generators shared by the integration tests.
//! Nothing here calls into the algorithms being tested.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use threefold::forms::{IntMatrix, QuadraticForm, TrilinearForm};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// `(i, j, k, value)` with `i <= j <= k`, 0-based.
pub type Entries = Vec<(usize, usize, usize, i64)>;

pub fn entries_of(mu: &TrilinearForm) -> Entries {
    mu.entries()
        .map(|((i, j, k), v)| (i, j, k, i64::try_from(v).expect("small coefficient")))
        .collect()
}

/// `mu(x, y, z)` summed over all ordered index triples.
pub fn tri_i128(n: usize, e: &Entries, x: &[i128], y: &[i128], z: &[i128]) -> i128 {
    let mut full = vec![0i128; n * n * n];
    for &(i, j, k, v) in e {
        for (a, b, c) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
            full[(a * n + b) * n + c] = v as i128;
        }
    }
    let mut s = 0i128;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                s += full[(a * n + b) * n + c] * x[a] * y[b] * z[c];
            }
        }
    }
    s
}

pub fn cube_i128(n: usize, e: &Entries, x: &[i128]) -> i128 {
    tri_i128(n, e, x, x, x)
}

/// Integer coefficients of `C(a) = mu(a,a,a)` keyed by exponent vector.
pub fn cubic_coefficients(n: usize, e: &Entries) -> Vec<(Vec<u32>, i64)> {
    let mut map = std::collections::BTreeMap::<Vec<u32>, i64>::new();
    for &(i, j, k, v) in e {
        let mult = if i == j && j == k {
            1
        } else if i == j || j == k {
            3
        } else {
            6
        };
        let mut exps = vec![0u32; n];
        exps[i] += 1;
        exps[j] += 1;
        exps[k] += 1;
        *map.entry(exps).or_default() += v * mult;
    }
    map.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Brute-force divide-and-test: every primitive integer `nu`, first nonzero
/// coefficient positive, dividing `C`.
///
/// Candidate range: with `nu` primitive, Gauss's lemma makes `xi` integral,
/// and the leading coefficient of `C` in the lex order with `a_i` first is
/// `nu_i` times that of `xi`. So `nu_i` is zero or divides that coefficient,
/// and in particular `|nu_i|` is at most the largest coefficient of `C`.
/// Candidates are screened by evaluating `C` at integral points of `ker(nu)`
/// and confirmed by checking `C` vanishes on `ker(nu)` at a set of points
/// large enough to determine a cubic in `n - 1` variables.
pub fn brute_force_factors(n: usize, e: &Entries) -> BTreeSet<Vec<i64>> {
    let coeffs = cubic_coefficients(n, e);
    assert!(!coeffs.is_empty(), "zero cubic");
    let mut choices: Vec<Vec<i64>> = Vec::with_capacity(n);
    for i in 0..n {
        // lex order: a_i first, then the remaining variables in index order
        let key = |exps: &Vec<u32>| {
            let mut k = vec![exps[i]];
            k.extend((0..n).filter(|&j| j != i).map(|j| exps[j]));
            k
        };
        let lead = coeffs.iter().max_by_key(|(ex, _)| key(ex)).unwrap().1;
        let mut c = vec![0];
        for d in divisors(lead) {
            c.push(d);
            c.push(-d);
        }
        choices.push(c);
    }
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; n];
    loop {
        let nu: Vec<i64> = (0..n).map(|i| choices[i][idx[i]]).collect();
        if is_canonical(&nu) && divides(n, e, &nu) {
            out.insert(nu);
        }
        let mut k = 0;
        while k < n {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn is_canonical(nu: &[i64]) -> bool {
    let g = nu.iter().fold(0, |g, &v| gcd(g, v));
    g == 1 && nu.iter().find(|&&v| v != 0).is_some_and(|&v| v > 0)
}

/// `nu | C` iff `C` vanishes on `ker(nu)`. The kernel is spanned over `Q` by
/// `w_j = nu_p e_j - nu_j e_p` (`j != p`); a cubic on that span vanishes iff
/// it vanishes on all `sum c_j w_j` with `c_j >= 0`, `sum c_j <= 3` (the
/// degree-3 simplex points are unisolvent for cubics).
fn divides(n: usize, e: &Entries, nu: &[i64]) -> bool {
    let p = nu.iter().position(|&v| v != 0).unwrap();
    let others: Vec<usize> = (0..n).filter(|&j| j != p).collect();
    let w: Vec<Vec<i128>> = others
        .iter()
        .map(|&j| {
            let mut v = vec![0i128; n];
            v[j] = nu[p] as i128;
            v[p] = -(nu[j] as i128);
            v
        })
        .collect();
    let m = w.len();
    let mut c = vec![0usize; m];
    loop {
        if c.iter().sum::<usize>() <= 3 {
            let mut x = vec![0i128; n];
            for (t, &ct) in c.iter().enumerate() {
                for i in 0..n {
                    x[i] += ct as i128 * w[t][i];
                }
            }
            if cube_i128(n, e, &x) != 0 {
                return false;
            }
        }
        let mut k = 0;
        while k < m {
            c[k] += 1;
            if c[k] <= 3 {
                break;
            }
            c[k] = 0;
            k += 1;
        }
        if k >= m {
            return true;
        }
    }
}

/// Uniform random coefficients in `[-r, r]` on every index triple.
pub fn random_entries(rng: &mut ChaCha8Rng, n: usize, r: i64, density: f64) -> Entries {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                if rng.random_bool(density) {
                    let v = rng.random_range(-r..=r);
                    if v != 0 {
                        e.push((i, j, k, v));
                    }
                }
            }
        }
    }
    e
}

/// `mu_ijk = nu_i B_jk + nu_j B_ik + nu_k B_ij` with entries of `nu`, `B` in
/// `{-1, 0, 1}`; then `C = 3 nu(a) B(a, a)` and `|mu_ijk| <= 3`.
pub fn product_entries(rng: &mut ChaCha8Rng, n: usize) -> Entries {
    let nu: Vec<i64> = (0..n).map(|_| rng.random_range(-1..=1)).collect();
    let mut b = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.random_range(-1..=1);
            b[i][j] = v;
            b[j][i] = v;
        }
    }
    let mut e = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let v = nu[i] * b[j][k] + nu[j] * b[i][k] + nu[k] * b[i][j];
                if v != 0 {
                    e.push((i, j, k, v));
                }
            }
        }
    }
    e
}

pub fn form(n: usize, e: &Entries) -> TrilinearForm {
    TrilinearForm::from_i64(n, e).unwrap()
}

/// Random unimodular matrix: product of elementary operations, a
/// permutation and sign flips.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> IntMatrix {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..steps {
        let op = rng.random_range(0..3);
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        match op {
            0 if i != j => {
                let c = rng.random_range(-2..=2);
                for row in m.iter_mut() {
                    row[j] += c * row[i];
                }
            }
            1 => {
                for row in m.iter_mut() {
                    row.swap(i, j);
                }
            }
            _ => {
                for row in m.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
    }
    IntMatrix::from_i64(&m).unwrap()
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, r: i64) -> QuadraticForm {
    let mut g = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.random_range(-r..=r);
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    QuadraticForm::from_i64(&g).unwrap()
}

/// Signature from the characteristic polynomial: a real symmetric matrix
/// has only real eigenvalues, so Descartes' rule of signs is exact.
pub fn signature_by_descartes(q: &QuadraticForm) -> (usize, usize, usize) {
    let n = q.rank();
    let a: Vec<Vec<BigRational>> = q.gram().to_vec();
    // Faddeev-LeVerrier: coefficients of det(tI - A) = t^n + c1 t^{n-1} + ...
    let mut coeffs = vec![BigRational::from_integer(1.into())];
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let prev_c = coeffs[k - 1].clone();
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for t in 0..n {
                    s += &a[i][t] * &m[t][j];
                }
                if i == j {
                    s += &prev_c;
                }
                next[i][j] = s;
            }
        }
        m = next;
        let mut tr = BigRational::zero();
        for i in 0..n {
            for t in 0..n {
                tr += &a[i][t] * &m[t][i];
            }
        }
        coeffs.push(-tr / BigRational::from_integer(BigInt::from(k as i64)));
    }
    // coeffs[k] multiplies t^{n-k}
    let zero = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    let live: Vec<&BigRational> = coeffs[..=n - zero].iter().collect();
    let changes = |signs: Vec<bool>| signs.windows(2).filter(|w| w[0] != w[1]).count();
    let nz = |v: &[(usize, &BigRational)], flip: bool| -> Vec<bool> {
        v.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                // p(-t): t^{n-k} picks up (-1)^{n-k}
                let neg = c.is_negative();
                if flip && (n - k) % 2 == 1 {
                    !neg
                } else {
                    neg
                }
            })
            .collect()
    };
    let indexed: Vec<(usize, &BigRational)> = live.iter().enumerate().map(|(k, c)| (k, *c)).collect();
    let plus = changes(nz(&indexed, false));
    let minus = changes(nz(&indexed, true));
    (plus, zero, minus)
}

pub type Mat = Vec<Vec<i64>>;

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn mat_identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn transpose(a: &Mat) -> Mat {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub fn to_int_matrix(a: &Mat) -> IntMatrix {
    IntMatrix::from_i64(a).unwrap()
}

/// A random unimodular `P` together with `P^{-1}`.
pub fn unimodular_pair(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> (Mat, Mat) {
    let mut p = mat_identity(n);
    let mut q = mat_identity(n);
    for _ in 0..steps {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        match rng.random_range(0..3) {
            0 if i != j => {
                let c = rng.random_range(-2..=2);
                for row in p.iter_mut() {
                    row[j] += c * row[i];
                }
                for t in 0..n {
                    q[i][t] -= c * q[j][t];
                }
            }
            1 => {
                for row in p.iter_mut() {
                    row.swap(i, j);
                }
                q.swap(i, j);
            }
            _ => {
                for row in p.iter_mut() {
                    row[i] = -row[i];
                }
                for v in q[i].iter_mut() {
                    *v = -*v;
                }
            }
        }
    }
    (p, q)
}

/// Random signed permutation matrix.
pub fn signed_permutation(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let mut g = vec![vec![0i64; n]; n];
    for (i, &p) in perm.iter().enumerate() {
        g[p][i] = if rng.random_bool(0.5) { 1 } else { -1 };
    }
    g
}

/// The cyclic group generated by `g` (finite for signed permutations).
pub fn cyclic_group(g: &Mat) -> Vec<Mat> {
    let n = g.len();
    let id = mat_identity(n);
    let mut out = vec![id.clone()];
    let mut cur = g.clone();
    while cur != id {
        out.push(cur.clone());
        cur = mat_mul(&cur, g);
    }
    out
}

/// A form and functional built to satisfy the congruence with modulus `m`
/// (`m = 12` for Riemann-Roch, `24` for the Pontrjagin condition), then
/// perturbed half the time.
pub fn congruence_sample(rng: &mut ChaCha8Rng, m: i64) -> (usize, Entries, Vec<i64>) {
    let n = rng.random_range(1..=4);
    let mut e = random_entries(rng, n, 6, 0.8);
    // make mu_iik + mu_ikk even
    for i in 0..n {
        for k in i + 1..n {
            let a = e.iter().find(|t| (t.0, t.1, t.2) == (i, i, k)).map_or(0, |t| t.3);
            match e.iter_mut().find(|t| (t.0, t.1, t.2) == (i, k, k)) {
                Some(t) if (t.3 + a) % 2 != 0 => t.3 += 1,
                Some(_) => {}
                None if a % 2 != 0 => e.push((i, k, k, 1)),
                None => {}
            }
        }
    }
    let diag = |e: &Entries, i: usize| e.iter().find(|t| (t.0, t.1, t.2) == (i, i, i)).map_or(0, |t| t.3);
    let mut f: Vec<i64> = (0..n)
        .map(|i| {
            let shift = m * rng.random_range(-2..=2);
            if m == 12 {
                -2 * diag(&e, i) + shift
            } else {
                4 * diag(&e, i) + shift
            }
        })
        .collect();
    if rng.random_bool(0.5) {
        if n > 1 && rng.random_bool(0.5) {
            let i = rng.random_range(0..n - 1);
            let k = rng.random_range(i + 1..n);
            e.push((i, i, k, 1));
            e.sort();
            // merge duplicates created by the push
            let mut merged: Entries = Vec::new();
            for t in e {
                match merged.last_mut() {
                    Some(last) if (last.0, last.1, last.2) == (t.0, t.1, t.2) => last.3 += t.3,
                    _ => merged.push(t),
                }
            }
            e = merged.into_iter().filter(|t| t.3 != 0).collect();
        } else {
            let i = rng.random_range(0..n);
            f[i] += rng.random_range(1..m);
        }
    }
    (n, e, f)
}

/// The congruence with modulus `m` evaluated on 500 random vectors with
/// entries in `[-12, 12]`.
pub fn congruence_holds_directly(n: usize, e: &Entries, f: &[i64], m: i64, rng: &mut ChaCha8Rng) -> bool {
    let (a, m) = if m == 12 { (2i128, 12i128) } else { (4, 24) };
    let mut ok = true;
    for _ in 0..500 {
        let x: Vec<i128> = (0..n).map(|_| rng.random_range(-12..=12)).collect();
        let lin: i128 = f.iter().zip(&x).map(|(&c, &v)| c as i128 * v).sum();
        let v = if m == 12 {
            a * cube_i128(n, e, &x) + lin
        } else {
            a * cube_i128(n, e, &x) - lin
        };
        ok &= v.rem_euclid(m) == 0;
    }
    ok
}

/// Rank 1 to 4, entries in `[-3, 3]`: dense, sparse or a constructed product.
pub fn random_cubic(rng: &mut ChaCha8Rng) -> (usize, Entries) {
    loop {
        let n = rng.random_range(1..=4);
        let e = match rng.random_range(0..3) {
            0 => random_entries(rng, n, 3, 1.0),
            1 => random_entries(rng, n, 3, 0.3),
            _ => product_entries(rng, n),
        };
        if !e.is_empty() {
            return (n, e);
        }
    }
}
