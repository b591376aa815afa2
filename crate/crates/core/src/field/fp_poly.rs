//! Dense univariate polynomials over GF(p), used to build extension fields.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is the
//! empty vector.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::prime::{mul_mod, pow_mod};

pub(crate) fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a nonzero polynomial `f`.
pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let df = degree(f).expect("division by the zero polynomial");
    let lead_inv = pow_mod(f[df], p - 2, p);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < df {
            break;
        }
        let c = mul_mod(r[dr], lead_inv, p);
        let shift = dr - df;
        for (i, &fi) in f[..=df].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mul_mod(c, fi, p)) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(&result, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        e >>= 1;
    }
    result
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let inv = pow_mod(x[d], p - 2, p);
        x.iter_mut().for_each(|c| *c = mul_mod(*c, inv, p));
    }
    x
}

/// Inverse of `a` modulo the irreducible `f`, by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: &[u64], f: &[u64], p: u64) -> Option<Vec<u64>> {
    let (mut r0, mut r1) = (trim(f.to_vec()), rem(a, f, p));
    let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
    if r1.is_empty() {
        return None;
    }
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // r0 is a nonzero constant when gcd(a, f) = 1
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = pow_mod(r0[0], p - 2, p);
    Some(rem(&s0.iter().map(|&x| mul_mod(x, c, p)).collect::<Vec<_>>(), f, p))
}

fn divmod(a: &[u64], f: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let df = degree(f).expect("division by the zero polynomial");
    let lead_inv = pow_mod(f[df], p - 2, p);
    let mut r = trim(a.to_vec());
    let mut q = vec![0u64; r.len().saturating_sub(df).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < df {
            break;
        }
        let c = mul_mod(r[dr], lead_inv, p);
        let shift = dr - df;
        q[shift] = c;
        for (i, &fi) in f[..=df].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mul_mod(c, fi, p)) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic polynomial `f` over GF(p).
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(e) = degree(f) else { return false };
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    let x = vec![0, 1];
    // frob[i] = x^(p^i) mod f
    let mut frob = vec![rem(&x, f, p)];
    for i in 1..=e {
        let next = powmod(&frob[i - 1], p, f, p);
        frob.push(next);
    }
    if sub(&frob[e], &rem(&x, f, p), p) != Vec::<u64>::new() {
        return false;
    }
    prime_factors(e as u64).into_iter().all(|q| {
        let h = sub(&frob[e / q as usize], &x, p);
        degree(&gcd(&h, f, p)) == Some(0)
    })
}

/// A concrete finite field GF(p^degree) presented as GF(p)[t]/(modulus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfSpec {
    pub p: u64,
    pub degree: u32,
    /// Monic irreducible polynomial of the given degree, lowest coefficient first.
    pub modulus: Vec<u64>,
}

impl GfSpec {
    pub fn order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.degree)
    }
}

/// Finds a field GF(p^e) with `p^e >= min_size` and `e` minimal.
///
/// The modulus is drawn by rejection sampling from a stream seeded by `seed`,
/// so the result is reproducible.
pub fn gf_extension(p: u64, min_size: &BigUint, seed: u64) -> GfSpec {
    let mut e = 1u32;
    let mut size = BigUint::from(p);
    while &size < min_size {
        size *= p;
        e += 1;
    }
    if e == 1 {
        return GfSpec { p, degree: 1, modulus: vec![0, 1] };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6766_5f65_7874_656e);
    loop {
        let mut f: Vec<u64> = (0..e).map(|_| rng.gen_range(0..p)).collect();
        f.push(1);
        if f[0] != 0 && is_irreducible(&f, p) {
            return GfSpec { p, degree: e, modulus: f };
        }
    }
}
