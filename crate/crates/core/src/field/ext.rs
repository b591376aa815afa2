//! Extension fields GF(p^e) with e > 1.

use num_bigint::BigInt;
use rand::Rng;

use super::fp_poly::{self, GfSpec};
use super::prime::mul_mod;
use super::ring::{bigint_mod, Field, Ring};

/// GF(2^e) for `2 <= e <= 63`, elements packed into the low `e` bits of a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryField {
    degree: u32,
    /// Reduction polynomial including the leading bit `1 << degree`.
    modulus: u64,
}

impl BinaryField {
    pub fn new(spec: &GfSpec) -> Self {
        assert_eq!(spec.p, 2);
        assert!((2..=63).contains(&spec.degree), "binary extension degree must be in 2..=63");
        let modulus = spec.modulus.iter().enumerate().fold(0u64, |m, (i, &c)| m | (c << i));
        BinaryField { degree: spec.degree, modulus }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &a);
            }
            a = self.mul(&a, &a);
            e >>= 1;
        }
        r
    }
}

impl Ring for BinaryField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        a ^ b
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        a ^ b
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        let (mut a, mut b) = (*a, *b);
        let top = 1u64 << self.degree;
        let mut r = 0;
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        r
    }
    fn neg(&self, a: &u64) -> u64 {
        *a
    }
    fn from_bigint(&self, c: &BigInt) -> u64 {
        bigint_mod(c, 2)
    }
    fn characteristic(&self) -> u64 {
        2
    }
}

impl Field for BinaryField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // a^(2^e - 2)
        Some(self.pow(*a, (1u64 << self.degree) - 2))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen::<u64>() & ((1u64 << self.degree) - 1)
    }
}

/// GF(p^e) for an arbitrary prime `p`, elements are coefficient vectors of length `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionField {
    spec: GfSpec,
}

impl ExtensionField {
    pub fn new(spec: GfSpec) -> Self {
        assert!(spec.degree >= 2);
        ExtensionField { spec }
    }

    pub fn spec(&self) -> &GfSpec {
        &self.spec
    }

    fn pad(&self, mut v: Vec<u64>) -> Vec<u64> {
        v.resize(self.spec.degree as usize, 0);
        v
    }
}

impl Ring for ExtensionField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.spec.degree as usize]
    }
    fn one(&self) -> Vec<u64> {
        self.pad(vec![1])
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.spec.p;
        a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.spec.p;
        a.iter().zip(b).map(|(&x, &y)| (x + p - y) % p).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.spec.p;
        let e = self.spec.degree as usize;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        // modulus is monic of degree e
        let f = &self.spec.modulus;
        for d in (e..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &fi) in f[..e].iter().enumerate() {
                let idx = d - e + i;
                prod[idx] = (prod[idx] + p - mul_mod(c, fi, p)) % p;
            }
        }
        prod.truncate(e);
        prod
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        let p = self.spec.p;
        a.iter().map(|&x| (p - x) % p).collect()
    }
    fn from_bigint(&self, c: &BigInt) -> Vec<u64> {
        self.pad(vec![bigint_mod(c, self.spec.p)])
    }
    fn characteristic(&self) -> u64 {
        self.spec.p
    }
}

impl Field for ExtensionField {
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        fp_poly::inv_mod(a, &self.spec.modulus, self.spec.p).map(|v| self.pad(v))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.spec.degree).map(|_| rng.gen_range(0..self.spec.p)).collect()
    }
}
