use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// A commutative ring with an explicit context object.
///
/// Element types are plain data; all arithmetic goes through the context so
/// that the same element representation can serve several rings (for example
/// `u64` residues modulo different primes).
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Image of an integer under the canonical map `Z -> R`.
    fn from_bigint(&self, c: &BigInt) -> Self::Elem;
    fn characteristic(&self) -> u64;

    fn from_i64(&self, c: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(c))
    }

    /// `a*b - c*d`, the basic step of fraction-free elimination.
    fn mul_sub(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem, d: &Self::Elem) -> Self::Elem {
        self.sub(&self.mul(a, b), &self.mul(c, d))
    }
}

/// An integral domain in which exact division can be carried out.
pub trait Domain: Ring {
    /// Returns `a / b`; the caller guarantees that `b` divides `a`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// A field from which uniformly random elements can be drawn.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
}

impl<F: Field> Domain for F {
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let inv = self.inv(b).expect("division by zero");
        self.mul(a, &inv)
    }
}

/// The ring of integers, used for exact characteristic-zero elimination.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn from_bigint(&self, c: &BigInt) -> BigInt {
        c.clone()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn mul_sub(&self, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
        if c.is_zero() || d.is_zero() {
            return a * b;
        }
        if a.is_zero() || b.is_zero() {
            return -(c * d);
        }
        a * b - c * d
    }
}

impl Domain for Integers {
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> BigInt {
        if b.is_one() {
            return a.clone();
        }
        if (-b).is_one() {
            return -a;
        }
        let (q, r) = a.div_rem(b);
        debug_assert!(r.is_zero(), "inexact integer division");
        q
    }
}

/// Residue of `c` modulo `p` as an integer in `[0, p)`.
pub(crate) fn bigint_mod(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    debug_assert!(!r.is_negative());
    r.iter_u64_digits().next().unwrap_or(0)
}
