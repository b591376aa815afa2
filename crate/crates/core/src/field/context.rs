use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ext::{BinaryField, ExtensionField};
use super::fp_poly::{gf_extension, GfSpec};
use super::poly::{EvalPoint, Var};
use super::prime::{is_prime, PrimeField};
use super::ring::Field;
use crate::error::{Error, Result};

/// Characteristic of the coefficient field: 0 or a prime below 2^62.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(value: u64) -> Result<Self> {
        if value != 0 && !is_prime(value) {
            return Err(Error::InvalidCharacteristic(value));
        }
        if value >= 1 << 62 {
            return Err(Error::Unsupported(format!("characteristic {value} exceeds 2^62")));
        }
        Ok(Characteristic(value))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl TryFrom<u64> for Characteristic {
    type Error = Error;
    fn try_from(v: u64) -> Result<Self> {
        Characteristic::new(v)
    }
}

impl From<Characteristic> for u64 {
    fn from(c: Characteristic) -> u64 {
        c.0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Exact elimination over polynomial rings.
    Symbolic,
    /// Elimination at a random evaluation point in a large enough field.
    Randomized,
}

impl FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "symbolic" => Ok(Backend::Symbolic),
            "randomized" | "random" => Ok(Backend::Randomized),
            _ => Err(Error::Parse(format!("unknown backend {s:?}"))),
        }
    }
}

/// Everything needed to decide linear (in)dependence of polynomial columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    characteristic: Characteristic,
    backend: Backend,
    seed: u64,
    epsilon: Ratio<u64>,
    dual_prime: bool,
}

/// Default failure budget 2^-30.
pub fn default_epsilon() -> Ratio<u64> {
    Ratio::new(1, 1 << 30)
}

/// Parses `a/b` or `2^-e` into a failure budget; the range check happens in [`make_field_context`].
pub fn parse_epsilon(text: &str) -> Result<Ratio<u64>> {
    let bad = || Error::Parse(format!("bad epsilon {text:?}, expected a/b or 2^-e"));
    let text = text.trim();
    if let Some(e) = text.strip_prefix("2^-") {
        let e: u32 = e.parse().map_err(|_| bad())?;
        return if e < 64 { Ok(Ratio::new(1, 1u64 << e)) } else { Err(bad()) };
    }
    let (a, b) = text.split_once('/').ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if b == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(a, b))
}

pub fn make_field_context(
    characteristic: Characteristic,
    backend: Backend,
    seed: u64,
    epsilon: Ratio<u64>,
) -> Result<FieldContext> {
    if epsilon <= Ratio::zero() || epsilon >= Ratio::one() {
        return Err(Error::InvalidEpsilon(epsilon.to_string()));
    }
    Ok(FieldContext { characteristic, backend, seed, epsilon, dual_prime: false })
}

impl FieldContext {
    pub fn symbolic(characteristic: u64) -> Result<Self> {
        make_field_context(Characteristic::new(characteristic)?, Backend::Symbolic, 0, default_epsilon())
    }

    pub fn randomized(characteristic: u64, seed: u64) -> Result<Self> {
        make_field_context(Characteristic::new(characteristic)?, Backend::Randomized, seed, default_epsilon())
    }

    /// Characteristic-zero only: eliminate modulo two fixed 62-bit primes and
    /// accept the answer when both agree, falling back to exact arithmetic otherwise.
    pub fn with_dual_prime(mut self, on: bool) -> Self {
        self.dual_prime = on;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn epsilon(&self) -> Ratio<u64> {
        self.epsilon
    }

    pub fn dual_prime(&self) -> bool {
        self.dual_prime
    }

    /// `ceil(2 * degree_bound / epsilon)`: size of the sampling set that keeps the
    /// Schwartz-Zippel failure probability below `epsilon`.
    pub fn min_sample_size(&self, degree_bound: &BigUint) -> BigUint {
        let num = BigUint::from(2u32) * degree_bound * BigUint::from(*self.epsilon.denom());
        let den = BigUint::from(*self.epsilon.numer());
        Integer::div_ceil(&num, &den).max(BigUint::one())
    }

    /// Extension degree `e`, minimal with `p^e >= min_sample_size`. Panics in characteristic 0.
    pub fn extension_degree(&self, degree_bound: &BigUint) -> u32 {
        let p = self.characteristic.value();
        assert!(p != 0, "extension degree is only defined in positive characteristic");
        let target = self.min_sample_size(degree_bound);
        let mut e = 1;
        let mut size = BigUint::from(p);
        while size < target {
            size *= p;
            e += 1;
        }
        e
    }

    /// The concrete field used by the randomized backend in characteristic `p`.
    pub fn concrete_field(&self, degree_bound: &BigUint) -> ConcreteField {
        let p = self.characteristic.value();
        assert!(p != 0, "characteristic 0 samples integers instead");
        let spec = cached_extension(p, &self.min_sample_size(degree_bound), self.seed);
        ConcreteField::from_spec(spec)
    }

    /// Integers are sampled uniformly from `[1, sampling_bound]` in characteristic 0.
    pub fn sampling_bound(&self, degree_bound: &BigUint) -> BigUint {
        self.min_sample_size(degree_bound)
    }

    /// Independent random stream for one call, keyed by a stable call identifier.
    pub fn stream(&self, call_id: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(splitmix64(self.seed ^ splitmix64(call_id)))
    }
}

fn cached_extension(p: u64, min_size: &BigUint, seed: u64) -> GfSpec {
    static CACHE: OnceLock<Mutex<HashMap<(u64, BigUint, u64), GfSpec>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (p, min_size.clone(), seed);
    if let Some(spec) = cache.lock().unwrap().get(&key) {
        return spec.clone();
    }
    let spec = gf_extension(p, min_size, seed);
    cache.lock().unwrap().insert(key, spec.clone());
    spec
}

/// A finite field selected for randomized evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConcreteField {
    Prime(PrimeField),
    Binary(BinaryField),
    Extension(ExtensionField),
}

impl ConcreteField {
    pub fn from_spec(spec: GfSpec) -> Self {
        match (spec.p, spec.degree) {
            (p, 1) => ConcreteField::Prime(PrimeField::new(p)),
            (2, e) if e <= 63 => ConcreteField::Binary(BinaryField::new(&spec)),
            _ => ConcreteField::Extension(ExtensionField::new(spec)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            ConcreteField::Prime(f) => f.modulus(),
            ConcreteField::Binary(_) => 2,
            ConcreteField::Extension(f) => f.spec().p,
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            ConcreteField::Prime(_) => 1,
            ConcreteField::Binary(f) => f.degree(),
            ConcreteField::Extension(f) => f.spec().degree,
        }
    }
}

/// Draws a uniformly random field element for each variable.
pub fn random_point<F: Field>(field: &F, vars: &[Var], rng: &mut ChaCha8Rng) -> EvalPoint<F::Elem> {
    vars.iter().map(|&v| (v, field.random(rng))).collect()
}

/// Draws integers uniformly from `[1, bound]` for each variable.
pub fn random_integer_point(bound: &BigUint, vars: &[Var], rng: &mut ChaCha8Rng) -> EvalPoint<BigInt> {
    let hi = bound + 1u32;
    vars.iter().map(|&v| (v, BigInt::from(rng.gen_biguint_range(&BigUint::one(), &hi)))).collect()
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// FNV-1a; stable across platforms and releases, unlike `DefaultHasher`.
#[derive(Debug, Clone)]
pub struct StableHasher(u64);

impl Default for StableHasher {
    fn default() -> Self {
        StableHasher(0xcbf2_9ce4_8422_2325)
    }
}

impl Hasher for StableHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
    }
}

/// Stable call identifier for deriving a random stream.
pub fn call_id<T: Hash + ?Sized>(tag: &T) -> u64 {
    let mut h = StableHasher::default();
    tag.hash(&mut h);
    h.finish()
}
