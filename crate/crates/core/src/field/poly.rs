//! Sparse multivariate polynomials in the indeterminates `x_ij`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::prime::pow_mod;
use super::ring::{bigint_mod, Domain, Ring};
use crate::error::{Error, Result};

/// The indeterminate `x_{row,col}` (1-based indices).
///
/// Variables are ordered by `(col, row)`; this order, not the lex order on
/// subsets, drives monomial comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var {
    pub row: u8,
    pub col: u8,
}

impl Var {
    pub fn new(row: usize, col: usize) -> Self {
        Var { row: row as u8, col: col as u8 }
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.col, self.row).cmp(&(other.col, other.row))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.row < 10 && self.col < 10 {
            write!(f, "x{}{}", self.row, self.col)
        } else {
            write!(f, "x{}_{}", self.row, self.col)
        }
    }
}

/// A monomial as a sparse exponent vector sorted by variable.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_exponents(mut exps: Vec<(Var, u32)>) -> Self {
        exps.retain(|&(_, e)| e > 0);
        exps.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_exponents(self.0.iter().map(|&(v, e)| (f(v), e)).collect())
    }
}

/// Graded lex: total degree first, then the larger exponent at the first
/// differing variable wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.degree().cmp(&other.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial over `Z` (characteristic 0) or `GF(p)`.
///
/// No zero coefficients are stored, so the zero polynomial is the empty map
/// and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    characteristic: u64,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(characteristic: u64) -> Self {
        MultiPoly { characteristic, terms: BTreeMap::new() }
    }

    pub fn constant(characteristic: u64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(characteristic);
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn one(characteristic: u64) -> Self {
        Self::constant(characteristic, 1)
    }

    pub fn var(characteristic: u64, v: Var) -> Self {
        Self::monomial(characteristic, Monomial::var(v), 1)
    }

    pub fn monomial(characteristic: u64, m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(characteristic);
        p.add_term(m, c.into());
        p
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    fn normalize(&self, c: BigInt) -> BigInt {
        normalize_coeff(self.characteristic, c)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        let c = self.normalize(c);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = normalize_coeff(self.characteristic, &*existing + c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_same_ring(&self, other: &MultiPoly) {
        assert_eq!(self.characteristic, other.characteristic, "polynomials over different rings");
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.check_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.characteristic);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.check_same_ring(other);
        let mut out = MultiPoly::zero(self.characteristic);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero(self.characteristic);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.characteristic);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if the division is not exact.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.check_same_ring(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let p = self.characteristic;
        let lc_inv = (p != 0).then(|| BigInt::from(pow_mod(bigint_mod(&lc, p), p - 2, p)));
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(p);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm)?;
            let qc = match &lc_inv {
                Some(inv) => c * inv,
                None => {
                    let (q, r) = c.div_rem(&lc);
                    if !r.is_zero() {
                        return None;
                    }
                    q
                }
            };
            let term = MultiPoly::monomial(p, qm, qc);
            rem = rem.sub(&term.mul(divisor));
            quot = quot.add(&term);
        }
        Some(quot)
    }

    /// Renames every variable through `f` (a ring endomorphism when `f` is a bijection).
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> MultiPoly {
        let mut out = MultiPoly::zero(self.characteristic);
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&f), c.clone());
        }
        out
    }

    /// Evaluation homomorphism into `ring` at `point`.
    pub fn eval<R: Ring>(&self, ring: &R, point: &EvalPoint<R::Elem>) -> Result<R::Elem> {
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut term = ring.from_bigint(c);
            for &(v, e) in m.exponents() {
                let x = point.get(v).ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                for _ in 0..e {
                    term = ring.mul(&term, x);
                }
            }
            acc = ring.add(&acc, &term);
        }
        Ok(acc)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            if m.0.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// An assignment of ring elements to indeterminates.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalPoint<E> {
    values: BTreeMap<Var, E>,
}

impl<E> Default for EvalPoint<E> {
    fn default() -> Self {
        EvalPoint { values: BTreeMap::new() }
    }
}

impl<E> EvalPoint<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: Var, value: E) {
        self.values.insert(v, value);
    }

    pub fn get(&self, v: Var) -> Option<&E> {
        self.values.get(&v)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl<E> FromIterator<(Var, E)> for EvalPoint<E> {
    fn from_iter<T: IntoIterator<Item = (Var, E)>>(iter: T) -> Self {
        EvalPoint { values: iter.into_iter().collect() }
    }
}

/// Polynomials over `Z` or `GF(p)` viewed as a [`Domain`] for fraction-free elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyRing {
    pub characteristic: u64,
}

impl PolyRing {
    pub const fn new(characteristic: u64) -> Self {
        PolyRing { characteristic }
    }
}

impl Ring for PolyRing {
    type Elem = MultiPoly;

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.characteristic)
    }
    fn one(&self) -> MultiPoly {
        MultiPoly::one(self.characteristic)
    }
    fn is_zero(&self, a: &MultiPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.add(b)
    }
    fn sub(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.sub(b)
    }
    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.mul(b)
    }
    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        a.neg()
    }
    fn from_bigint(&self, c: &BigInt) -> MultiPoly {
        MultiPoly::constant(self.characteristic, c.clone())
    }
    fn characteristic(&self) -> u64 {
        self.characteristic
    }
    fn mul_sub(&self, a: &MultiPoly, b: &MultiPoly, c: &MultiPoly, d: &MultiPoly) -> MultiPoly {
        if c.is_zero() || d.is_zero() {
            return a.mul(b);
        }
        a.mul(b).sub(&c.mul(d))
    }
}

impl Domain for PolyRing {
    fn div_exact(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.div_exact(b).expect("inexact polynomial division")
    }
}

fn normalize_coeff(p: u64, c: BigInt) -> BigInt {
    if p == 0 {
        c
    } else {
        BigInt::from(bigint_mod(&c, p))
    }
}
