use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_N: usize = 64;

/// A subset of `[n]` stored as a bitmask; vertex `i` is bit `i - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KSubset {
    n: u8,
    bits: u64,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl KSubset {
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::Unsupported(format!("n = {n} exceeds {MAX_N}")));
        }
        if bits & !full_mask(n) != 0 {
            let index = 64 - bits.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, max: n });
        }
        Ok(KSubset { n: n as u8, bits })
    }

    pub fn new(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > n {
                return Err(Error::IndexOutOfRange { index: v, max: n });
            }
            if bits & (1 << (v - 1)) != 0 {
                return Err(Error::Parse(format!("vertex {v} repeated")));
            }
            bits |= 1 << (v - 1);
        }
        KSubset::from_bits(n, bits)
    }

    pub(crate) fn raw(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        KSubset { n: n as u8, bits }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn k(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.n() && self.bits & (1 << (v - 1)) != 0
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        let mut b = self.bits;
        std::iter::from_fn(move || {
            if b == 0 {
                return None;
            }
            let v = b.trailing_zeros() as usize + 1;
            b &= b - 1;
            Some(v)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.vertices().collect()
    }

    pub fn min(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    pub fn with(&self, v: usize) -> KSubset {
        KSubset::raw(self.n(), self.bits | (1 << (v - 1)))
    }

    pub fn without(&self, v: usize) -> KSubset {
        KSubset::raw(self.n(), self.bits & !(1 << (v - 1)))
    }

    pub fn is_subset_of(&self, other: &KSubset) -> bool {
        self.bits & !other.bits == 0
    }

    /// Image under a vertex map (used for the right action of permutations).
    pub fn map(&self, f: impl Fn(usize) -> usize) -> KSubset {
        let bits = self.vertices().fold(0u64, |acc, v| acc | 1 << (f(v) - 1));
        KSubset::raw(self.n(), bits)
    }

    /// Lex order on equal-size sets: `σ < τ` iff `min(σ △ τ) ∈ σ`.
    fn lex_cmp_unchecked(&self, other: &KSubset) -> Ordering {
        let diff = self.bits ^ other.bits;
        if diff == 0 {
            Ordering::Equal
        } else if self.bits & (diff & diff.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Position in the lex enumeration of all `k`-subsets of `[n]`.
    pub fn rank(&self) -> u64 {
        let (n, k) = (self.n(), self.k());
        let mut rank = 0;
        let mut prev = 0;
        for (j, a) in self.vertices().enumerate() {
            for c in prev + 1..a {
                rank += binomial(n - c, k - j - 1);
            }
            prev = a;
        }
        rank
    }

    pub fn unrank(n: usize, k: usize, mut rank: u64) -> Result<Self> {
        if k > n || rank >= binomial(n, k) {
            return Err(Error::IndexOutOfRange { index: rank as usize, max: binomial(n, k) as usize });
        }
        let mut bits = 0u64;
        let mut c = 1;
        for j in 0..k {
            loop {
                let block = binomial(n - c, k - j - 1);
                if rank < block {
                    break;
                }
                rank -= block;
                c += 1;
            }
            bits |= 1 << (c - 1);
            c += 1;
        }
        KSubset::from_bits(n, bits)
    }
}

impl PartialOrd for KSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order: by `(n, k)` first, then lex.
impl Ord for KSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.k().cmp(&other.k()))
            .then_with(|| self.lex_cmp_unchecked(other))
    }
}

fn check_compatible(a: &KSubset, b: &KSubset) -> Result<()> {
    if a.n != b.n || a.k() != b.k() {
        return Err(Error::DimensionMismatch(format!(
            "{a} is a {}-subset of [{}] but {b} is a {}-subset of [{}]",
            a.k(),
            a.n,
            b.k(),
            b.n
        )));
    }
    Ok(())
}

pub fn lex_compare(sigma: &KSubset, tau: &KSubset) -> Result<Ordering> {
    check_compatible(sigma, tau)?;
    Ok(sigma.lex_cmp_unchecked(tau))
}

/// `σ ≤ τ` in the domination order: `a_i ≤ b_i` for the sorted elements.
pub fn dominates(sigma: &KSubset, tau: &KSubset) -> Result<bool> {
    check_compatible(sigma, tau)?;
    Ok(sigma.vertices().zip(tau.vertices()).all(|(a, b)| a <= b))
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// All `k`-subsets of `[n]` in lex order.
pub fn all_subsets(n: usize, k: usize) -> impl Iterator<Item = KSubset> {
    use itertools::Itertools;
    (1..=n).combinations(k).map(move |c| KSubset::raw(n, c.iter().fold(0, |acc, v| acc | 1 << (v - 1))))
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() < 10 {
            if self.bits == 0 {
                return write!(f, "{{}}");
            }
            for v in self.vertices() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

/// Parses `"123"` (single digits), `"1,2,3"`, `"1 2 3"` or `"{1,2,3}"` as a subset of `[n]`.
pub fn parse_subset(n: usize, s: &str) -> Result<KSubset> {
    let t = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
    let vertices: Vec<usize> = if t.contains(|c: char| c == ',' || c.is_whitespace()) {
        t.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| usize::from_str(p).map_err(|_| Error::Parse(format!("bad vertex {p:?} in {s:?}"))))
            .collect::<Result<_>>()?
    } else {
        t.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad subset {s:?}"))))
            .collect::<Result<_>>()?
    };
    KSubset::new(n, &vertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, text: &str) -> KSubset {
        parse_subset(n, text).unwrap()
    }

    #[test]
    fn lex_order_on_pairs_of_four() {
        let names = ["12", "13", "14", "23", "24", "34"];
        let sets: Vec<_> = names.iter().map(|t| s(4, t)).collect();
        for w in sets.windows(2) {
            assert_eq!(lex_compare(&w[0], &w[1]).unwrap(), Ordering::Less);
        }
        assert_eq!(lex_compare(&sets[2], &sets[2]).unwrap(), Ordering::Equal);
        let generated: Vec<_> = all_subsets(4, 2).collect();
        assert_eq!(generated, sets);
    }

    #[test]
    fn mismatched_sizes_are_rejected() {
        assert!(lex_compare(&s(4, "12"), &s(4, "123")).is_err());
        assert!(dominates(&s(4, "12"), &s(5, "12")).is_err());
    }

    #[test]
    fn rank_unrank_round_trip_matches_sorting() {
        for n in 0..=6 {
            for k in 0..=n {
                let mut by_sort: Vec<KSubset> =
                    (0u64..1 << n).filter(|b| b.count_ones() as usize == k).map(|b| KSubset::raw(n, b)).collect();
                by_sort.sort_by(|a, b| lex_compare(a, b).unwrap());
                assert_eq!(by_sort.len() as u64, binomial(n, k));
                for (i, x) in by_sort.iter().enumerate() {
                    assert_eq!(x.rank(), i as u64);
                    assert_eq!(KSubset::unrank(n, k, i as u64).unwrap(), *x);
                }
                assert_eq!(all_subsets(n, k).collect::<Vec<_>>(), by_sort);
            }
        }
    }

    #[test]
    fn domination_examples() {
        assert!(dominates(&s(4, "13"), &s(4, "24")).unwrap());
        assert!(!dominates(&s(4, "14"), &s(4, "23")).unwrap());
        assert!(!dominates(&s(4, "23"), &s(4, "14")).unwrap());
    }

    #[test]
    fn domination_refines_into_lex() {
        for n in 1..=6 {
            for k in 0..=n {
                let all: Vec<_> = all_subsets(n, k).collect();
                for a in &all {
                    for b in &all {
                        if dominates(a, b).unwrap() {
                            assert_ne!(lex_compare(a, b).unwrap(), Ordering::Greater, "{a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(s(6, "125").to_vec(), vec![1, 2, 5]);
        assert_eq!(s(12, "{1, 10,12}").to_vec(), vec![1, 10, 12]);
        assert_eq!(s(12, "1 10 12").to_string(), "{1,10,12}");
        assert_eq!(s(6, "125").to_string(), "125");
        assert!(parse_subset(4, "15").is_err());
        assert!(parse_subset(4, "11").is_err());
        assert!(parse_subset(4, "1a").is_err());
    }
}
