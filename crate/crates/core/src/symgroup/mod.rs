//! The symmetric group acting on `[n]` from the right: `i·(vw) = (i·v)·w`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Matrix, Ring};

/// Pairs `(i, j)` with `i < j`, 1-based.
pub type InversionSet = BTreeSet<(usize, usize)>;

/// A permutation in one-line notation `[1·w, …, n·w]`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > 255 {
            return Err(Error::Unsupported(format!("permutations of {n} letters")));
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::IndexOutOfRange { index: v, max: n });
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Parse(format!("{v} repeated in one-line notation")));
            }
        }
        Ok(Permutation { images: images.iter().map(|&v| (v - 1) as u8).collect() })
    }

    /// Simple transposition `s_i = (i i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        Permutation::transposition(n, i, i + 1)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(Error::IndexOutOfRange { index: v, max: n });
            }
        }
        if i == j {
            return Err(Error::NotTransposition(format!("({i} {j})")));
        }
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The longest element `i ↦ n - i + 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (0..n as u8).rev().collect() }
    }

    /// The `n`-cycle `(1 2 … n)`, one-line `[2, 3, …, n, 1]`.
    pub fn cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| ((i + 1) % n) as u8).collect() }
    }

    /// `s_{i_1} s_{i_2} ⋯` multiplied left to right.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        word.iter().try_fold(Permutation::identity(n), |acc, &i| Ok(acc.compose(&Permutation::simple(n, i)?)))
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `i·w`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self · other`: first `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation { images: self.images.iter().map(|&v| other.images[v as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Permutation { images }
    }

    pub fn inversions(&self) -> InversionSet {
        let n = self.n();
        let mut out = InversionSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    out.insert((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        let n = self.n();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.images[i] > self.images[j]).count()).sum()
    }

    /// `i` with `ℓ(w s_i) < ℓ(w)`, i.e. `(i+1)` precedes `i` in one-line notation.
    pub fn right_descents(&self) -> Vec<usize> {
        let pos = self.inverse();
        (1..self.n()).filter(|&i| pos.images[i] < pos.images[i - 1]).collect()
    }

    /// A reduced word, obtained by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = w.right_descents().first() {
            word.push(i);
            w = w.compose(&Permutation::simple(self.n(), i).unwrap());
        }
        word.reverse();
        word
    }

    /// Permutation matrix with `P[i][i·w] = 1`, so that `e_i P = e_{i·w}`.
    pub fn matrix<R: Ring>(&self, ring: &R) -> Matrix<R::Elem> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| if self.images[i] as usize == j { ring.one() } else { ring.zero() }).collect())
            .collect()
    }

    /// Image of a pair under a vertex map, reordered increasingly.
    fn map_pair(&self, (i, j): (usize, usize)) -> (usize, usize) {
        let (a, b) = (self.apply(i), self.apply(j));
        (a.min(b), a.max(b))
    }

    /// All permutations of `[n]` in lex order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (0..n as u8).permutations(n).map(|images| Permutation { images })
    }

    /// Reduced-word spelling such as `s1s2s1`, or `e`.
    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            "e".into()
        } else {
            w.iter().map(|i| format!("s{i}")).collect()
        }
    }
}

/// `w ≥ u` in the right weak order: `ℓ(u) + ℓ(u⁻¹w) = ℓ(w)`.
pub fn weak_order_geq(w: &Permutation, u: &Permutation) -> bool {
    u.length() + u.inverse().compose(w).length() == w.length()
}

/// `inv v △ (inv w)·v⁻¹`, which equals `inv(vw)`.
pub fn inv_of_product(v: &Permutation, w: &Permutation) -> InversionSet {
    let vinv = v.inverse();
    let moved: InversionSet = w.inversions().into_iter().map(|p| vinv.map_pair(p)).collect();
    v.inversions().symmetric_difference(&moved).copied().collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// Parses one-line notation (`2,3,1` or `[2,3,1]`) or a product of named factors
/// `e`, `w0`, `cN` and `s_i`, e.g. `w0 s4 s3`, `w0s1` or `s1 s2 s1`.
pub fn parse_permutation(n: usize, text: &str) -> Result<Permutation> {
    let t = text.trim();
    if t.contains(',') || t.starts_with('[') {
        let body = t.trim_start_matches('[').trim_end_matches(']');
        let images = body
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad one-line entry {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(Error::DimensionMismatch(format!("{t} has {} entries, expected {n}", images.len())));
        }
        return Permutation::from_one_line(&images);
    }
    let chars: Vec<char> = t.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '.').collect();
    let mut acc = Permutation::identity(n);
    let mut pos = 0;
    while pos < chars.len() {
        let head = chars[pos];
        pos += 1;
        let start = pos;
        if head == 'c' && pos < chars.len() && matches!(chars[pos], 'N' | 'n') {
            pos += 1;
        }
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let digits: String = chars[start..pos].iter().collect();
        let factor = match (head, digits.as_str()) {
            ('e', "") => Permutation::identity(n),
            ('w', "0") => Permutation::longest(n),
            ('c', "N") | ('c', "n") | ('c', "") => Permutation::cycle(n),
            ('c', d) => {
                let m: usize = d.parse().map_err(|_| Error::Parse(format!("bad cycle {d}")))?;
                if m != n {
                    return Err(Error::DimensionMismatch(format!("c{m} used with n = {n}")));
                }
                Permutation::cycle(n)
            }
            ('s', d) if !d.is_empty() => Permutation::simple(n, d.parse().map_err(|_| Error::Parse(format!("bad s{d}")))?)?,
            _ => return Err(Error::Parse(format!("cannot parse permutation {text:?}"))),
        };
        acc = acc.compose(&factor);
    }
    if chars.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    Ok(acc)
}
