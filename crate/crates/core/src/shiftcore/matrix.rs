use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Matrix, MultiPoly, PolyRing, Ring, Var};
use crate::symgroup::Permutation;

/// A square matrix of polynomials in the variables `x_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenericMatrix {
    n: usize,
    characteristic: u64,
    entries: Matrix<MultiPoly>,
    /// Set by constructors whose output has a nonzero constant determinant.
    invertible: bool,
}

fn x(ch: u64, i: usize, j: usize) -> MultiPoly {
    MultiPoly::var(ch, Var::new(i, j))
}

impl GenericMatrix {
    pub fn from_entries(characteristic: u64, entries: Matrix<MultiPoly>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        if entries.iter().flatten().any(|e| e.characteristic() != characteristic) {
            return Err(Error::DimensionMismatch("entries over a different characteristic".into()));
        }
        Ok(GenericMatrix { n, characteristic, entries, invertible: false })
    }

    pub fn from_integers(characteristic: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let entries = rows.iter().map(|r| r.iter().map(|&c| MultiPoly::constant(characteristic, c)).collect()).collect();
        GenericMatrix::from_entries(characteristic, entries)
    }

    fn structured(n: usize, characteristic: u64, entries: Matrix<MultiPoly>) -> Self {
        GenericMatrix { n, characteristic, entries, invertible: true }
    }

    pub fn identity(n: usize, characteristic: u64) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n).map(|j| if i == j { MultiPoly::one(characteristic) } else { MultiPoly::zero(characteristic) }).collect()
            })
            .collect();
        GenericMatrix::structured(n, characteristic, entries)
    }

    /// The matrix `𝔛` with independent entries `x_ij`.
    pub fn build_x(n: usize, characteristic: u64) -> Self {
        let entries = (1..=n).map(|i| (1..=n).map(|j| x(characteristic, i, j)).collect()).collect();
        GenericMatrix { n, characteristic, entries, invertible: false }
    }

    /// Unipotent upper triangular `𝔘` with `x_ij` above the diagonal.
    pub fn build_u(n: usize, characteristic: u64) -> Self {
        GenericMatrix::build_uw(&Permutation::longest(n), characteristic)
    }

    /// `𝔘(w)`: unipotent with `x_ij` exactly at the inversions of `w`.
    pub fn build_uw(w: &Permutation, characteristic: u64) -> Self {
        let mut m = GenericMatrix::identity(w.n(), characteristic);
        for (i, j) in w.inversions() {
            m.entries[i - 1][j - 1] = x(characteristic, i, j);
        }
        m
    }

    /// `𝔯(w) = 𝔘(w)·w`: `1` at `(i, i·w)` and `x_il` at `(i, l·w)` for `(i, l) ∈ inv w`.
    pub fn build_r(w: &Permutation, characteristic: u64) -> Self {
        let n = w.n();
        let mut entries = vec![vec![MultiPoly::zero(characteristic); n]; n];
        for i in 1..=n {
            entries[i - 1][w.apply(i) - 1] = MultiPoly::one(characteristic);
        }
        for (i, l) in w.inversions() {
            entries[i - 1][w.apply(l) - 1] = x(characteristic, i, l);
        }
        GenericMatrix::structured(n, characteristic, entries)
    }

    /// `γ((i j))`: `x_ij` at `(i,i)`, `1` at `(i,j)` and `(j,i)`, `0` at `(j,j)`.
    ///
    /// Lies in the Bruhat cell of `(i j)` but is not generic there unless `j = i + 1`.
    pub fn build_gamma(t: &Permutation, characteristic: u64) -> Result<Self> {
        let moved: Vec<usize> = (1..=t.n()).filter(|&i| t.apply(i) != i).collect();
        let [i, j] = moved[..] else {
            return Err(Error::NotTransposition(t.to_string()));
        };
        let mut m = GenericMatrix::identity(t.n(), characteristic);
        m.entries[i - 1][i - 1] = x(characteristic, i, j);
        m.entries[i - 1][j - 1] = MultiPoly::one(characteristic);
        m.entries[j - 1][i - 1] = MultiPoly::one(characteristic);
        m.entries[j - 1][j - 1] = MultiPoly::zero(characteristic);
        Ok(m)
    }

    /// Vandermonde matrix with entry `(i, j) = x_j^i`; the variable `x_j` is `Var(j, j)`.
    pub fn build_vandermonde(n: usize, characteristic: u64) -> Self {
        let entries = (1..=n).map(|i| (1..=n).map(|j| x(characteristic, j, j).pow(i as u32)).collect()).collect();
        GenericMatrix { n, characteristic, entries, invertible: false }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn entries(&self) -> &Matrix<MultiPoly> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i - 1][j - 1]
    }

    pub fn known_invertible(&self) -> bool {
        self.invertible
    }

    /// Maximal total degree of an entry.
    pub fn degree_bound(&self) -> u32 {
        self.entries.iter().flatten().map(MultiPoly::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.entries.iter().flatten().flat_map(|e| e.variables()).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(MultiPoly::is_zero)
    }

    pub fn mul(&self, other: &GenericMatrix) -> GenericMatrix {
        let ring = PolyRing::new(self.characteristic);
        let entries = crate::field::mat_mul(&ring, &self.entries, &other.entries);
        GenericMatrix { n: self.n, characteristic: self.characteristic, entries, invertible: self.invertible && other.invertible }
    }

    pub fn sub(&self, other: &GenericMatrix) -> GenericMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(p, q)| p.sub(q)).collect())
            .collect();
        GenericMatrix { n: self.n, characteristic: self.characteristic, entries, invertible: false }
    }

    /// Relabels variables by `(x_ij)^v = x_{i·v⁻¹, j·v⁻¹}`, so that `twist(𝔛, v) = v⁻¹𝔛v`.
    pub fn twist(&self, v: &Permutation) -> GenericMatrix {
        let vinv = v.inverse();
        let entries = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.map_vars(|var| Var::new(vinv.apply(var.row as usize), vinv.apply(var.col as usize))))
                    .collect()
            })
            .collect();
        GenericMatrix { entries, ..self.clone() }
    }

    /// Evaluates every entry at `point`.
    pub fn eval<R: Ring>(&self, ring: &R, point: &crate::field::EvalPoint<R::Elem>) -> Result<Matrix<R::Elem>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.eval(ring, point)).collect()).collect()
    }

    /// Constant entries only; `None` if some entry involves a variable.
    pub fn as_integer_matrix(&self) -> Option<Matrix<BigInt>> {
        self.entries.iter().map(|r| r.iter().map(MultiPoly::as_constant).collect()).collect()
    }
}

impl fmt::Display for GenericMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `𝔯(v)·twist(𝔯(w), v) - 𝔯(vw)`, checked against the closed form
/// `Σ x_il · x_{l, k·(vw)⁻¹}` over `(i, l) ∈ inv v` with `(l·v, k·w⁻¹) ∈ inv w`.
pub fn product_defect(v: &Permutation, w: &Permutation, characteristic: u64) -> Result<GenericMatrix> {
    let vw = v.compose(w);
    if v.length() + w.length() != vw.length() {
        return Err(Error::NonAdditiveLength(v.word_string(), w.word_string()));
    }
    let rv = GenericMatrix::build_r(v, characteristic);
    let rw = GenericMatrix::build_r(w, characteristic).twist(v);
    let defect = rv.mul(&rw).sub(&GenericMatrix::build_r(&vw, characteristic));

    let n = v.n();
    let (inv_v, inv_w) = (v.inversions(), w.inversions());
    let (winv, vwinv) = (w.inverse(), vw.inverse());
    let mut expected = vec![vec![MultiPoly::zero(characteristic); n]; n];
    for &(i, l) in &inv_v {
        for k in 1..=n {
            if inv_w.contains(&(v.apply(l), winv.apply(k))) {
                let term = x(characteristic, i, l).mul(&x(characteristic, l, vwinv.apply(k)));
                expected[i - 1][k - 1] = expected[i - 1][k - 1].add(&term);
            }
        }
    }
    if defect.entries != expected {
        return Err(Error::Invariant(format!("product defect of {v} and {w} deviates from the closed form")));
    }
    Ok(defect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{EvalPoint, Integers};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(n: usize, i: usize) -> Permutation {
        Permutation::simple(n, i).unwrap()
    }

    #[test]
    fn cycle_representative_shape() {
        let r = GenericMatrix::build_r(&Permutation::cycle(4), 0);
        let first: Vec<String> = (1..=4).map(|i| r.entry(i, 1).to_string()).collect();
        assert_eq!(first, ["x14", "x24", "x34", "1"]);
        for i in 1..=3 {
            for j in 2..=4 {
                let want = if j == i + 1 { "1" } else { "0" };
                assert_eq!(r.entry(i, j).to_string(), want);
            }
        }
        assert_eq!(r.entry(4, 2).to_string(), "0");
    }

    #[test]
    fn unipotent_and_gamma() {
        assert_eq!(GenericMatrix::build_uw(&Permutation::longest(5), 0), GenericMatrix::build_u(5, 0));
        let u = GenericMatrix::build_u(4, 0);
        assert_eq!(u.entry(1, 2).to_string(), "x12");
        assert_eq!(u.entry(2, 1).to_string(), "0");
        for i in 1..5 {
            let t = s(5, i);
            assert_eq!(GenericMatrix::build_r(&t, 2), GenericMatrix::build_gamma(&t, 2).unwrap());
        }
        assert!(GenericMatrix::build_gamma(&Permutation::cycle(4), 0).is_err());
        let w0 = Permutation::longest(4);
        let p = GenericMatrix::from_entries(0, w0.matrix(&PolyRing::new(0))).unwrap();
        let uw0 = GenericMatrix::build_u(4, 0).mul(&p);
        let first: Vec<String> = (1..=4).map(|j| uw0.entry(1, j).to_string()).collect();
        assert_eq!(first, ["x14", "x13", "x12", "1"]);
        assert_eq!(uw0.entries(), GenericMatrix::build_r(&w0, 0).entries());
    }

    #[test]
    fn r_is_u_times_w() {
        for w in Permutation::all(4) {
            let p = GenericMatrix::from_entries(0, w.matrix(&PolyRing::new(0))).unwrap();
            assert_eq!(GenericMatrix::build_uw(&w, 0).mul(&p).entries, GenericMatrix::build_r(&w, 0).entries);
        }
    }

    #[test]
    fn twist_is_conjugation() {
        let ring = PolyRing::new(0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=5 {
            let xm = GenericMatrix::build_x(n, 0);
            for _ in 0..10 {
                let idx = rng.gen_range(0..(1..=n).product::<usize>());
                let w = Permutation::all(n).nth(idx).unwrap();
                let conj = crate::field::mat_mul(
                    &ring,
                    &crate::field::mat_mul(&ring, &w.inverse().matrix(&ring), xm.entries()),
                    &w.matrix(&ring),
                );
                assert_eq!(xm.twist(&w).entries, conj);
                assert_eq!(xm.twist(&w).twist(&w.inverse()), xm);
            }
            assert_eq!(xm.twist(&Permutation::identity(n)), xm);
        }
    }

    #[test]
    fn defects() {
        for i in 1..4 {
            for j in 1..4 {
                if i != j {
                    assert!(product_defect(&s(4, i), &s(4, j), 0).unwrap().is_zero());
                }
            }
        }
        let v = Permutation::from_word(4, &[1, 2]).unwrap();
        let d = product_defect(&v, &s(4, 1), 0).unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                let want = if (i, j) == (1, 1) { "x12*x23" } else { "0" };
                assert_eq!(d.entry(i, j).to_string(), want, "({i},{j})");
            }
        }
        assert!(matches!(product_defect(&s(4, 1), &s(4, 1), 0), Err(Error::NonAdditiveLength(..))));
        let all: Vec<_> = Permutation::all(4).collect();
        let mut checked = 0;
        for v in &all {
            for w in &all {
                if v.length() + w.length() == v.compose(w).length() {
                    product_defect(v, w, 0).unwrap();
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn vandermonde_entries_and_evaluation() {
        let m = GenericMatrix::build_vandermonde(3, 0);
        assert_eq!(m.entry(2, 3).to_string(), "x33^2");
        let pt: EvalPoint<BigInt> = m.variables().into_iter().map(|v| (v, BigInt::from(v.col as i64 + 1))).collect();
        let ev = m.eval(&Integers, &pt).unwrap();
        assert_eq!(ev[2][0], BigInt::from(8));
        assert_eq!(m.degree_bound(), 3);
    }
}
