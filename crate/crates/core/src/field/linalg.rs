//! Column rank profiles and small dense matrix helpers over a [`Ring`].

use super::ring::{Domain, Field, Ring};

/// A row-major dense matrix.
pub type Matrix<E> = Vec<Vec<E>>;

/// The rank sequence `r_0 = 0, r_j = rank of the first j columns` together
/// with the step columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub sequence: Vec<usize>,
    /// Original column indices at which the rank increases, in processing order.
    pub pivots: Vec<usize>,
}

impl RankProfile {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn build(ncols: usize, steps: Vec<(usize, usize)>) -> Self {
        // steps: (position in processing order, original column index)
        let mut sequence = Vec::with_capacity(ncols + 1);
        sequence.push(0);
        let mut it = steps.iter().peekable();
        let mut r = 0;
        for pos in 0..ncols {
            if it.peek().is_some_and(|&&(p, _)| p == pos) {
                it.next();
                r += 1;
            }
            sequence.push(r);
        }
        RankProfile { sequence, pivots: steps.into_iter().map(|(_, c)| c).collect() }
    }
}

fn check_order(ncols: usize, order: &[usize]) {
    assert_eq!(order.len(), ncols, "column order must be a permutation of the columns");
    let mut seen = vec![false; ncols];
    for &c in order {
        assert!(c < ncols && !seen[c], "column order must be a permutation of the columns");
        seen[c] = true;
    }
}

/// Fraction-free (Bareiss) column rank profile over an integral domain.
///
/// Every intermediate entry is a minor of the input, so each division is exact
/// and zero tests are exact.
pub fn bareiss_rank_profile<D: Domain>(ring: &D, mut rows: Matrix<D::Elem>, order: &[usize]) -> RankProfile {
    let ncols = order.len();
    if let Some(r) = rows.first() {
        assert_eq!(r.len(), ncols);
    }
    check_order(ncols, order);
    let mut active: Vec<usize> = (0..rows.len()).collect();
    let mut prev = ring.one();
    let mut steps = Vec::new();
    for (pos, &col) in order.iter().enumerate() {
        if active.is_empty() {
            break;
        }
        let Some(slot) = active.iter().position(|&r| !ring.is_zero(&rows[r][col])) else {
            continue;
        };
        let pr = active.swap_remove(slot);
        steps.push((pos, col));
        let pivot_row = std::mem::take(&mut rows[pr]);
        let piv = pivot_row[col].clone();
        for &r in &active {
            let row = &mut rows[r];
            let factor = row[col].clone();
            for &c in &order[pos + 1..] {
                let num = ring.mul_sub(&piv, &row[c], &factor, &pivot_row[c]);
                row[c] = ring.div_exact(&num, &prev);
            }
            row[col] = ring.zero();
        }
        prev = piv;
    }
    RankProfile::build(ncols, steps)
}

/// Gaussian elimination column rank profile over a field.
pub fn field_rank_profile<F: Field>(field: &F, mut rows: Matrix<F::Elem>, order: &[usize]) -> RankProfile {
    let ncols = order.len();
    if let Some(r) = rows.first() {
        assert_eq!(r.len(), ncols);
    }
    check_order(ncols, order);
    let mut active: Vec<usize> = (0..rows.len()).collect();
    let mut steps = Vec::new();
    for (pos, &col) in order.iter().enumerate() {
        if active.is_empty() {
            break;
        }
        let Some(slot) = active.iter().position(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        let pr = active.swap_remove(slot);
        steps.push((pos, col));
        let mut pivot_row = std::mem::take(&mut rows[pr]);
        let inv = field.inv(&pivot_row[col]).expect("nonzero pivot");
        for &c in &order[pos + 1..] {
            pivot_row[c] = field.mul(&pivot_row[c], &inv);
        }
        for &r in &active {
            let row = &mut rows[r];
            if field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for &c in &order[pos + 1..] {
                if !field.is_zero(&pivot_row[c]) {
                    row[c] = field.sub(&row[c], &field.mul(&factor, &pivot_row[c]));
                }
            }
            row[col] = field.zero();
        }
    }
    RankProfile::build(ncols, steps)
}

pub fn natural_order(ncols: usize) -> Vec<usize> {
    (0..ncols).collect()
}

pub fn field_rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    field_rank_profile(field, m.clone(), &natural_order(ncols)).rank()
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
        .collect()
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "inner dimensions differ");
            (0..cols)
                .map(|j| {
                    let mut acc = ring.zero();
                    for (t, x) in row.iter().enumerate() {
                        if !ring.is_zero(x) && !ring.is_zero(&b[t][j]) {
                            acc = ring.add(&acc, &ring.mul(x, &b[t][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row; only for small matrices.
pub fn cofactor_det<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> R::Elem {
    let n = m.len();
    match n {
        0 => ring.one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = ring.zero();
            for j in 0..n {
                if ring.is_zero(&m[0][j]) {
                    continue;
                }
                let minor: Matrix<R::Elem> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = ring.mul(&m[0][j], &cofactor_det(ring, &minor));
                acc = if j % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::field::{Integers, PrimeField};

    fn ints(rows: &[&[i64]]) -> Matrix<BigInt> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn identity_profile() {
        let p = bareiss_rank_profile(&Integers, ints(&[&[1, 0], &[0, 1]]), &[0, 1]);
        assert_eq!(p.sequence, vec![0, 1, 2]);
        assert_eq!(p.pivots, vec![0, 1]);
    }

    #[test]
    fn dependent_columns_are_skipped() {
        let m = ints(&[&[0, 1, 2, 0], &[0, 2, 4, 1]]);
        let p = bareiss_rank_profile(&Integers, m.clone(), &[0, 1, 2, 3]);
        assert_eq!(p.sequence, vec![0, 0, 1, 1, 2]);
        assert_eq!(p.pivots, vec![1, 3]);
        // a different processing order
        let q = bareiss_rank_profile(&Integers, m, &[3, 2, 1, 0]);
        assert_eq!(q.pivots, vec![3, 2]);
    }

    #[test]
    fn integer_and_prime_field_profiles_agree_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let f = PrimeField::new((1 << 61) - 1);
        for _ in 0..300 {
            let rows = rng.gen_range(1..5);
            let cols = rng.gen_range(1..7);
            let zero_bias = rng.gen_range(0..3);
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| if rng.gen_range(0..3) < zero_bias { 0 } else { rng.gen_range(-3..4) }).collect())
                .collect();
            let mi: Matrix<BigInt> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let mf: Matrix<u64> = m.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let order = natural_order(cols);
            let a = bareiss_rank_profile(&Integers, mi, &order);
            let b = field_rank_profile(&f, mf, &order);
            assert_eq!(a, b);
            assert!(a.sequence.windows(2).all(|w| w[1] - w[0] <= 1));
            assert_eq!(*a.sequence.last().unwrap(), a.rank());
        }
    }

    #[test]
    fn cofactor_matches_elimination_rank() {
        let m = ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(cofactor_det(&Integers, &m), BigInt::from(18));
    }
}
