use crate::error::{Error, Result};
use crate::field::{field_rank_profile, natural_order, Field, Matrix};
use crate::symgroup::Permutation;

/// The `w` with `g ∈ BwB`, read off the southwest rank profile:
/// `rank(g[i..n, 1..j]) = #{a ≥ i : a·w ≤ j}`.
pub fn bruhat_cell<F: Field>(field: &F, g: &Matrix<F::Elem>) -> Result<Permutation> {
    let n = g.len();
    if g.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("matrix is not square".into()));
    }
    // rank[i][j] for rows i.. (0-based) and the first j columns
    let mut rank = vec![vec![0usize; n + 1]; n + 1];
    for i in 0..n {
        rank[i] = field_rank_profile(field, g[i..].to_vec(), &natural_order(n)).sequence;
    }
    if rank[0][n] != n {
        return Err(Error::NotInvertible);
    }
    let mut images = vec![0usize; n];
    for a in 0..n {
        let hits: Vec<usize> = (1..=n)
            .filter(|&j| rank[a][j] + rank[a + 1][j - 1] == rank[a][j - 1] + rank[a + 1][j] + 1)
            .collect();
        let [j] = hits[..] else {
            return Err(Error::Invariant(format!("row {} has {} rank jumps", a + 1, hits.len())));
        };
        images[a] = j;
    }
    let w = Permutation::from_one_line(&images)?;
    for i in 0..n {
        for j in 0..=n {
            let expected = (i + 1..=n).filter(|&a| w.apply(a) <= j).count();
            if rank[i][j] != expected {
                return Err(Error::Invariant("rank profile is not that of a permutation".into()));
            }
        }
    }
    Ok(w)
}

fn is_unipotent<F: Field>(field: &F, u: &Matrix<F::Elem>) -> bool {
    u.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, e)| match i.cmp(&j) {
            std::cmp::Ordering::Equal => *e == field.one(),
            std::cmp::Ordering::Greater => field.is_zero(e),
            std::cmp::Ordering::Less => true,
        })
    })
}

/// Splits `u·w = u′·w·u″` with `u′ ∈ U(w)` (zero off `inv w` above the diagonal)
/// and `u″` unipotent upper triangular.
///
/// Entries `(k, l) ∉ inv w` are cleared by column operations `e_kl(-γ)`, column by
/// column with `k` decreasing; conjugating these past `w` yields `e_{k·w, l·w}(γ)`.
pub fn coset_normalize<F: Field>(
    field: &F,
    u: &Matrix<F::Elem>,
    w: &Permutation,
) -> Result<(Matrix<F::Elem>, Matrix<F::Elem>)> {
    let n = u.len();
    if w.n() != n || u.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("matrix and permutation sizes differ".into()));
    }
    if !is_unipotent(field, u) {
        return Err(Error::NotUnipotent);
    }
    let inv = w.inversions();
    let mut left = u.clone();
    let mut ops = Vec::new();
    for l in 1..=n {
        for k in (1..l).rev() {
            if inv.contains(&(k, l)) {
                continue;
            }
            let gamma = left[k - 1][l - 1].clone();
            if field.is_zero(&gamma) {
                continue;
            }
            // column l -= gamma * column k
            for r in 0..k {
                let delta = field.mul(&gamma, &left[r][k - 1]);
                left[r][l - 1] = field.sub(&left[r][l - 1], &delta);
            }
            ops.push((k, l, gamma));
        }
    }
    let mut right = crate::field::identity(field, n);
    for (k, l, gamma) in ops.into_iter().rev() {
        // right := right * e_{k·w, l·w}(gamma)
        let (a, b) = (w.apply(k) - 1, w.apply(l) - 1);
        for row in right.iter_mut() {
            let delta = field.mul(&row[a], &gamma);
            row[b] = field.add(&row[b], &delta);
        }
    }
    Ok((left, right))
}
