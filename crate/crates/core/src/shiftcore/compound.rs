use std::collections::HashMap;
use std::rc::Rc;

use crate::combstruct::{all_subsets, binomial, KSubset, UniformHypergraph};
use crate::field::{Matrix, MultiPoly, PolyRing, Ring};

use super::matrix::GenericMatrix;

/// Rows of `g^{∧S}` with symbolic entries; columns are all `k`-subsets in lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompoundSubmatrix {
    pub rows: UniformHypergraph,
    pub entries: Matrix<MultiPoly>,
}

impl CompoundSubmatrix {
    pub fn entry(&self, rho: &KSubset, tau: &KSubset) -> Option<&MultiPoly> {
        let r = self.rows.edges().binary_search(rho).ok()?;
        self.entries[r].get(tau.rank() as usize)
    }
}

pub fn compound_rows(g: &GenericMatrix, s: &UniformHypergraph) -> CompoundSubmatrix {
    let ring = PolyRing::new(g.characteristic());
    let entries = wedge_rows(&ring, g.entries(), s.edges());
    CompoundSubmatrix { rows: s.clone(), entries }
}

/// Laplace data for `t`-subsets: for each subset in lex order, the triples
/// `(column, rank of subset minus column, sign)` of an expansion along the last row.
struct Level {
    expansions: Vec<Vec<(usize, usize, bool)>>,
}

fn level(n: usize, t: usize) -> Level {
    let expansions = all_subsets(n, t)
        .map(|tau| {
            tau.vertices()
                .enumerate()
                .map(|(p, c)| (c - 1, tau.without(c).rank() as usize, (t + p + 1) % 2 == 1))
                .collect()
        })
        .collect();
    Level { expansions }
}

/// Rows of the `k`-th compound matrix indexed by `rows`, computed by iterated
/// wedge products over shared row prefixes rather than by separate determinants.
///
/// Row `ρ = {r_1 < … < r_k}` of `g^{∧k}` is `g_{r_1} ∧ ⋯ ∧ g_{r_k}`; the partial
/// wedges of the prefixes are memoized and reused across rows.
pub fn wedge_rows<R: Ring>(ring: &R, g: &Matrix<R::Elem>, rows: &[KSubset]) -> Matrix<R::Elem> {
    let Some(first) = rows.first() else {
        return Vec::new();
    };
    let n = g.len();
    let k = first.k();
    let levels: Vec<Level> = (0..=k).map(|t| level(n, t)).collect();
    let mut memo: HashMap<u64, Rc<Vec<R::Elem>>> = HashMap::new();
    memo.insert(0, Rc::new(vec![ring.one()]));
    rows.iter()
        .map(|rho| {
            debug_assert_eq!(rho.k(), k);
            let verts: Vec<usize> = rho.vertices().collect();
            let mut prefix = 0u64;
            let mut prev = memo[&0].clone();
            for (t, &r) in verts.iter().enumerate() {
                prefix |= 1 << (r - 1);
                prev = match memo.get(&prefix) {
                    Some(v) => v.clone(),
                    None => {
                        let row = &g[r - 1];
                        let next: Vec<R::Elem> = levels[t + 1]
                            .expansions
                            .iter()
                            .map(|terms| {
                                terms.iter().fold(ring.zero(), |acc, &(c, sub, negative)| {
                                    if ring.is_zero(&row[c]) || ring.is_zero(&prev[sub]) {
                                        return acc;
                                    }
                                    let term = ring.mul(&row[c], &prev[sub]);
                                    if negative {
                                        ring.sub(&acc, &term)
                                    } else {
                                        ring.add(&acc, &term)
                                    }
                                })
                            })
                            .collect();
                        let next = Rc::new(next);
                        memo.insert(prefix, next.clone());
                        next
                    }
                };
            }
            prev.as_ref().clone()
        })
        .collect()
}

/// The full `k`-th compound matrix.
pub fn compound_matrix<R: Ring>(ring: &R, g: &Matrix<R::Elem>, k: usize) -> Matrix<R::Elem> {
    let rows: Vec<KSubset> = all_subsets(g.len(), k).collect();
    debug_assert_eq!(rows.len() as u64, binomial(g.len(), k));
    wedge_rows(ring, g, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{cofactor_det, mat_mul, Integers, PrimeField};
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn minor<R: Ring>(ring: &R, g: &Matrix<R::Elem>, rho: &KSubset, tau: &KSubset) -> R::Elem {
        let sub: Matrix<R::Elem> =
            rho.vertices().map(|i| tau.vertices().map(|j| g[i - 1][j - 1].clone()).collect()).collect();
        cofactor_det(ring, &sub)
    }

    #[test]
    fn generic_entry_in_characteristic_two() {
        let g = GenericMatrix::build_x(4, 2);
        let s = UniformHypergraph::parse(4, 2, &["12", "23"]).unwrap();
        let c = compound_rows(&g, &s);
        let rho = crate::combstruct::parse_subset(4, "12").unwrap();
        let tau = crate::combstruct::parse_subset(4, "23").unwrap();
        let x = |i, j| MultiPoly::var(2, crate::field::Var::new(i, j));
        let want = x(1, 2).mul(&x(2, 3)).add(&x(1, 3).mul(&x(2, 2)));
        assert_eq!(c.entry(&rho, &tau).unwrap(), &want);
    }

    #[test]
    fn identity_compound_is_identity() {
        let g = GenericMatrix::identity(5, 0);
        let s = UniformHypergraph::parse(5, 2, &["12", "35", "45"]).unwrap();
        let c = compound_rows(&g, &s);
        for (r, rho) in s.edges().iter().enumerate() {
            for (col, tau) in all_subsets(5, 2).enumerate() {
                let want = if tau == *rho { "1" } else { "0" };
                assert_eq!(c.entries[r][col].to_string(), want);
            }
        }
    }

    #[test]
    fn wedge_matches_determinants() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let n = 5;
            let g: Matrix<BigInt> =
                (0..n).map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-5..6))).collect()).collect();
            for k in 0..=n {
                let comp = compound_matrix(&Integers, &g, k);
                for (r, rho) in all_subsets(n, k).enumerate() {
                    for (c, tau) in all_subsets(n, k).enumerate() {
                        assert_eq!(comp[r][c], minor(&Integers, &g, &rho, &tau));
                    }
                }
            }
        }
        let g = GenericMatrix::build_x(4, 0);
        let comp = compound_matrix(&PolyRing::new(0), g.entries(), 3);
        let rho = crate::combstruct::parse_subset(4, "124").unwrap();
        let tau = crate::combstruct::parse_subset(4, "134").unwrap();
        assert_eq!(comp[rho.rank() as usize][tau.rank() as usize], minor(&PolyRing::new(0), g.entries(), &rho, &tau));
    }

    #[test]
    fn compound_is_functorial() {
        let f = PrimeField::new(101);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=5);
            let k = rng.gen_range(0..=n);
            let a: Matrix<u64> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..101)).collect()).collect();
            let b: Matrix<u64> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..101)).collect()).collect();
            let lhs = compound_matrix(&f, &mat_mul(&f, &a, &b), k);
            let rhs = mat_mul(&f, &compound_matrix(&f, &a, k), &compound_matrix(&f, &b, k));
            assert_eq!(lhs, rhs);
        }
    }
}
