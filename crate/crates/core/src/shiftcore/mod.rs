//! Structured generic matrices, compound matrices, exterior shifts, partial
//! shifts by permutations, combinatorial shifts and Bruhat cells.

mod bruhat;
mod compound;
mod matrix;
mod shift;

pub use bruhat::{bruhat_cell, coset_normalize};
pub use compound::{compound_matrix, compound_rows, wedge_rows, CompoundSubmatrix};
pub use matrix::{product_defect, GenericMatrix};
pub use shift::{
    combinatorial_shift, concrete_shift, degree_bound, delta_shift, full_shift, partial_shift, prepare, Eliminate,
    PreparedMatrix, ShiftPlan,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combstruct::{all_subsets, UniformHypergraph};
    use crate::error::Error;
    use crate::field::FieldContext;
    use crate::symgroup::Permutation;
    use itertools::Itertools;

    fn h(n: usize, k: usize, e: &[&str]) -> UniformHypergraph {
        UniformHypergraph::parse(n, k, e).unwrap()
    }

    #[test]
    fn two_edges_in_characteristic_two() {
        let s = h(4, 2, &["12", "23"]);
        let want = h(4, 2, &["12", "13"]);
        let sym = FieldContext::symbolic(2).unwrap();
        assert_eq!(delta_shift(&GenericMatrix::build_x(4, 2), &s, &sym).unwrap(), want);
        assert_eq!(full_shift(&s, &sym).unwrap(), want);
        assert_eq!(full_shift(&s, &FieldContext::randomized(2, 1).unwrap()).unwrap(), want);
    }

    #[test]
    fn identity_and_empty() {
        let ctx = FieldContext::randomized(0, 3).unwrap();
        let s = h(5, 2, &["13", "25", "45"]);
        assert_eq!(delta_shift(&GenericMatrix::identity(5, 0), &s, &ctx).unwrap(), s);
        assert_eq!(partial_shift(&s, &Permutation::identity(5), &ctx).unwrap(), s);
        let empty = UniformHypergraph::empty(5, 2);
        assert_eq!(full_shift(&empty, &ctx).unwrap(), empty);
    }

    #[test]
    fn vandermonde_shift() {
        let s = h(6, 3, &["123", "145", "246", "356"]);
        let ctx = FieldContext::randomized(0, 11).unwrap();
        let got = delta_shift(&GenericMatrix::build_vandermonde(6, 0), &s, &ctx).unwrap();
        assert_eq!(got, h(6, 3, &["123", "124", "125", "134"]));
        assert_eq!(full_shift(&s, &ctx).unwrap(), h(6, 3, &["123", "124", "125", "126"]));
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let g = GenericMatrix::from_integers(0, &[vec![1, 2], vec![2, 4]]).unwrap();
        let s = h(2, 1, &["1"]);
        for ctx in [FieldContext::symbolic(0).unwrap(), FieldContext::randomized(0, 0).unwrap()] {
            assert_eq!(delta_shift(&g, &s, &ctx), Err(Error::NotInvertible));
        }
        assert_eq!(Error::NotInvertible.to_string(), "matrix not invertible");
    }

    #[test]
    fn combinatorial_examples() {
        let s1 = Permutation::simple(3, 1).unwrap();
        assert_eq!(combinatorial_shift(&h(3, 2, &["23"]), &s1).unwrap(), h(3, 2, &["13"]));
        let t = Permutation::transposition(3, 1, 3).unwrap();
        assert_eq!(combinatorial_shift(&h(3, 2, &["13", "23"]), &t).unwrap(), h(3, 2, &["12", "13"]));
        assert!(combinatorial_shift(&h(3, 2, &["13"]), &Permutation::cycle(3)).is_err());
    }

    #[test]
    fn simple_transpositions_shift_combinatorially() {
        let ctx = FieldContext::randomized(0, 5).unwrap();
        let sym = FieldContext::symbolic(0).unwrap();
        for k in 1..=3 {
            let all: Vec<_> = all_subsets(4, k).collect();
            for m in 0..=3.min(all.len()) {
                for edges in all.iter().copied().combinations(m) {
                    let s = UniformHypergraph::new(4, k, edges).unwrap();
                    for i in 1..4 {
                        let t = Permutation::simple(4, i).unwrap();
                        let gamma = combinatorial_shift(&s, &t).unwrap();
                        assert_eq!(partial_shift(&s, &t, &ctx).unwrap(), gamma);
                        assert_eq!(delta_shift(&GenericMatrix::build_gamma(&t, 0).unwrap(), &s, &sym).unwrap(), gamma);
                    }
                }
            }
        }
    }

    #[test]
    fn shifted_iff_fixed_by_simple_transpositions() {
        for k in 1..=3 {
            let all: Vec<_> = all_subsets(5, k).collect();
            for m in 0..=3.min(all.len()) {
                for edges in all.iter().copied().combinations(m) {
                    let s = UniformHypergraph::new(5, k, edges).unwrap();
                    let fixed = (1..5).all(|i| combinatorial_shift(&s, &Permutation::simple(5, i).unwrap()).unwrap() == s);
                    assert_eq!(fixed, s.is_shifted(), "{s}");
                }
            }
        }
    }
}
