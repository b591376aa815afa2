//! Subsets of `[n]`, uniform hypergraphs and simplicial complexes.

mod complex;
mod hypergraph;
mod random;
mod subset;

pub use complex::{complex_from_layers, FVector, SimplicialComplex};
pub use hypergraph::{is_shifted_bruteforce, UniformHypergraph};
pub use random::{random_complex, random_hypergraph, random_near_cone, random_shifted_complex};
pub use subset::{all_subsets, binomial, dominates, lex_compare, parse_subset, KSubset, MAX_N};
