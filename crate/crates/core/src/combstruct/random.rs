use rand::seq::index::sample;
use rand::Rng;

use super::complex::SimplicialComplex;
use super::hypergraph::UniformHypergraph;
use super::subset::{all_subsets, binomial, KSubset};

/// `m` distinct uniformly chosen `k`-subsets of `[n]`.
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, m: usize) -> UniformHypergraph {
    let total = binomial(n, k) as usize;
    let m = m.min(total);
    let edges = sample(rng, total, m).into_iter().map(|r| KSubset::unrank(n, k, r as u64).unwrap()).collect();
    UniformHypergraph::new(n, k, edges).unwrap()
}

/// Complex generated by a few random facets of assorted sizes.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, n: usize, max_dim: usize) -> SimplicialComplex {
    let facets: Vec<KSubset> = (0..rng.gen_range(1..=2 * n))
        .map(|_| {
            let size = rng.gen_range(1..=(max_dim + 1).min(n));
            random_hypergraph(rng, n, size, 1).edges()[0]
        })
        .collect();
    SimplicialComplex::from_facets(n, &facets).unwrap()
}

/// A random shifted complex: the domination-down-closure of random facets, checked layerwise.
pub fn random_shifted_complex<R: Rng + ?Sized>(rng: &mut R, n: usize, max_dim: usize) -> SimplicialComplex {
    let seeds = random_complex(rng, n, max_dim);
    let mut facets = Vec::new();
    for f in seeds.facets() {
        for g in all_subsets(n, f.k()) {
            if super::subset::dominates(&g, &f).unwrap() {
                facets.push(g);
            }
        }
    }
    let k = SimplicialComplex::from_facets(n, &facets).unwrap();
    debug_assert!(k.is_shifted());
    k
}

/// A random near cone: a random complex with every face avoiding 1 closed under `i ↦ 1` swaps.
pub fn random_near_cone<R: Rng + ?Sized>(rng: &mut R, n: usize, max_dim: usize) -> SimplicialComplex {
    let mut k = random_complex(rng, n, max_dim);
    loop {
        let mut extra = k.facets();
        for d in 1..=k.dim().map_or(0, |d| d + 1) as usize {
            for s in k.faces_of_size(d) {
                if !s.contains(1) {
                    extra.extend(s.vertices().map(|i| s.without(i).with(1)));
                }
            }
        }
        let next = SimplicialComplex::from_facets(n, &extra).unwrap();
        if next == k {
            return k;
        }
        k = next;
    }
}
