use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combstruct::{binomial, KSubset, UniformHypergraph};
use crate::error::{Error, Result};
use crate::field::{
    bareiss_rank_profile, call_id, field_rank_profile, natural_order, random_integer_point, random_point, Backend,
    BinaryField, ConcreteField, ExtensionField, FieldContext, Integers, Matrix, PolyRing, PrimeField, RankProfile,
    Ring,
};
use crate::symgroup::Permutation;

use super::compound::wedge_rows;
use super::matrix::GenericMatrix;

/// Rings in which a column rank profile can be computed exactly.
pub trait Eliminate: Ring {
    fn rank_profile(&self, rows: Matrix<Self::Elem>, order: &[usize]) -> RankProfile;
}

impl Eliminate for PolyRing {
    fn rank_profile(&self, rows: Matrix<Self::Elem>, order: &[usize]) -> RankProfile {
        bareiss_rank_profile(self, rows, order)
    }
}

impl Eliminate for Integers {
    fn rank_profile(&self, rows: Matrix<Self::Elem>, order: &[usize]) -> RankProfile {
        bareiss_rank_profile(self, rows, order)
    }
}

macro_rules! field_elimination {
    ($($t:ty),*) => {$(
        impl Eliminate for $t {
            fn rank_profile(&self, rows: Matrix<Self::Elem>, order: &[usize]) -> RankProfile {
                field_rank_profile(self, rows, order)
            }
        }
    )*};
}
field_elimination!(PrimeField, BinaryField, ExtensionField);

/// One intended use of a prepared matrix: shifting hypergraphs with `k`-edges and at most `max_edges` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftPlan {
    pub k: usize,
    pub max_edges: usize,
}

/// Full compound matrices are cached when they have at most this many rows.
const COMPOUND_CACHE_ROWS: u64 = 400;

#[derive(Debug, Clone)]
struct Typed<R: Eliminate> {
    ring: R,
    g: Matrix<R::Elem>,
    compounds: BTreeMap<usize, Matrix<R::Elem>>,
}

impl<R: Eliminate> Typed<R> {
    fn new(ring: R, g: Matrix<R::Elem>, plans: &[ShiftPlan]) -> Self {
        let n = g.len();
        let mut compounds = BTreeMap::new();
        for p in plans {
            if binomial(n, p.k) <= COMPOUND_CACHE_ROWS && !compounds.contains_key(&p.k) {
                compounds.insert(p.k, super::compound::compound_matrix(&ring, &g, p.k));
            }
        }
        Typed { ring, g, compounds }
    }

    fn rows(&self, s: &UniformHypergraph) -> Matrix<R::Elem> {
        match self.compounds.get(&s.k()) {
            Some(c) => s.edges().iter().map(|e| c[e.rank() as usize].clone()).collect(),
            None => wedge_rows(&self.ring, &self.g, s.edges()),
        }
    }

    fn profile(&self, s: &UniformHypergraph) -> RankProfile {
        let ncols = binomial(s.n(), s.k()) as usize;
        self.ring.rank_profile(self.rows(s), &natural_order(ncols))
    }

    fn is_invertible(&self) -> bool {
        let n = self.g.len();
        self.ring.rank_profile(self.g.clone(), &natural_order(n)).rank() == n
    }
}

#[derive(Debug, Clone)]
enum Kind {
    Symbolic(Typed<PolyRing>),
    Integer(Typed<Integers>),
    DualPrime { exact: Typed<Integers>, first: Typed<PrimeField>, second: Typed<PrimeField> },
    Prime(Typed<PrimeField>),
    Binary(Typed<BinaryField>),
    Extension(Typed<ExtensionField>),
}

/// A matrix made ready for repeated shifting: evaluated at one random point
/// (randomized backend) or kept symbolic, with cached compound matrices.
#[derive(Debug, Clone)]
pub struct PreparedMatrix {
    n: usize,
    kind: Kind,
}

/// `Σ deg(g)·k·m·C(n,k)` over the plans: one minor of degree `≤ deg(g)·k·m` per pivot decision.
pub fn degree_bound(g: &GenericMatrix, plans: &[ShiftPlan]) -> BigUint {
    let deg = BigUint::from(g.degree_bound().max(1));
    plans
        .iter()
        .map(|p| &deg * BigUint::from(p.k.max(1)) * BigUint::from(p.max_edges.max(1)) * BigUint::from(binomial(g.n(), p.k).max(1)))
        .fold(BigUint::zero(), |a, b| a + b)
        .max(BigUint::one())
}

fn dual_primes() -> (u64, u64) {
    let mut found = Vec::new();
    let mut p = (1u64 << 62) - 1;
    while found.len() < 2 {
        if crate::field::is_prime(p) {
            found.push(p);
        }
        p -= 2;
    }
    (found[0], found[1])
}

pub fn prepare(g: &GenericMatrix, plans: &[ShiftPlan], ctx: &FieldContext) -> Result<PreparedMatrix> {
    let ch = ctx.characteristic().value();
    if g.characteristic() != ch {
        return Err(Error::DimensionMismatch(format!(
            "matrix over characteristic {} used in a characteristic {ch} context",
            g.characteristic()
        )));
    }
    let n = g.n();
    let kind = match ctx.backend() {
        Backend::Symbolic => {
            let t = Typed::new(PolyRing::new(ch), g.entries().clone(), plans);
            if !g.known_invertible() && !t.is_invertible() {
                return Err(Error::NotInvertible);
            }
            Kind::Symbolic(t)
        }
        Backend::Randomized => {
            let bound = degree_bound(g, plans);
            let mut rng = ctx.stream(call_id(&(g, plans)));
            let vars = g.variables();
            let kind = if ch == 0 {
                let point = random_integer_point(&ctx.sampling_bound(&bound), &vars, &mut rng);
                let values = g.eval(&Integers, &point)?;
                if ctx.dual_prime() {
                    let (p1, p2) = dual_primes();
                    let reduce = |f: PrimeField| {
                        let m = values.iter().map(|r| r.iter().map(|c| f.from_bigint(c)).collect()).collect();
                        Typed::new(f, m, plans)
                    };
                    Kind::DualPrime {
                        exact: Typed::new(Integers, values.clone(), &[]),
                        first: reduce(PrimeField::new(p1)),
                        second: reduce(PrimeField::new(p2)),
                    }
                } else {
                    Kind::Integer(Typed::new(Integers, values, plans))
                }
            } else {
                match ctx.concrete_field(&bound) {
                    ConcreteField::Prime(f) => {
                        let pt = random_point(&f, &vars, &mut rng);
                        Kind::Prime(Typed::new(f, g.eval(&f, &pt)?, plans))
                    }
                    ConcreteField::Binary(f) => {
                        let pt = random_point(&f, &vars, &mut rng);
                        Kind::Binary(Typed::new(f, g.eval(&f, &pt)?, plans))
                    }
                    ConcreteField::Extension(f) => {
                        let pt = random_point(&f, &vars, &mut rng);
                        Kind::Extension(Typed::new(f.clone(), g.eval(&f, &pt)?, plans))
                    }
                }
            };
            let invertible = match &kind {
                Kind::Integer(t) => t.is_invertible(),
                Kind::DualPrime { exact, .. } => exact.is_invertible(),
                Kind::Prime(t) => t.is_invertible(),
                Kind::Binary(t) => t.is_invertible(),
                Kind::Extension(t) => t.is_invertible(),
                Kind::Symbolic(_) => unreachable!(),
            };
            if !invertible {
                return Err(Error::NotInvertible);
            }
            kind
        }
    };
    Ok(PreparedMatrix { n, kind })
}

impl PreparedMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank sequence of the rows of `g^{∧S}` over the columns in lex order.
    pub fn rank_profile(&self, s: &UniformHypergraph) -> Result<RankProfile> {
        if s.n() != self.n {
            return Err(Error::DimensionMismatch(format!("hypergraph on [{}] with a {}x{} matrix", s.n(), self.n, self.n)));
        }
        if s.is_empty() {
            let ncols = binomial(s.n(), s.k()) as usize;
            return Ok(RankProfile { sequence: vec![0; ncols + 1], pivots: Vec::new() });
        }
        Ok(match &self.kind {
            Kind::Symbolic(t) => t.profile(s),
            Kind::Integer(t) => t.profile(s),
            Kind::DualPrime { exact, first, second } => {
                let a = first.profile(s);
                if a == second.profile(s) {
                    a
                } else {
                    exact.profile(s)
                }
            }
            Kind::Prime(t) => t.profile(s),
            Kind::Binary(t) => t.profile(s),
            Kind::Extension(t) => t.profile(s),
        })
    }

    /// `Δ_g(S)`: the lex-first column basis of `g^{∧S}`.
    pub fn shift(&self, s: &UniformHypergraph) -> Result<UniformHypergraph> {
        from_profile(s, &self.rank_profile(s)?)
    }
}

pub fn delta_shift(g: &GenericMatrix, s: &UniformHypergraph, ctx: &FieldContext) -> Result<UniformHypergraph> {
    if g.n() != s.n() {
        return Err(Error::DimensionMismatch(format!("hypergraph on [{}] with a {}x{} matrix", s.n(), g.n(), g.n())));
    }
    prepare(g, &[ShiftPlan { k: s.k(), max_edges: s.len() }], ctx)?.shift(s)
}

/// Shift by the canonical generic representative `𝔯(w)` of the Bruhat cell of `w`.
pub fn partial_shift(s: &UniformHypergraph, w: &Permutation, ctx: &FieldContext) -> Result<UniformHypergraph> {
    check_degree(s, w)?;
    delta_shift(&GenericMatrix::build_r(w, ctx.characteristic().value()), s, ctx)
}

pub fn full_shift(s: &UniformHypergraph, ctx: &FieldContext) -> Result<UniformHypergraph> {
    partial_shift(s, &Permutation::longest(s.n()), ctx)
}

pub(crate) fn check_degree(s: &UniformHypergraph, w: &Permutation) -> Result<()> {
    if w.n() != s.n() {
        return Err(Error::DimensionMismatch(format!("permutation of [{}] acting on a hypergraph on [{}]", w.n(), s.n())));
    }
    Ok(())
}

/// `Γ_t(S)`: replace `σ` by `σ·t` whenever `σ·t <lex σ` and `σ·t ∉ S`.
pub fn combinatorial_shift(s: &UniformHypergraph, t: &Permutation) -> Result<UniformHypergraph> {
    check_degree(s, t)?;
    let moved = (1..=t.n()).filter(|&i| t.apply(i) != i).count();
    if moved != 2 {
        return Err(Error::NotTransposition(t.to_string()));
    }
    let edges = s
        .edges()
        .iter()
        .map(|sigma| {
            let image = sigma.map(|v| t.apply(v));
            if image < *sigma && !s.contains(&image) {
                image
            } else {
                *sigma
            }
        })
        .collect();
    UniformHypergraph::new(s.n(), s.k(), edges)
}

/// Shift of a concrete matrix over an exact ring.
pub fn concrete_shift<R: Eliminate>(ring: &R, g: &Matrix<R::Elem>, s: &UniformHypergraph) -> Result<UniformHypergraph> {
    let t = Typed::new(ring.clone(), g.clone(), &[]);
    if !t.is_invertible() {
        return Err(Error::NotInvertible);
    }
    if s.is_empty() {
        return Ok(s.clone());
    }
    from_profile(s, &t.profile(s))
}

fn from_profile(s: &UniformHypergraph, profile: &RankProfile) -> Result<UniformHypergraph> {
    if profile.rank() != s.len() {
        return Err(Error::Invariant(format!("compound rows of {s} are dependent although g is invertible")));
    }
    let mut edges: Vec<KSubset> =
        profile.pivots.iter().map(|&c| KSubset::unrank(s.n(), s.k(), c as u64)).collect::<Result<_>>()?;
    edges.sort();
    UniformHypergraph::new(s.n(), s.k(), edges)
}
