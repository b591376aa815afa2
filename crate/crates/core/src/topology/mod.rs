//! Layer-wise shifting of simplicial complexes and Betti numbers.

mod scan;

use serde::{Deserialize, Serialize};

use crate::combstruct::{complex_from_layers, SimplicialComplex, UniformHypergraph};
use crate::error::{Error, Result};
use crate::field::{bareiss_rank_profile, natural_order, Characteristic, FieldContext, Integers, Matrix, PrimeField, Ring};
use crate::shiftcore::{prepare, GenericMatrix, PreparedMatrix, ShiftPlan};
use crate::symgroup::{weak_order_geq, Permutation};

pub use scan::{
    conjecture_scan, random_instances, AcyclicityResult, ComplexSummary, MonotonicityViolation, ScanInstance, ScanReport,
};

/// Non-reduced Betti numbers `β_0, …, β_dim` over a field of the given characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiVector {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub betti: Vec<usize>,
}

impl BettiVector {
    /// `Σ (-1)^i β_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    /// Componentwise `self ≥ other`, padding with zeros.
    pub fn dominates(&self, other: &BettiVector) -> bool {
        let len = self.betti.len().max(other.betti.len());
        (0..len).all(|i| self.betti.get(i).unwrap_or(&0) >= other.betti.get(i).unwrap_or(&0))
    }
}

fn plans(k: &SimplicialComplex) -> Vec<ShiftPlan> {
    k.layers().iter().map(|l| ShiftPlan { k: l.k(), max_edges: l.len() }).collect()
}

fn shift_layers(k: &SimplicialComplex, g: &PreparedMatrix) -> Result<Vec<UniformHypergraph>> {
    k.layers().iter().map(|l| g.shift(l)).collect()
}

/// Applies `Δ_g` to every layer with one and the same matrix and reassembles the complex.
pub fn shift_complex_by(k: &SimplicialComplex, g: &GenericMatrix, ctx: &FieldContext) -> Result<SimplicialComplex> {
    if k.is_void() {
        return Ok(k.clone());
    }
    let prepared = prepare(g, &plans(k), ctx)?;
    let shifted = complex_from_layers(k.n(), &shift_layers(k, &prepared)?)
        .map_err(|e| Error::Invariant(format!("shifted layers are not a complex ({e})")))?;
    if shifted.f_vector() != k.f_vector() {
        return Err(Error::Invariant("shifting changed the f-vector".into()));
    }
    Ok(shifted)
}

/// `Δ_{𝔯(w)}(K)`.
pub fn shift_complex(k: &SimplicialComplex, w: &Permutation, ctx: &FieldContext) -> Result<SimplicialComplex> {
    if w.n() != k.n() {
        return Err(Error::DimensionMismatch(format!("permutation of [{}] acting on a complex on [{}]", w.n(), k.n())));
    }
    shift_complex_by(k, &GenericMatrix::build_r(w, ctx.characteristic().value()), ctx)
}

/// The boundary map from `d`-element faces to `(d-1)`-element faces, one row per `d`-face.
fn boundary<R: Ring>(ring: &R, k: &SimplicialComplex, d: usize) -> Matrix<R::Elem> {
    let lower = k.faces_of_size(d - 1);
    k.faces_of_size(d)
        .iter()
        .map(|s| {
            let mut row = vec![ring.zero(); lower.len()];
            for (p, v) in s.vertices().enumerate() {
                let col = lower.binary_search(&s.without(v)).expect("complex is closed");
                row[col] = if p % 2 == 0 { ring.one() } else { ring.neg(&ring.one()) };
            }
            row
        })
        .collect()
}

fn boundary_rank(k: &SimplicialComplex, d: usize, characteristic: u64) -> usize {
    if d == 0 || k.faces_of_size(d).is_empty() || k.faces_of_size(d - 1).is_empty() {
        return 0;
    }
    if characteristic == 0 {
        let m = boundary(&Integers, k, d);
        let cols = m[0].len();
        bareiss_rank_profile(&Integers, m, &natural_order(cols)).rank()
    } else {
        let f = PrimeField::new(characteristic);
        crate::field::field_rank(&f, &boundary(&f, k, d))
    }
}

/// `β_s = f_s - rank ∂_s - rank ∂_{s+1}` with `∂_0 = 0`.
pub fn betti_numbers(k: &SimplicialComplex, characteristic: Characteristic) -> BettiVector {
    let ch = characteristic.value();
    let top = k.dim().unwrap_or(-1);
    let betti = (0..=top)
        .map(|s| {
            let d = s as usize + 1; // s-faces have d elements
            let f = k.faces_of_size(d).len();
            let down = if s == 0 { 0 } else { boundary_rank(k, d, ch) };
            f - down - boundary_rank(k, d + 1, ch)
        })
        .collect();
    BettiVector { characteristic: ch, betti }
}

fn non_reduced(characteristic: u64, mut reduced: Vec<usize>) -> BettiVector {
    if let Some(b0) = reduced.first_mut() {
        *b0 += 1;
    }
    BettiVector { characteristic, betti: reduced }
}

/// Betti numbers of a near cone, `β̃_s = #{σ ∈ K^s : σ ∪ {1} ∉ K}`, converted to the non-reduced convention.
pub fn near_cone_betti(k: &SimplicialComplex) -> Result<BettiVector> {
    if !k.is_near_cone() {
        return Err(Error::NotNearCone(k.to_string()));
    }
    let top = k.dim().unwrap_or(-1);
    let reduced = (0..=top)
        .map(|s| k.layer(s as usize).edges().iter().filter(|f| !k.contains(&f.with(1))).count())
        .collect();
    Ok(non_reduced(0, reduced))
}

/// `β̃_s = |K^s| - #{σ ∈ Δ(K^{s+1}) : 1 ∈ σ} - #{σ ∈ Δ(K^s) : 1 ∈ σ}`, converted to the non-reduced convention.
pub fn betti_via_full_shift(k: &SimplicialComplex, ctx: &FieldContext) -> Result<BettiVector> {
    let ch = ctx.characteristic().value();
    if k.is_void() || k.dim() == Some(-1) {
        return Ok(BettiVector { characteristic: ch, betti: Vec::new() });
    }
    let shifted = shift_complex(k, &Permutation::longest(k.n()), ctx)?;
    let with_one = |s: usize| shifted.layer(s).edges().iter().filter(|f| f.contains(1)).count();
    let top = k.dim().unwrap() as usize;
    let reduced = (0..=top).map(|s| k.layer(s).len() - with_one(s + 1) - with_one(s)).collect();
    Ok(non_reduced(ch, reduced))
}

/// `w ≥ c_n` in the weak order; such partial shifts preserve Betti numbers and produce near cones.
pub fn preserves_betti_cert(w: &Permutation, n: usize) -> bool {
    w.n() == n && weak_order_geq(w, &Permutation::cycle(n))
}
