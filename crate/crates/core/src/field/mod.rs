//! Exact scalar and polynomial arithmetic, concrete fields for randomized
//! evaluation, and column rank profiles.

mod context;
mod ext;
pub mod fp_poly;
pub mod linalg;
mod poly;
mod prime;
mod ring;

pub use context::{
    call_id, default_epsilon, make_field_context, parse_epsilon, random_integer_point, random_point, Backend, Characteristic,
    ConcreteField, FieldContext, StableHasher,
};
pub use ext::{BinaryField, ExtensionField};
pub use fp_poly::{gf_extension, is_irreducible, GfSpec};
pub use linalg::{
    bareiss_rank_profile, cofactor_det, field_rank, field_rank_profile, identity, mat_mul, natural_order, Matrix,
    RankProfile,
};
pub use poly::{EvalPoint, Monomial, MultiPoly, PolyRing, Var};
pub use prime::{is_prime, PrimeField};
pub use ring::{Domain, Field, Integers, Ring};
