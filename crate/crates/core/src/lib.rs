//! Exterior algebraic shifting of uniform hypergraphs and simplicial complexes
//! with respect to arbitrary, in particular non-generic, matrices.
//!
//! Partial shifts are parameterized by permutations through canonical
//! representatives of Bruhat cells; combinatorial shifting and the full
//! algebraic shift are the two extreme cases.

pub mod error;
pub mod combstruct;
pub mod field;
pub mod shiftcore;
pub mod shiftgraph;
pub mod symgroup;
pub mod topology;
pub mod reproduce;

pub use error::{Error, Result};
