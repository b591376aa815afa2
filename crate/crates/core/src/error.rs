use thiserror::Error;

/// Errors raised by the shifting library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic must be 0 or prime, got {0}")]
    InvalidCharacteristic(u64),
    #[error("failure budget must lie strictly between 0 and 1, got {0}")]
    InvalidEpsilon(String),
    #[error("no value assigned to variable {0}")]
    MissingVariable(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix not invertible")]
    NotInvertible,
    #[error("{0} is not a transposition")]
    NotTransposition(String),
    #[error("matrix is not unipotent upper triangular")]
    NotUnipotent,
    #[error("lengths are not additive: l({0}) + l({1}) != l({0}{1})")]
    NonAdditiveLength(String, String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("faces do not form a simplicial complex: {witness} is missing")]
    ClosureViolation { witness: String },
    #[error("complex is not a near cone: {0}")]
    NotNearCone(String),
    #[error("partial shift graph would have {nodes} nodes, above the cap of {cap}; use build_psg_from instead")]
    NodeCapExceeded { nodes: String, cap: usize },
    #[error("backends disagree: {0}")]
    BackendMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
