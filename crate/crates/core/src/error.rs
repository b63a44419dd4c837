use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed tower spec: {0}")]
    MalformedSpec(String),

    #[error("generator `{name}` numeric value violates its relation (residual {residual:e})")]
    NumericMismatch { name: String, residual: f64 },

    #[error("operands belong to different towers")]
    SpecMismatch,

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// Substituting `t -> alpha - t` is only a ring automorphism when no later
    /// generator's relation depends on `t`.
    #[error("conjugation over `{0}` is not an automorphism of this tower")]
    ConjugationUndefined(String),

    #[error("lattice kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: String, found: String },

    #[error("matrix is zero")]
    ZeroMatrix,

    #[error("transform does not preserve the lattice: {0}")]
    NotLatticePreserving(String),

    #[error("invalid transform: {0}")]
    InvalidTransform(String),

    #[error("invalid search spec: {0}")]
    InvalidSearchSpec(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
