use thiserror::Error;

use crate::coxeter::ParabolicSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Coxeter type: {0}")]
    UnsupportedType(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("elements belong to different Coxeter systems")]
    MixedSystems,

    #[error("operation requires a type A system")]
    NotTypeA,

    #[error("{w} has no BP decomposition with respect to {{{parabolic}}}")]
    NotBp { w: String, parabolic: ParabolicSet },

    #[error("{0} is singular")]
    Singular(String),

    #[error("operation requires a simply-laced system")]
    NotSimplyLaced,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("wrong image: the data multiplies out to {actual}, not {expected}")]
    WrongImage { expected: String, actual: String },

    #[error("dimension mismatch: total space has dimension {total}, target has length {target}")]
    DimensionMismatch { total: usize, target: usize },

    #[error("division failure at cell {cell}: coefficient not divisible by the link Poincare polynomials")]
    DivisionFailure { cell: String },

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("not a resolution: {0}")]
    NotAResolution(String),

    #[error("not small: fiber of dimension {fiber_dim} over cell {witness} has codimension {codim}")]
    NotSmall {
        witness: String,
        fiber_dim: usize,
        codim: usize,
    },

    #[error("incompatible link: glue link {{{expected}}} but concatenation induces {{{actual}}}")]
    IncompatibleLink {
        expected: ParabolicSet,
        actual: ParabolicSet,
    },

    #[error("the two-factor chain ({left}, {right}) is not an isomorphism")]
    NotIso { left: String, right: String },

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
