use thiserror::Error;

use crate::manifold::Rejection;
use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("variable `{0}` has no declared conjugate")]
    UnpairedVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("assignment does not cover variable `{0}`")]
    IncompleteAssignment(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid conjugate pairing for `{0}`")]
    InvalidPairing(String),
    #[error("monomial order does not match the ring or the basis")]
    OrderMismatch,
    #[error("Gröbner computation exceeded its budget ({0})")]
    BudgetExceeded(String),
    #[error("all generators are zero")]
    ZeroGenerators,
    #[error("family is not a graph over a block of fibre variables: {0}")]
    NonGraphFamily(String),
    #[error("point is not on the manifold: {0}")]
    NotOnManifold(String),
    #[error("denominator `{0}` vanishes identically on the constraint set")]
    DegenerateDenominator(String),
    #[error("the set of sample points is empty")]
    EmptySampleSet,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("manifold rejected: {0}")]
    Rejected(#[from] Rejection),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
