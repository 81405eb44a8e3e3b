use thiserror::Error;

use crate::laurent::LaurentPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no primitive form")]
    ZeroPolynomial,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: LaurentPoly },

    #[error("cannot evaluate a Laurent polynomial at 0")]
    EvaluateAtZero,

    #[error("not self-reciprocal: {0}")]
    NotSelfReciprocal(String),

    #[error("value at t=1 is {0}, expected +1 or -1")]
    NotUnitAtOne(String),

    #[error("odd-width self-reciprocal class has no symmetric representative")]
    OddWidthSelfReciprocal,

    #[error("degree {degree} exceeds the factorization bound {bound}")]
    DegreeBound { degree: usize, bound: usize },

    #[error("module not torsion (free rank {0})")]
    NotTorsion(usize),

    #[error("infinite dimensional (free rank {0})")]
    InfiniteDimensional(usize),

    #[error("subpolynomial division failed at index {index}: remainder {remainder}")]
    Subpolynomial { index: usize, remainder: LaurentPoly },

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("malformed datum: {0}")]
    MalformedDatum(String),

    #[error("invalid seed: {0}")]
    InvalidSeed(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("R has zero determinant")]
    SingularR,

    #[error("(R^-1)' tau R is not an integer matrix")]
    NonIntegral,

    #[error("singular presentation: det M(t) is identically zero")]
    SingularPresentation,

    #[error("invariants required for twist spinning: {0}")]
    MissingInvariants(String),

    #[error("twist must be non-negative, got {0}")]
    NegativeTwist(i64),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Invalid(String),
}
