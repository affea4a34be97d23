use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which side of a correspondence failed a hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Source,
    Destination,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Source => f.write_str("src"),
            Side::Destination => f.write_str("dst"),
        }
    }
}

/// Ways a configuration can fail the independence hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IndependenceViolation {
    /// `u^3, …, u^{N+3}` are linearly dependent.
    #[error("DependentBasis")]
    DependentBasis,
    /// The `k`-th coefficient (1-based, multiplying `u^{k+2}`) of `u^2` vanishes.
    #[error("ZeroCoefficient({0})")]
    ZeroCoefficient(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("wrong number of points: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("homogeneous coordinates are all zero")]
    ZeroVector,

    #[error("singular matrix")]
    SingularMatrix,

    /// Points `first` and `second` (1-based) coincide.
    #[error("points {first} and {second} are not distinct")]
    DistinctnessViolation { first: usize, second: usize },

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),

    #[error("degenerate configuration under permutation {permutation:?}: {reason}")]
    DegeneratePermutation {
        permutation: Vec<usize>,
        reason: String,
    },

    /// A homogeneous image is the zero vector.
    #[error("image is the zero vector")]
    DegeneratePoint,

    #[error("independence hypothesis: {0}")]
    Independence(IndependenceViolation),

    #[error("independence hypothesis ({side}): {violation}")]
    SideIndependence {
        side: Side,
        violation: IndependenceViolation,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by malformed input rather than by the geometry.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

impl From<IndependenceViolation> for Error {
    fn from(v: IndependenceViolation) -> Self {
        Error::Independence(v)
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
