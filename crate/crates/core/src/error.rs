use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("length mismatch: expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),

    #[error("boundary offsets {0:?} are not weakly increasing")]
    NotIncreasing(Vec<u64>),

    #[error("offset s_n = {s_last} exceeds N/2 for N = {power}")]
    OffsetTooLarge { s_last: u64, power: u64 },

    #[error("weight {weight:?} does not lie in the lattice of the {power}-th spinor power (parity)")]
    Parity { weight: Vec<i64>, power: u64 },

    #[error("weight {0:?} mixes even and odd coordinates and is not a B_n weight")]
    MixedParity(Vec<i64>),

    #[error("invalid sl_n highest weight: {0}")]
    InvalidAnWeight(String),

    #[error("sl_n weight {0:?} is not integral; exact evaluation needs integer exponents")]
    NonIntegralWeight(Vec<String>),

    #[error("torus coordinate {index} must be strictly positive")]
    NonPositiveCoordinate { index: usize },

    #[error("singular torus point: {0}")]
    SingularPoint(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("theta entries must be finite and strictly positive, got {0:?}")]
    InvalidTheta(Vec<f64>),

    #[error("scale guard exceeded: {0}")]
    ScaleGuard(String),
}
