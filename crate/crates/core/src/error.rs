use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {0} is outside the supported range 1..=4")]
    UnsupportedDegree(u32),

    #[error("field element {value} does not fit in GF(2^{degree})")]
    ElementOutOfRange { value: u32, degree: u32 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("modulus {modulus:#b} is not an irreducible polynomial of degree {degree}")]
    ReducibleModulus { modulus: u32, degree: u32 },

    #[error("basis elements are linearly dependent over F_2")]
    DependentBasis,

    #[error("net index {index} is out of range (there are {count} nets)")]
    NetIndexOutOfRange { index: u128, count: u128 },

    #[error("refusing to enumerate {0} nets exhaustively")]
    TooManyNets(u128),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid state file: {0}")]
    InvalidState(String),

    #[error("invariant violated: {what} (residual {residual:e})")]
    Invariant { what: String, residual: f64 },

    #[error("numerical construction failed: {0}")]
    Numerical(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invariant(what: impl Into<String>, residual: f64) -> Self {
        Error::Invariant {
            what: what.into(),
            residual,
        }
    }
}
