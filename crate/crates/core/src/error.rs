use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined gcd: both arguments are zero")]
    UndefinedGcd,

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: i64, modulus: u64 },

    #[error("modulus must be at least {min}, got {modulus}")]
    ModulusTooSmall { modulus: u64, min: u64 },

    #[error("order {order} outside supported range {min}..={max}")]
    OrderOutOfRange { order: u64, min: u64, max: u64 },

    #[error("unsupported dimension {0} (expected 2, 3 or 4)")]
    UnsupportedDimension(usize),

    #[error("expected a {expected}-dimensional vector, got {found} components")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parameter a{position} = {value} outside 1..={max}")]
    ParamOutOfRange { position: usize, value: u64, max: u64 },

    #[error("invalid symbol permutation: {0}")]
    InvalidPermutation(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid array: {0}")]
    InvalidArray(String),

    #[error("invalid slice: {0}")]
    InvalidSlice(String),

    #[error("not a pandiagonal family: vector {index} ({vector}) violates {constraint}")]
    NotPandiagonalFamily {
        index: usize,
        vector: String,
        constraint: String,
    },

    #[error("orthogonality: determinant {det} is not coprime to {order}")]
    NotOrthogonal { det: i64, order: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}
