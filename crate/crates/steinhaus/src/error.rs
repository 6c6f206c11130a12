use thiserror::Error;

/// Errors produced by the library's fallible operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("sequence length {0} exceeds the supported maximum of {max}", max = crate::seq::MAX_LEN)]
    TooLong(usize),
    #[error("malformed bitstring: unexpected character {0:?}")]
    BadBitstring(char),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("entry position ({i},{j}) outside triangle of size {n}")]
    PositionOutOfRange { i: usize, j: usize, n: usize },
    #[error("triangle size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("operation requires size >= {required}, got {got}")]
    SizeTooSmall { required: usize, got: usize },
    #[error("operation requires an odd triangle size, got {0}")]
    EvenSize(usize),
    #[error("operation requires an even graph order, got {0}")]
    OddOrder(usize),
    #[error("left and right sides must share their first term")]
    ApexMismatch,
    #[error("index set has {got} positions, expected {expected}")]
    BadCardinality { expected: usize, got: usize },
    #[error("dimension {dim} exceeds the enumeration guard of {cap}")]
    DimensionGuard { dim: u32, cap: u32 },
    #[error("size {n} exceeds the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("dimension formula is not defined for this symmetry class of Pascal triangles")]
    UnsupportedClass,
}

pub type Result<T> = std::result::Result<T, Error>;
