use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring elements live in different rings: {0} vs {1}")]
    MismatchedRings(String, String),
    #[error("invalid ring construction: {0}")]
    InvalidRing(String),
    #[error("{0} is not a unit")]
    NotUnit(String),
    #[error("{0} is not divisible by {1}")]
    NotDivisible(String, String),
    #[error("no canonical map from {0} to {1}")]
    NoCoercion(String, String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("elements {0} and {1} are not coprime")]
    NotCoprime(String, String),
    #[error("unsupported root system {0}")]
    UnsupportedSystem(String),
    #[error("root {0} does not belong to {1}")]
    ForeignRoot(String, String),
    #[error("exponent {given} is below the required bound {required}")]
    ExponentTooSmall { given: u32, required: u32 },
    #[error("index {index} out of range for level {level}")]
    IndexOutOfRange { index: usize, level: usize },
    #[error("word is not of the expected shape: {0}")]
    UnrecognizedShape(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
