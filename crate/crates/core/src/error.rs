use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("exp requires a series with zero constant term")]
    NonZeroConstant,
    #[error("log requires a series with constant term 1")]
    ConstantNotOne,
    #[error("series constant term is not a unit in the coefficient ring")]
    NonUnitConstant,
    #[error("coefficient is not divisible by {0} in the coefficient ring")]
    Indivisible(String),

    #[error("invalid prime {0}")]
    InvalidPrime(u64),
    #[error("chromatic level h must be at least 1")]
    InvalidLevel,
    #[error("size {size} is not admissible in mode {mode}")]
    InadmissibleSize { size: u64, mode: String },
    #[error("generators span a sublattice of infinite index")]
    RankDeficient,
    #[error("generator has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not in canonical Hermite normal form: {0}")]
    NotCanonical(String),
    #[error("integer overflow: {0}")]
    Overflow(&'static str),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("tuple entries do not commute")]
    NonCommuting,
    #[error("tuple entry {index} does not have {what} order")]
    OrderViolation { index: usize, what: String },
    #[error("brute-force enumeration refused: l = {l} exceeds guard {guard}")]
    GuardExceeded { l: usize, guard: usize },

    #[error("class function parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("class is not of degree {0} for this catalog")]
    UnknownClass(u64),

    #[error("genus model has no value for orbit {0}")]
    UncoveredOrbit(String),

    #[error("malformed input: {0}")]
    Parse(String),
}
