use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a weight needs at least one entry")]
    EmptyWeight,
    #[error("entries must be non-increasing, but entry {position} is smaller than entry {}", position + 1)]
    NotNonIncreasing { position: usize },
    #[error("cannot pad with zeros after a negative last entry ({last})")]
    PadBelowNegative { last: i64 },
    #[error("cannot pad a weight of length {len} down to length {requested}")]
    LengthShrink { len: usize, requested: usize },
    #[error("expected a weight of length {expected}, found length {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("partition has {parts} nonzero parts, more than the rank {rank}")]
    TooManyParts { parts: usize, rank: usize },
    #[error("Gr({k},{n}) is not a Grassmannian: need 0 <= k <= n-1")]
    InvalidSpace { k: usize, n: usize },
    #[error("empty twist range [{from}, {to}]")]
    BadRange { from: i64, to: i64 },
    #[error("c1 degree {num}/{den} is not an integer")]
    NonIntegralChernDegree { num: String, den: String },
    #[error("invalid factorization pair: {0}")]
    InvalidPair(String),
    #[error("grid cell at column {column}, row {row} violates the weight relations")]
    InconsistentGrid { column: usize, row: usize },
    #[error("search space has {candidates} candidates, above the cap of {cap}")]
    SearchTooLarge { candidates: BigUint, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
