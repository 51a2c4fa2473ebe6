use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid set: {0}")]
    InvalidSet(String),

    #[error("invalid ratio {p}/{q}: both parts must be positive")]
    InvalidRatio { p: u64, q: u64 },

    #[error("instance too large for oracle: n = {n} exceeds the enumeration limit {limit}")]
    OracleGuard { n: u64, limit: u64 },

    #[error("invalid gap set: {0}")]
    InvalidGapSet(String),

    /// An input lies outside the domain on which a map is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A map produced a value outside its claimed target family.
    #[error("image {image} is not in the target family S^{ratio}_{n}")]
    ImageOutsideTarget {
        image: String,
        ratio: String,
        n: u64,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("recurrence produced a negative value at n = {n}")]
    NegativeTerm { n: u64 },

    #[error("malformed b-file line {line}: {reason}")]
    BFileParse { line: usize, reason: String },
}
