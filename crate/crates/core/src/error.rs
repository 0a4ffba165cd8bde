use thiserror::Error;

use crate::perm::Permutation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {token:?} as a permutation entry")]
    ParseToken { token: String },

    #[error("not a permutation of 1..{len}: {reason}")]
    InvalidPermutation { len: usize, reason: String },

    #[error("unknown statistic {0:?} (expected maj, ch or inv)")]
    UnknownStatistic(String),

    #[error("exact integer overflow while {0}")]
    Overflow(&'static str),

    #[error("refusing exhaustive loop over S_{n}: limit is {limit}")]
    ExhaustionLimit { n: usize, limit: usize },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableaux P and Q have different shapes")]
    ShapeMismatch,

    #[error("invalid ballot word: {0}")]
    InvalidBallotWord(String),

    #[error("ballot word has no 2 and does not encode a two-row tableau")]
    NotTwoRow,

    #[error("rank {rank} out of range for n = {n} (count {count})")]
    RankOutOfRange { n: usize, rank: u64, count: u64 },

    #[error("no fixed-point-free involution guaranteed: {count} two-row tableaux of size {n} is odd")]
    OddTwoRowCount { n: usize, count: u64 },

    #[error("second row length {r} out of range for n = {n}")]
    ShapeOutOfRange { n: usize, r: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("image of Av_n({pattern}) is not Av_n of the expected pattern; witness {witness}")]
    ImageMismatch {
        pattern: Permutation,
        witness: Permutation,
    },

    #[error("count mismatch at n = {n}: enumeration gives {enumerated}, shape counts give {formula}")]
    CountMismatch { n: usize, enumerated: u64, formula: u64 },

    #[error("tableau route and enumeration disagree on Ch_{n}(321; q)")]
    PolynomialMismatch { n: usize },

    #[error("class structure mismatch: expected {expected}, found {found}")]
    ClassMismatch { expected: String, found: String },
}
