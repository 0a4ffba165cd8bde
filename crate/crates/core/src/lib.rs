//! Permutation statistics (major index, charge, inversions), classical
//! pattern avoidance, statistic generating polynomials over avoidance
//! classes, st-Wilf equivalence, and the Robinson–Schensted machinery used to
//! evaluate `Ch_n(321; q)` from two-row tableaux.

pub mod error;
pub mod perm;
pub mod statistics;
pub mod tableaux;
pub mod wilf;

pub use error::{Error, Result};
pub use perm::{enumerate_avoiders, Avoiders, PatternSet, Permutation};
pub use statistics::{StatPolynomial, Statistic};

/// Largest `n` for which a check may loop over all of `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustionLimit(pub usize);

impl ExhaustionLimit {
    pub const DEFAULT: ExhaustionLimit = ExhaustionLimit(9);
}

impl Default for ExhaustionLimit {
    fn default() -> Self {
        Self::DEFAULT
    }
}
