//! Major index, charge and inversions, and their generating polynomials over
//! pattern-avoidance classes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{Avoiders, PatternSet, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    MajorIndex,
    Charge,
    Inversions,
}

impl Statistic {
    pub const ALL: [Statistic; 3] = [Statistic::MajorIndex, Statistic::Charge, Statistic::Inversions];

    pub fn eval(self, p: &Permutation) -> u64 {
        match self {
            Statistic::MajorIndex => major_index(p),
            Statistic::Charge => charge(p),
            Statistic::Inversions => inversions(p),
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Statistic::MajorIndex => "maj",
            Statistic::Charge => "ch",
            Statistic::Inversions => "inv",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistic::MajorIndex => "major_index",
            Statistic::Charge => "charge",
            Statistic::Inversions => "inversions",
        })
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maj" | "major_index" => Ok(Statistic::MajorIndex),
            "ch" | "charge" => Ok(Statistic::Charge),
            "inv" | "inversions" => Ok(Statistic::Inversions),
            _ => Err(Error::UnknownStatistic(s.to_string())),
        }
    }
}

/// Positions `i` in `1..n` with `p(i) > p(i+1)`.
pub fn descent_set(p: &Permutation) -> Vec<usize> {
    p.entries()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn major_index(p: &Permutation) -> u64 {
    descent_set(p).into_iter().map(|i| i as u64).sum()
}

/// Charge value of every entry. `1` gets 0; `i > 1` gets `n + 1 - i` when it
/// sits left of `i - 1` and 0 otherwise.
pub fn charge_values(p: &Permutation) -> BTreeMap<usize, u64> {
    let n = p.len();
    let pos = p.positions();
    (1..=n)
        .map(|i| {
            let v = if i > 1 && pos[i] < pos[i - 1] { (n + 1 - i) as u64 } else { 0 };
            (i, v)
        })
        .collect()
}

pub fn charge(p: &Permutation) -> u64 {
    let n = p.len();
    let pos = p.positions();
    (2..=n)
        .filter(|&i| pos[i] < pos[i - 1])
        .map(|i| (n + 1 - i) as u64)
        .sum()
}

pub fn inversions(p: &Permutation) -> u64 {
    let e = p.entries();
    let mut count = 0u64;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] > e[j] {
                count += 1;
            }
        }
    }
    count
}

/// Exact generating polynomial `sum q^{stat(s)}` over `Av_n(patterns)`.
///
/// `coeffs[i]` is the coefficient of `q^i`. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatPolynomial {
    pub n: usize,
    pub patterns: PatternSet,
    pub stat: Statistic,
    coeffs: Vec<u64>,
}

impl StatPolynomial {
    pub fn zero(n: usize, patterns: PatternSet, stat: Statistic) -> Self {
        StatPolynomial {
            n,
            patterns,
            stat,
            coeffs: Vec::new(),
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at `q = 1`, i.e. `|Av_n|`.
    pub fn total(&self) -> Result<u64> {
        self.coeffs
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("summing coefficients"))
    }

    pub fn add_term(&mut self, exponent: usize, count: u64) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        if self.coeffs.len() <= exponent {
            self.coeffs.resize(exponent + 1, 0);
        }
        let slot = &mut self.coeffs[exponent];
        *slot = slot
            .checked_add(count)
            .ok_or(Error::Overflow("accumulating a coefficient"))?;
        Ok(())
    }

    /// Coefficient-wise sum. Associative and commutative, so shards can be
    /// merged in any order.
    pub fn merge(&mut self, other: &StatPolynomial) -> Result<()> {
        for (i, &c) in other.coeffs.iter().enumerate() {
            self.add_term(i, c)?;
        }
        Ok(())
    }

    /// Same coefficients, ignoring the pattern set and size labels.
    pub fn same_coeffs(&self, other: &StatPolynomial) -> bool {
        self.coeffs == other.coeffs
    }
}

impl fmt::Display for StatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "{c}q")?,
                (_, 1) => write!(f, "q^{i}")?,
                _ => write!(f, "{c}q^{i}")?,
            }
        }
        Ok(())
    }
}

fn accumulate(
    stream: impl Iterator<Item = Permutation>,
    n: usize,
    patterns: &PatternSet,
    stat: Statistic,
) -> Result<StatPolynomial> {
    let mut poly = StatPolynomial::zero(n, patterns.clone(), stat);
    for p in stream {
        poly.add_term(stat.eval(&p) as usize, 1)?;
    }
    Ok(poly)
}

/// `F_n^{stat}(patterns; q)` by streaming the pruned avoider enumeration.
pub fn stat_polynomial(n: usize, patterns: &PatternSet, stat: Statistic) -> Result<StatPolynomial> {
    accumulate(Avoiders::new(n, patterns), n, patterns, stat)
}

/// As [`stat_polynomial`], with one shard per first entry run on the
/// current rayon pool. The result does not depend on the pool size.
pub fn stat_polynomial_par(
    n: usize,
    patterns: &PatternSet,
    stat: Statistic,
) -> Result<StatPolynomial> {
    if n == 0 {
        return stat_polynomial(n, patterns, stat);
    }
    let shards = (1..=n)
        .into_par_iter()
        .map(|first| accumulate(Avoiders::with_first(n, patterns, first), n, patterns, stat))
        .collect::<Result<Vec<_>>>()?;
    let mut total = StatPolynomial::zero(n, patterns.clone(), stat);
    for shard in &shards {
        total.merge(shard)?;
    }
    Ok(total)
}
