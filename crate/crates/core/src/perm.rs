//! Permutations in one-line notation, their symmetries, and classical
//! pattern containment.
//!
//! Positions and values are 1-based in the public API. `p.get(i)` is the
//! value at position `i`, and every permutation of length `n` holds each of
//! `1..=n` exactly once.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    len: n,
                    reason: format!("value {v} is outside 1..={n}"),
                });
            }
            if seen[v] {
                return Err(Error::InvalidPermutation {
                    len: n,
                    reason: format!("value {v} appears more than once"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    /// Caller guarantees `entries` is a rearrangement of `1..=len`.
    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    pub fn empty() -> Self {
        Permutation {
            entries: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    /// Value at 1-based position `i`.
    pub fn get(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// 1-based position of each value; index 0 is unused.
    pub(crate) fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &v) in self.entries.iter().enumerate() {
            pos[v] = i + 1;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            out[v - 1] = i + 1;
        }
        Permutation { entries: out }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Permutation {
        let n1 = self.len() + 1;
        Permutation {
            entries: self.entries.iter().map(|&v| n1 - v).collect(),
        }
    }

    /// Inverse of the complement of the reverse. This bijection of `S_n`
    /// carries the major index of `p` to the charge of the image.
    pub fn reverse_complement_inverse(&self) -> Permutation {
        self.reverse().complement().inverse()
    }

    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        if pattern.len() == 3 {
            contains_len3(&self.entries, &pattern.entries)
        } else {
            contains_generic(&self.entries, &pattern.entries)
        }
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    pub fn avoids_all(&self, patterns: &PatternSet) -> bool {
        patterns.iter().all(|pat| self.avoids(pat))
    }

    /// Every permutation of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Avoiders {
        Avoiders::new(n, &PatternSet::new())
    }
}

impl fmt::Display for Permutation {
    /// Digits are juxtaposed for `n <= 9` and comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.len() <= 9 { "" } else { "," };
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `3,2,8,5` for any length, and contiguous digits such as
    /// `3285` as shorthand when every value is a single digit. The empty
    /// string and `()` both denote the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation::empty());
        }
        let entries = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<usize>().map_err(|_| Error::ParseToken {
                        token: tok.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::ParseToken {
                            token: c.to_string(),
                        })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(entries)
    }
}

/// A finite set of forbidden patterns.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct PatternSet {
    patterns: BTreeSet<Permutation>,
}

impl PatternSet {
    pub fn new() -> Self {
        PatternSet::default()
    }

    pub fn single(pattern: Permutation) -> Self {
        std::iter::once(pattern).collect()
    }

    pub fn insert(&mut self, pattern: Permutation) -> bool {
        self.patterns.insert(pattern)
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        self.patterns.contains(pattern)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn is_subset(&self, other: &PatternSet) -> bool {
        self.patterns.is_subset(&other.patterns)
    }

    /// True when some pattern of length `<= n` is present, so that
    /// enumeration of `Av_n` prunes rather than visiting all of `S_n`.
    pub fn restricts(&self, n: usize) -> bool {
        self.patterns.iter().any(|p| p.len() <= n)
    }
}

impl FromIterator<Permutation> for PatternSet {
    fn from_iter<I: IntoIterator<Item = Permutation>>(iter: I) -> Self {
        PatternSet {
            patterns: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet{self}")
    }
}

#[inline]
fn same_order(a: usize, b: usize, x: usize, y: usize) -> bool {
    (a < b) == (x < y)
}

/// Backtracking search for a subsequence of `seq` (distinct values)
/// order-isomorphic to `pat`.
pub(crate) fn contains_generic(seq: &[usize], pat: &[usize]) -> bool {
    if pat.len() > seq.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    extend_match(seq, pat, 0, &mut chosen)
}

fn extend_match(seq: &[usize], pat: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pat.len() {
        return true;
    }
    let remaining = pat.len() - j;
    for pos in from..=seq.len() - remaining {
        let v = seq[pos];
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(t, &cp)| same_order(seq[cp], v, pat[t], pat[j]));
        if consistent {
            chosen.push(pos);
            if extend_match(seq, pat, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Like [`contains_generic`] but only counts occurrences whose last entry is
/// the last element of `seq`. Used when extending an avoiding prefix.
pub(crate) fn contains_ending_at_last(seq: &[usize], pat: &[usize]) -> bool {
    let (k, m) = (pat.len(), seq.len());
    if k == 0 {
        return true;
    }
    if k > m {
        return false;
    }
    let last = seq[m - 1];
    let head = &seq[..m - 1];
    let mut chosen = Vec::with_capacity(k);
    extend_match_anchored(head, last, pat, 0, &mut chosen)
}

fn extend_match_anchored(
    head: &[usize],
    last: usize,
    pat: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let j = chosen.len();
    let k = pat.len();
    if j == k - 1 {
        return true;
    }
    let remaining = k - 1 - j;
    if head.len() < remaining + from {
        return false;
    }
    for pos in from..=head.len() - remaining {
        let v = head[pos];
        if !same_order(v, last, pat[j], pat[k - 1]) {
            continue;
        }
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(t, &cp)| same_order(head[cp], v, pat[t], pat[j]));
        if consistent {
            chosen.push(pos);
            if extend_match_anchored(head, last, pat, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Quadratic scan for a length-3 pattern `abc`: for each middle position,
/// collect the extreme left value compatible with `a` vs `b` and the extreme
/// right value compatible with `c` vs `b`, then compare them as `a` vs `c`.
pub(crate) fn contains_len3(seq: &[usize], pat: &[usize]) -> bool {
    debug_assert_eq!(pat.len(), 3);
    let (a, b, c) = (pat[0], pat[1], pat[2]);
    let n = seq.len();
    for j in 1..n.saturating_sub(1) {
        let mid = seq[j];
        let left = seq[..j].iter().copied().filter(|&x| same_order(x, mid, a, b));
        let right = seq[j + 1..].iter().copied().filter(|&x| same_order(x, mid, c, b));
        let found = if a < c {
            match (left.min(), right.max()) {
                (Some(lo), Some(hi)) => lo < hi,
                _ => false,
            }
        } else {
            match (left.max(), right.min()) {
                (Some(hi), Some(lo)) => hi > lo,
                _ => false,
            }
        };
        if found {
            return true;
        }
    }
    false
}

/// Lexicographic stream of `Av_n(patterns)`.
///
/// Prefixes are extended depth first and a prefix that already contains a
/// forbidden pattern is never extended. Restricting the first entry gives
/// disjoint shards whose concatenation in order is the full stream.
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: usize,
    patterns: Vec<Vec<usize>>,
    prefix: Vec<usize>,
    used: Vec<bool>,
    cand: Vec<usize>,
    first_hi: usize,
    finished: bool,
}

impl Avoiders {
    pub fn new(n: usize, patterns: &PatternSet) -> Self {
        Self::build(n, patterns, 1, n)
    }

    /// The sub-stream of avoiders whose first entry is `first`.
    pub fn with_first(n: usize, patterns: &PatternSet, first: usize) -> Self {
        let mut it = Self::build(n, patterns, first, first);
        if first == 0 || first > n {
            it.finished = true;
        }
        it
    }

    fn build(n: usize, patterns: &PatternSet, first_lo: usize, first_hi: usize) -> Self {
        let patterns: Vec<Vec<usize>> = patterns
            .iter()
            .filter(|p| p.len() <= n)
            .map(|p| p.entries().to_vec())
            .collect();
        let finished = patterns.iter().any(|p| p.is_empty());
        Avoiders {
            n,
            patterns,
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cand: vec![first_lo],
            first_hi,
            finished,
        }
    }

    fn prefix_ok(&self) -> bool {
        let d = self.prefix.len();
        self.patterns
            .iter()
            .filter(|p| p.len() <= d)
            .all(|p| !contains_ending_at_last(&self.prefix, p))
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.finished {
            return None;
        }
        if self.n == 0 {
            self.finished = true;
            return Some(Permutation::empty());
        }
        loop {
            let d = self.prefix.len();
            let hi = if d == 0 { self.first_hi } else { self.n };
            let mut placed = false;
            while self.cand[d] <= hi {
                let v = self.cand[d];
                self.cand[d] += 1;
                if self.used[v] {
                    continue;
                }
                self.prefix.push(v);
                if self.prefix_ok() {
                    self.used[v] = true;
                    placed = true;
                    break;
                }
                self.prefix.pop();
            }
            if placed {
                if self.prefix.len() == self.n {
                    let out = Permutation::from_vec_unchecked(self.prefix.clone());
                    let v = self.prefix.pop().expect("nonempty prefix");
                    self.used[v] = false;
                    return Some(out);
                }
                self.cand.push(1);
            } else {
                if d == 0 {
                    self.finished = true;
                    return None;
                }
                self.cand.pop();
                let v = self.prefix.pop().expect("nonempty prefix");
                self.used[v] = false;
            }
        }
    }
}

/// `Av_n(patterns)` as a lexicographic stream.
pub fn enumerate_avoiders(n: usize, patterns: &PatternSet) -> Avoiders {
    Avoiders::new(n, patterns)
}

/// The six permutations of length 3 in lexicographic order.
pub fn s3() -> Vec<Permutation> {
    Permutation::all(3).collect()
}
