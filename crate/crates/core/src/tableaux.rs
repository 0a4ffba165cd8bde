//! Robinson–Schensted insertion, two-row standard tableaux encoded as ballot
//! words, and the tableau-side evaluation of `Ch_n(321; q)`.
//!
//! Tableaux use English orientation: row 0 is on top and is the longest.
//! A ballot word over `{1, 2}` records which row receives each entry, so the
//! word `1121` is the tableau with rows `[1, 2, 4]` and `[3]`.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{enumerate_avoiders, PatternSet, Permutation};
use crate::statistics::{charge, stat_polynomial, StatPolynomial, Statistic};
use crate::ExhaustionLimit;

/// Upper bound on the number of two-row words the fast path will visit.
pub const FAST_PATH_MAX_WORDS: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidTableau(m));
        if rows.iter().any(Vec::is_empty) {
            return bad("empty row".into());
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths are not weakly decreasing".into());
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return bad(format!("entries are not exactly 1..={n}"));
            }
            seen[v] = true;
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return bad("a row is not strictly increasing".into());
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return bad("a column is not strictly increasing".into());
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Row index (0-based) holding each entry; index 0 unused.
    fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v] = r;
            }
        }
        out
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row insertion with a recording tableau. Returns `(P, Q)`.
pub fn rsk_insert(p: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut prows: Vec<Vec<usize>> = Vec::new();
    let mut qrows: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in p.entries().iter().enumerate() {
        let mut carry = x;
        let mut r = 0;
        loop {
            if r == prows.len() {
                prows.push(vec![carry]);
                qrows.push(vec![i + 1]);
                break;
            }
            let row = &mut prows[r];
            let at = row.partition_point(|&y| y < carry);
            if at == row.len() {
                row.push(carry);
                qrows[r].push(i + 1);
                break;
            }
            std::mem::swap(&mut row[at], &mut carry);
            r += 1;
        }
    }
    (StandardTableau { rows: prows }, StandardTableau { rows: qrows })
}

/// Inverse of [`rsk_insert`]: removes entries of `q` from largest to
/// smallest, reverse-bumping the matching cell of `p` up to the top row.
pub fn rsk_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let n = p.size();
    let q_row = q.row_of();
    let mut rows = p.rows.clone();
    let mut out = vec![0; n];
    for i in (1..=n).rev() {
        let r = q_row[i];
        let mut carry = rows[r].pop().expect("corner cell");
        if rows[r].is_empty() {
            rows.pop();
        }
        for above in (0..r).rev() {
            let row = &mut rows[above];
            let at = row.partition_point(|&y| y < carry) - 1;
            std::mem::swap(&mut row[at], &mut carry);
        }
        out[i - 1] = carry;
    }
    Permutation::new(out)
}

/// Rows from bottom to top, each read left to right. Its insertion
/// tableau is `t` itself.
pub fn reading_word(t: &StandardTableau) -> Permutation {
    Permutation::from_vec_unchecked(t.rows.iter().rev().flatten().copied().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BallotWord {
    letters: Vec<u8>,
}

impl BallotWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        let mut height = 0i64;
        for (i, &c) in letters.iter().enumerate() {
            match c {
                1 => height += 1,
                2 => height -= 1,
                _ => return Err(Error::InvalidBallotWord(format!("letter {c} is not 1 or 2"))),
            }
            if height < 0 {
                return Err(Error::InvalidBallotWord(format!(
                    "prefix of length {} has more 2s than 1s",
                    i + 1
                )));
            }
        }
        Ok(BallotWord { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn twos(&self) -> usize {
        self.letters.iter().filter(|&&c| c == 2).count()
    }

    /// At least one letter is 2, i.e. the tableau has exactly two rows.
    pub fn is_two_row(&self) -> bool {
        self.twos() > 0
    }

    pub fn to_tableau(&self) -> StandardTableau {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (i, &c) in self.letters.iter().enumerate() {
            let r = usize::from(c - 1);
            if rows.len() <= r {
                rows.push(Vec::new());
            }
            rows[r].push(i + 1);
        }
        StandardTableau { rows }
    }

    pub fn from_tableau(t: &StandardTableau) -> Result<Self> {
        if t.num_rows() > 2 {
            return Err(Error::InvalidBallotWord(format!(
                "tableau has {} rows",
                t.num_rows()
            )));
        }
        let letters = t.row_of()[1..].iter().map(|&r| r as u8 + 1).collect();
        Ok(BallotWord { letters })
    }
}

impl fmt::Display for BallotWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BallotWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .filter(|&c| c != ',')
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::ParseToken { token: c.to_string() }),
            })
            .collect::<Result<Vec<u8>>>()?;
        BallotWord::new(letters)
    }
}

/// Lexicographic stream (`1 < 2`) of ballot words of length `n` that
/// contain at least one 2.
#[derive(Debug, Clone)]
pub struct TwoRowWords {
    n: usize,
    fixed: usize,
    letters: Vec<u8>,
    next: Vec<u8>,
    ones: usize,
    twos: usize,
    finished: bool,
}

impl TwoRowWords {
    pub fn new(n: usize) -> Self {
        TwoRowWords {
            n,
            fixed: 0,
            letters: Vec::with_capacity(n),
            next: vec![1],
            ones: 0,
            twos: 0,
            finished: false,
        }
    }

    /// The sub-stream of words starting with `prefix`, which must itself be
    /// a ballot word no longer than `n`.
    pub fn with_prefix(n: usize, prefix: &BallotWord) -> Self {
        let mut it = TwoRowWords::new(n);
        if prefix.len() > n {
            it.finished = true;
            return it;
        }
        it.fixed = prefix.len();
        it.letters = prefix.letters.clone();
        it.ones = prefix.len() - prefix.twos();
        it.twos = prefix.twos();
        it
    }

    fn pop(&mut self) {
        match self.letters.pop() {
            Some(1) => self.ones -= 1,
            Some(_) => self.twos -= 1,
            None => unreachable!("pop past the fixed prefix"),
        }
    }
}

impl Iterator for TwoRowWords {
    type Item = BallotWord;

    fn next(&mut self) -> Option<BallotWord> {
        if self.finished {
            return None;
        }
        if self.fixed == self.n {
            self.finished = true;
            return (self.twos > 0).then(|| BallotWord {
                letters: self.letters.clone(),
            });
        }
        loop {
            let d = self.letters.len();
            let slot = d - self.fixed;
            let mut placed = false;
            while self.next[slot] <= 2 {
                let c = self.next[slot];
                self.next[slot] += 1;
                if c == 2 && self.ones <= self.twos {
                    continue;
                }
                self.letters.push(c);
                if c == 1 {
                    self.ones += 1;
                } else {
                    self.twos += 1;
                }
                placed = true;
                break;
            }
            if placed {
                if self.letters.len() == self.n {
                    let out = (self.twos > 0).then(|| BallotWord {
                        letters: self.letters.clone(),
                    });
                    self.pop();
                    if out.is_some() {
                        return out;
                    }
                } else {
                    self.next.push(1);
                }
            } else {
                if d == self.fixed {
                    self.finished = true;
                    return None;
                }
                self.next.pop();
                self.pop();
            }
        }
    }
}

pub fn enumerate_two_row_syt(n: usize) -> TwoRowWords {
    TwoRowWords::new(n)
}

pub fn binomial(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow("computing a binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// Number of standard tableaux of size `n` with exactly two rows.
pub fn count_two_row(n: usize) -> Result<u64> {
    Ok(binomial(n, n / 2)? - 1)
}

/// [`count_two_row`] without the 64-bit ceiling.
pub fn count_two_row_exact(n: usize) -> BigUint {
    let k = n / 2;
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    acc - BigUint::from(1u32)
}

/// Number of standard tableaux of shape `(n - r, r)`.
pub fn syt_count_two_row_shape(n: usize, r: usize) -> Result<u64> {
    if r > n / 2 {
        return Err(Error::ShapeOutOfRange { n, r });
    }
    let below = if r == 0 { 0 } else { binomial(n, r - 1)? };
    Ok(binomial(n, r)? - below)
}

/// `table[len][h]`: ballot continuations of length `len` from height `h`
/// that never dip below height 0.
fn completion_table(n: usize) -> Result<Vec<Vec<u64>>> {
    let mut table = vec![vec![1u64; n + 2]];
    for len in 1..=n {
        let prev = &table[len - 1];
        let row = (0..n + 2)
            .map(|h| {
                let up = if h + 1 < n + 2 { prev[h + 1] } else { 0 };
                let down = if h > 0 { prev[h - 1] } else { 0 };
                up.checked_add(down)
                    .ok_or(Error::Overflow("counting ballot completions"))
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    Ok(table)
}

/// Position of `w` in [`enumerate_two_row_syt`] for its length.
pub fn ballot_rank(w: &BallotWord) -> Result<u64> {
    if !w.is_two_row() {
        return Err(Error::NotTwoRow);
    }
    let n = w.len();
    let table = completion_table(n)?;
    let mut rank = 0u64;
    let mut h = 0usize;
    for (i, &c) in w.letters.iter().enumerate() {
        if c == 2 {
            rank = rank
                .checked_add(table[n - i - 1][h + 1])
                .ok_or(Error::Overflow("ranking a ballot word"))?;
            h -= 1;
        } else {
            h += 1;
        }
    }
    // The all-ones word precedes every two-row word.
    Ok(rank - 1)
}

pub fn ballot_unrank(n: usize, rank: u64) -> Result<BallotWord> {
    let count = count_two_row(n)?;
    if rank >= count {
        return Err(Error::RankOutOfRange { n, rank, count });
    }
    let table = completion_table(n)?;
    let mut target = rank + 1;
    let mut h = 0usize;
    let mut letters = Vec::with_capacity(n);
    for i in 0..n {
        let with_one = table[n - i - 1][h + 1];
        if target < with_one {
            letters.push(1);
            h += 1;
        } else {
            target -= with_one;
            letters.push(2);
            h -= 1;
        }
    }
    Ok(BallotWord { letters })
}

/// Fixed-point-free involution on two-row words of one length, pairing
/// ranks `2t` and `2t + 1`. Refuses lengths with an odd number of words.
pub fn involution_phi(w: &BallotWord) -> Result<BallotWord> {
    let n = w.len();
    let count = count_two_row(n)?;
    if count % 2 == 1 {
        return Err(Error::OddTwoRowCount { n, count });
    }
    ballot_unrank(n, ballot_rank(w)? ^ 1)
}

fn check_fast_path(n: usize) -> Result<()> {
    let words = count_two_row(n)?;
    if words > FAST_PATH_MAX_WORDS {
        return Err(Error::Resource(format!(
            "{words} two-row tableaux of size {n} exceed the fast-path bound {FAST_PATH_MAX_WORDS}"
        )));
    }
    Ok(())
}

/// All ballot words of length `len` (including the all-ones word), used as
/// shard prefixes.
fn ballot_prefixes(len: usize) -> Vec<BallotWord> {
    let mut out = vec![BallotWord { letters: vec![1; len] }];
    out.extend(TwoRowWords::new(len));
    out
}

/// `Ch_n(321; q)` from insertion tableaux: the single-row tableau
/// contributes `1`, and every two-row `P` contributes the number of
/// recording tableaux of its shape at `q^{ch(reading_word(P))}`.
pub fn fast_ch_321(n: usize) -> Result<StatPolynomial> {
    check_fast_path(n)?;
    let patterns = PatternSet::single(Permutation::from_vec_unchecked(vec![3, 2, 1]));
    let shape_counts = (0..=n / 2)
        .map(|r| syt_count_two_row_shape(n, r))
        .collect::<Result<Vec<_>>>()?;

    let shard = |words: TwoRowWords| -> Result<StatPolynomial> {
        let mut poly = StatPolynomial::zero(n, patterns.clone(), Statistic::Charge);
        for w in words {
            let ch = charge(&reading_word(&w.to_tableau()));
            poly.add_term(ch as usize, shape_counts[w.twos()])?;
        }
        Ok(poly)
    };
    let shards = ballot_prefixes(n.min(6))
        .par_iter()
        .map(|prefix| shard(TwoRowWords::with_prefix(n, prefix)))
        .collect::<Result<Vec<_>>>()?;

    let mut total = StatPolynomial::zero(n, patterns.clone(), Statistic::Charge);
    total.add_term(0, 1)?;
    for s in &shards {
        total.merge(s)?;
    }
    Ok(total)
}

fn size_for_k(k: u32) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    1usize
        .checked_shl(k)
        .filter(|&v| v != 0 && k < usize::BITS)
        .map(|v| v - 1)
        .ok_or(Error::Overflow("computing 2^k - 1"))
}

/// Above this size the theorem checks skip the brute-force cross-check.
pub const CROSS_CHECK_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma5Report {
    pub k: u32,
    pub n: usize,
    /// `1 + sum_r f(n - r, r)^2`.
    pub count: u64,
    pub odd: bool,
    /// Whether the count was also confirmed by enumerating `Av_n(321)`.
    pub enumerated: bool,
}

/// Oddness of `|Av_{2^k - 1}(321)|` from shape counts, confirmed by
/// enumeration for small sizes.
pub fn verify_lemma5(k: u32, limit: ExhaustionLimit) -> Result<Lemma5Report> {
    let n = size_for_k(k)?;
    let count = avoider_count_from_shapes(n)?;
    let enumerated = n <= CROSS_CHECK_MAX_N && n <= limit.0;
    if enumerated {
        let direct = enumerate_avoiders(n, &PatternSet::single(Permutation::from_vec_unchecked(vec![3, 2, 1])))
            .count() as u64;
        if direct != count {
            return Err(Error::CountMismatch {
                n,
                enumerated: direct,
                formula: count,
            });
        }
    }
    Ok(Lemma5Report {
        k,
        n,
        count,
        odd: count % 2 == 1,
        enumerated,
    })
}

/// `1 + sum over r >= 1 of f(n - r, r)^2`.
pub fn avoider_count_from_shapes(n: usize) -> Result<u64> {
    (1..=n / 2).try_fold(1u64, |acc, r| {
        let f = syt_count_two_row_shape(n, r)?;
        f.checked_mul(f)
            .and_then(|sq| acc.checked_add(sq))
            .ok_or(Error::Overflow("summing squared shape counts"))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Enumeration,
    Tableaux,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub k: u32,
    pub n: usize,
    pub polynomial: StatPolynomial,
    pub route: Route,
    /// Constant coefficient is 1 and every other coefficient is even.
    pub holds: bool,
    pub cross_checked: bool,
}

pub fn has_parity_pattern(poly: &StatPolynomial) -> bool {
    poly.coeff(0) == 1 && poly.coeffs().iter().skip(1).all(|c| c % 2 == 0)
}

fn pattern_321() -> PatternSet {
    PatternSet::single(Permutation::from_vec_unchecked(vec![3, 2, 1]))
}

/// Parity of `Ch_{2^k - 1}(321; q)` via the tableau route, cross-checked
/// against enumeration for small sizes.
pub fn verify_theorem8(k: u32, limit: ExhaustionLimit) -> Result<ParityReport> {
    let n = size_for_k(k)?;
    let polynomial = fast_ch_321(n)?;
    let cross_checked = n <= CROSS_CHECK_MAX_N && n <= limit.0;
    if cross_checked && stat_polynomial(n, &pattern_321(), Statistic::Charge)? != polynomial {
        return Err(Error::PolynomialMismatch { n });
    }
    Ok(ParityReport {
        k,
        n,
        holds: has_parity_pattern(&polynomial),
        polynomial,
        route: Route::Tableaux,
        cross_checked,
    })
}

/// Parity of `M_{2^k - 1}(321; q)`. Small sizes enumerate the major index
/// directly; larger ones use `M_n(321; q) = Ch_n(321; q)` and the tableau
/// route.
pub fn verify_corollary9(k: u32, limit: ExhaustionLimit) -> Result<ParityReport> {
    let n = size_for_k(k)?;
    let (polynomial, route) = if n <= CROSS_CHECK_MAX_N && n <= limit.0 {
        (stat_polynomial(n, &pattern_321(), Statistic::MajorIndex)?, Route::Enumeration)
    } else {
        let mut p = fast_ch_321(n)?;
        p.stat = Statistic::MajorIndex;
        (p, Route::Tableaux)
    };
    Ok(ParityReport {
        k,
        n,
        holds: has_parity_pattern(&polynomial),
        polynomial,
        route,
        cross_checked: route == Route::Enumeration,
    })
}

/// `M_n(321; q) == Ch_n(321; q)` by enumerating both.
pub fn maj_charge_agree_on_321(n: usize) -> Result<bool> {
    let pi = pattern_321();
    let maj = stat_polynomial(n, &pi, Statistic::MajorIndex)?;
    let ch = stat_polynomial(n, &pi, Statistic::Charge)?;
    Ok(maj.same_coeffs(&ch))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn w(s: &str) -> BallotWord {
        s.parse().unwrap()
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::new(vec![]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![]]).is_err());
    }

    #[test]
    fn insertion_examples() {
        let (pt, qt) = rsk_insert(&p("132"));
        assert_eq!((pt.clone(), qt.clone()), (t(&[&[1, 2], &[3]]), t(&[&[1, 2], &[3]])));
        assert_eq!(rsk_insert(&p("213")), (t(&[&[1, 3], &[2]]), t(&[&[1, 3], &[2]])));
        let id = Permutation::identity(6);
        let (pi, qi) = rsk_insert(&id);
        assert_eq!(pi, t(&[&[1, 2, 3, 4, 5, 6]]));
        assert_eq!(pi, qi);
        assert_eq!(rsk_inverse(&pi, &qi).unwrap(), id);
    }

    #[test]
    fn inverse_examples() {
        let w9 = p("328574619");
        let (a, b) = rsk_insert(&w9);
        assert_eq!(rsk_inverse(&a, &b).unwrap(), w9);

        let pt = t(&[&[1, 2], &[3]]);
        let qt = t(&[&[1, 3], &[2]]);
        let x = rsk_inverse(&pt, &qt).unwrap();
        let preimages: Vec<_> = Permutation::all(3).filter(|q| rsk_insert(q) == (pt.clone(), qt.clone())).collect();
        assert_eq!(preimages, vec![x]);

        assert_eq!(rsk_inverse(&pt, &t(&[&[1, 2, 3]])), Err(Error::ShapeMismatch));
    }

    #[test]
    fn reading_word_examples() {
        assert_eq!(reading_word(&t(&[&[1, 2], &[3]])), p("312"));
        assert_eq!(reading_word(&t(&[&[1, 3], &[2]])), p("213"));
        assert_eq!(reading_word(&t(&[&[1, 2, 3, 4]])), Permutation::identity(4));
        for q in [t(&[&[1, 2], &[3]]), t(&[&[1, 3], &[2]])] {
            assert_eq!(rsk_insert(&reading_word(&q)).0, q);
        }
    }

    #[test]
    fn ballot_word_validation_and_tableau() {
        assert!(BallotWord::new(vec![2, 1]).is_err());
        assert!(BallotWord::new(vec![1, 3]).is_err());
        assert!("1x".parse::<BallotWord>().is_err());
        let word = w("1121");
        assert_eq!(word.to_tableau(), t(&[&[1, 2, 4], &[3]]));
        assert_eq!(BallotWord::from_tableau(&word.to_tableau()).unwrap(), word);
        assert!(BallotWord::from_tableau(&t(&[&[1], &[2], &[3]])).is_err());
        assert!(!w("111").is_two_row());
    }

    #[test]
    fn two_row_stream() {
        let words: Vec<String> = enumerate_two_row_syt(3).map(|x| x.to_string()).collect();
        assert_eq!(words, ["112", "121"]);
        let words: Vec<String> = enumerate_two_row_syt(4).map(|x| x.to_string()).collect();
        assert_eq!(words, ["1112", "1121", "1122", "1211", "1212"]);
        assert_eq!(enumerate_two_row_syt(0).count(), 0);
        assert_eq!(enumerate_two_row_syt(1).count(), 0);
        assert_eq!(enumerate_two_row_syt(7).count(), 34);
        assert_eq!(enumerate_two_row_syt(15).count(), 6434);
    }

    #[test]
    fn prefix_shards_partition_the_stream() {
        for n in 0..=9 {
            let full: Vec<_> = enumerate_two_row_syt(n).collect();
            let sharded: Vec<_> = ballot_prefixes(n.min(4))
                .iter()
                .flat_map(|pre| TwoRowWords::with_prefix(n, pre))
                .collect();
            assert_eq!(full, sharded, "n = {n}");
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_two_row(3).unwrap(), 2);
        assert_eq!(count_two_row(5).unwrap(), 9);
        assert_eq!(count_two_row(15).unwrap(), 6434);
        assert_eq!(count_two_row(0).unwrap(), 0);
        assert_eq!(count_two_row(1).unwrap(), 0);
        for n in 0..=60 {
            assert_eq!(count_two_row_exact(n), BigUint::from(count_two_row(n).unwrap()));
        }
        assert!(count_two_row(1023).is_err());
        for n in 0..=14 {
            assert_eq!(count_two_row(n).unwrap(), enumerate_two_row_syt(n).count() as u64);
        }
        assert_eq!(syt_count_two_row_shape(3, 1).unwrap(), 2);
        assert_eq!(syt_count_two_row_shape(9, 0).unwrap(), 1);
        assert_eq!(syt_count_two_row_shape(15, 7).unwrap(), 1430);
        assert_eq!(syt_count_two_row_shape(5, 3), Err(Error::ShapeOutOfRange { n: 5, r: 3 }));
        for n in 0..=12 {
            for r in 0..=n / 2 {
                let by_stream = enumerate_two_row_syt(n).filter(|x| x.twos() == r).count() as u64
                    + u64::from(r == 0);
                assert_eq!(syt_count_two_row_shape(n, r).unwrap(), by_stream);
            }
        }
    }

    #[test]
    fn ranking() {
        assert_eq!(ballot_rank(&w("112")).unwrap(), 0);
        assert_eq!(ballot_rank(&w("121")).unwrap(), 1);
        assert_eq!(ballot_rank(&w("1121")).unwrap(), 1);
        assert_eq!(ballot_rank(&w("1111")), Err(Error::NotTwoRow));
        assert!(matches!(ballot_unrank(3, 2), Err(Error::RankOutOfRange { .. })));
        for n in 0..=10 {
            for (i, word) in enumerate_two_row_syt(n).enumerate() {
                assert_eq!(ballot_rank(&word).unwrap(), i as u64);
                assert_eq!(ballot_unrank(n, i as u64).unwrap(), word);
            }
        }
    }

    #[test]
    fn involution() {
        assert_eq!(involution_phi(&w("112")).unwrap(), w("121"));
        assert_eq!(involution_phi(&w("121")).unwrap(), w("112"));
        assert!(matches!(
            involution_phi(&w("11211")),
            Err(Error::OddTwoRowCount { n: 5, count: 9 })
        ));
        for word in enumerate_two_row_syt(7) {
            let image = involution_phi(&word).unwrap();
            assert_ne!(image, word);
            assert_eq!(involution_phi(&image).unwrap(), word);
        }
    }

    #[test]
    fn fast_path_small() {
        assert_eq!(fast_ch_321(0).unwrap().coeffs(), [1]);
        assert_eq!(fast_ch_321(1).unwrap().coeffs(), [1]);
        assert_eq!(fast_ch_321(3).unwrap().coeffs(), [1, 2, 2]);
        assert!(matches!(fast_ch_321(40), Err(Error::Resource(_))));
    }

    #[test]
    fn lemma5_and_parity() {
        let lim = ExhaustionLimit(9);
        let counts: Vec<u64> = (1..=4).map(|k| verify_lemma5(k, lim).unwrap().count).collect();
        assert_eq!(counts, [1, 5, 429, 9_694_845]);
        assert!(verify_lemma5(3, lim).unwrap().enumerated);
        assert!(!verify_lemma5(4, lim).unwrap().enumerated);
        let r = verify_theorem8(2, lim).unwrap();
        assert!(r.holds && r.cross_checked);
        assert_eq!(r.polynomial.coeffs(), [1, 2, 2]);
        let c = verify_corollary9(1, lim).unwrap();
        assert!(c.holds);
        assert_eq!(c.polynomial.coeffs(), [1]);
        assert!(verify_theorem8(0, lim).is_err());
    }
}
