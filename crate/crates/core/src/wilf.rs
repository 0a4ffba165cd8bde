//! st-Wilf equivalence classes and the transport of major index to charge.
//!
//! Equivalence is decided over the finite range `0..=n_max`, so a computed
//! class is evidence for equivalence at every size, not a proof of it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{enumerate_avoiders, s3, PatternSet, Permutation};
use crate::statistics::{charge, major_index, stat_polynomial, StatPolynomial, Statistic};
use crate::ExhaustionLimit;

/// Below this size distinct classes may still share every polynomial, so
/// theorem checks only demand an exact partition from here on.
pub const EXACT_CLASS_MIN_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfClassReport {
    pub stat: Statistic,
    /// Sizes `0..=n_max` were compared.
    pub n_max: usize,
    /// Each class is sorted; classes are ordered by their first member.
    pub classes: Vec<Vec<PatternSet>>,
    pub witness_polynomials: BTreeMap<PatternSet, Vec<StatPolynomial>>,
}

impl WilfClassReport {
    pub fn class_of(&self, set: &PatternSet) -> Option<&[PatternSet]> {
        self.classes
            .iter()
            .find(|c| c.contains(set))
            .map(Vec::as_slice)
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// The partition as a set of sets, independent of ordering.
    pub fn partition(&self) -> BTreeSet<BTreeSet<PatternSet>> {
        normalize(&self.classes)
    }
}

impl fmt::Display for WilfClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_classes(&self.classes))
    }
}

fn normalize(classes: &[Vec<PatternSet>]) -> BTreeSet<BTreeSet<PatternSet>> {
    classes
        .iter()
        .map(|c| c.iter().cloned().collect())
        .collect()
}

fn format_classes(classes: &[Vec<PatternSet>]) -> String {
    let inner: Vec<String> = classes
        .iter()
        .map(|c| {
            let members: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            format!("[{}]", members.join(", "))
        })
        .collect();
    inner.join(" ")
}

/// Partition `candidates` by equality of `F_n^{stat}` for every `n` in
/// `0..=n_max`. Duplicate candidates are collapsed.
pub fn st_wilf_classes(
    candidates: &[PatternSet],
    stat: Statistic,
    n_max: usize,
) -> Result<WilfClassReport> {
    if candidates.is_empty() {
        return Err(Error::InvalidArgument("no candidate pattern sets".into()));
    }
    let unique: Vec<PatternSet> = candidates
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let witnesses = unique
        .par_iter()
        .map(|set| {
            (0..=n_max)
                .map(|n| stat_polynomial(n, set, stat))
                .collect::<Result<Vec<_>>>()
                .map(|polys| (set.clone(), polys))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut classes: Vec<Vec<PatternSet>> = Vec::new();
    let mut keys: Vec<Vec<&[u64]>> = Vec::new();
    for (set, polys) in &witnesses {
        let key: Vec<&[u64]> = polys.iter().map(StatPolynomial::coeffs).collect();
        match keys.iter().position(|k| *k == key) {
            Some(i) => classes[i].push(set.clone()),
            None => {
                keys.push(key);
                classes.push(vec![set.clone()]);
            }
        }
    }
    Ok(WilfClassReport {
        stat,
        n_max,
        classes,
        witness_polynomials: witnesses.into_iter().collect(),
    })
}

/// Image of a pattern set under [`Permutation::reverse_complement_inverse`].
/// A permutation contains `s` exactly when its image contains the image of
/// `s`, so this maps `Av_n(patterns)` onto `Av_n(transport(patterns))`.
pub fn transport_patterns(patterns: &PatternSet) -> PatternSet {
    patterns.iter().map(Permutation::reverse_complement_inverse).collect()
}

fn check_limit(n: usize, limit: ExhaustionLimit) -> Result<()> {
    if n > limit.0 {
        Err(Error::ExhaustionLimit { n, limit: limit.0 })
    } else {
        Ok(())
    }
}

/// First `p` in `S_n` (lexicographically) with `maj(p) != ch(f(p))`.
pub fn lemma1_counterexample(n: usize, limit: ExhaustionLimit) -> Result<Option<Permutation>> {
    check_limit(n, limit)?;
    Ok(Permutation::all(n).find(|p| major_index(p) != charge(&p.reverse_complement_inverse())))
}

pub fn verify_lemma1(n: usize, limit: ExhaustionLimit) -> Result<bool> {
    lemma1_counterexample(n, limit).map(|c| c.is_none())
}

/// The pattern correspondence `123→123, 132→213, 213→132, 231→231,
/// 312→312, 321→321`.
pub fn lemma2_correspondence() -> BTreeMap<Permutation, Permutation> {
    ["123", "132", "213", "231", "312", "321"]
        .iter()
        .zip(["123", "213", "132", "231", "312", "321"])
        .map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap()))
        .collect()
}

/// For each `s` in `S_3`, computes `f(Av_n(s))` and identifies the length-3
/// pattern `t` with `Av_n(t)` equal to it, preferring `s` itself when
/// several qualify (only possible for `n < 3`). Fails with a witness when
/// an image is not such an avoidance set or disagrees with
/// [`lemma2_correspondence`].
pub fn verify_lemma2(n: usize, limit: ExhaustionLimit) -> Result<BTreeMap<Permutation, Permutation>> {
    check_limit(n, limit)?;
    let patterns = s3();
    let avoiders: BTreeMap<Permutation, BTreeSet<Permutation>> = patterns
        .iter()
        .map(|s| (s.clone(), enumerate_avoiders(n, &PatternSet::single(s.clone())).collect()))
        .collect();
    let expected = lemma2_correspondence();
    let mut found = BTreeMap::new();
    for s in &patterns {
        let image: BTreeSet<Permutation> =
            avoiders[s].iter().map(Permutation::reverse_complement_inverse).collect();
        let target = std::iter::once(s)
            .chain(patterns.iter())
            .find(|t| avoiders[*t] == image);
        let want = &expected[s];
        match target {
            Some(t) if avoiders[want] == image => {
                found.insert(s.clone(), t.clone());
            }
            _ => {
                let witness = image
                    .symmetric_difference(&avoiders[want])
                    .next()
                    .cloned()
                    .expect("sets differ");
                return Err(Error::ImageMismatch {
                    pattern: s.clone(),
                    witness,
                });
            }
        }
    }
    Ok(found)
}

fn sets(groups: &[&[&str]]) -> Vec<Vec<PatternSet>> {
    groups
        .iter()
        .map(|g| {
            vec![g
                .iter()
                .map(|s| s.parse::<Permutation>().unwrap())
                .collect::<PatternSet>()]
        })
        .collect()
}

/// Known classes of the six singleton patterns of `S_3`.
pub fn expected_singleton_classes(stat: Statistic) -> Result<Vec<Vec<PatternSet>>> {
    let single = |s: &str| PatternSet::single(s.parse().unwrap());
    let pairs: [[&str; 2]; 2] = match stat {
        Statistic::Charge => [["132", "312"], ["213", "231"]],
        Statistic::MajorIndex => [["132", "231"], ["213", "312"]],
        Statistic::Inversions => {
            return Err(Error::InvalidArgument(
                "no reference classes for inversions".into(),
            ))
        }
    };
    let mut classes = vec![vec![single("123")], vec![single("321")]];
    classes.extend(pairs.iter().map(|p| p.iter().map(|s| single(s)).collect()));
    Ok(classes)
}

/// All 2-element subsets of `S_3` other than `{123, 321}`.
pub fn s3_pair_candidates() -> Vec<PatternSet> {
    let all = s3();
    let excluded: PatternSet = ["123", "321"].iter().map(|s| s.parse().unwrap()).collect();
    let mut out = Vec::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let set: PatternSet = [all[i].clone(), all[j].clone()].into_iter().collect();
            if set != excluded {
                out.push(set);
            }
        }
    }
    out
}

/// The one non-singleton class among [`s3_pair_candidates`].
pub fn expected_pair_quadruple(stat: Statistic) -> Result<Vec<PatternSet>> {
    let groups: [&[&str]; 4] = match stat {
        Statistic::Charge => [&["132", "213"], &["213", "312"], &["132", "231"], &["231", "312"]],
        Statistic::MajorIndex => [&["132", "213"], &["132", "312"], &["213", "231"], &["231", "312"]],
        Statistic::Inversions => {
            return Err(Error::InvalidArgument(
                "no reference classes for inversions".into(),
            ))
        }
    };
    Ok(sets(&groups).into_iter().flatten().collect())
}

fn expected_pair_classes(stat: Statistic) -> Result<Vec<Vec<PatternSet>>> {
    let quad = expected_pair_quadruple(stat)?;
    let mut classes = vec![quad.clone()];
    classes.extend(
        s3_pair_candidates()
            .into_iter()
            .filter(|s| !quad.contains(s))
            .map(|s| vec![s]),
    );
    Ok(classes)
}

/// At `n_max >= EXACT_CLASS_MIN_N` the partitions must be equal. Below it,
/// each expected class only has to sit inside one computed class.
fn check_classes(report: &WilfClassReport, expected: &[Vec<PatternSet>]) -> Result<()> {
    let ok = if report.n_max >= EXACT_CLASS_MIN_N {
        report.partition() == normalize(expected)
    } else {
        expected.iter().all(|class| {
            report
                .class_of(&class[0])
                .is_some_and(|found| class.iter().all(|s| found.contains(s)))
        })
    };
    if ok {
        Ok(())
    } else {
        Err(Error::ClassMismatch {
            expected: format_classes(expected),
            found: report.to_string(),
        })
    }
}

fn check_theorem_limits(n_max: usize, limit: ExhaustionLimit) -> Result<()> {
    if n_max < 3 {
        return Err(Error::InvalidArgument(format!("n_max must be at least 3, got {n_max}")));
    }
    check_limit(n_max, limit)
}

/// Classes of the singleton patterns of `S_3`, checked against the known
/// partition for charge or major index.
pub fn verify_theorem3(n_max: usize, stat: Statistic, limit: ExhaustionLimit) -> Result<WilfClassReport> {
    check_theorem_limits(n_max, limit)?;
    let expected = expected_singleton_classes(stat)?;
    let candidates: Vec<PatternSet> = s3().into_iter().map(PatternSet::single).collect();
    let report = st_wilf_classes(&candidates, stat, n_max)?;
    check_classes(&report, &expected)?;
    Ok(report)
}

/// Classes of the admissible 2-subsets of `S_3`: one class of four, the
/// rest singletons.
pub fn verify_theorem4(n_max: usize, stat: Statistic, limit: ExhaustionLimit) -> Result<WilfClassReport> {
    check_theorem_limits(n_max, limit)?;
    let expected = expected_pair_classes(stat)?;
    let report = st_wilf_classes(&s3_pair_candidates(), stat, n_max)?;
    check_classes(&report, &expected)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> PatternSet {
        items.iter().map(|s| p(s)).collect()
    }

    const LIMIT: ExhaustionLimit = ExhaustionLimit(9);

    #[test]
    fn lemma1_small() {
        for n in 0..=8 {
            assert!(verify_lemma1(n, LIMIT).unwrap(), "n = {n}");
        }
        assert_eq!(
            verify_lemma1(10, LIMIT),
            Err(Error::ExhaustionLimit { n: 10, limit: 9 })
        );
    }

    #[test]
    fn lemma2_correspondence_small() {
        let expected = lemma2_correspondence();
        assert_eq!(verify_lemma2(3, LIMIT).unwrap(), expected);
        assert_eq!(verify_lemma2(6, LIMIT).unwrap(), expected);
        let n1 = verify_lemma2(1, LIMIT).unwrap();
        assert!(n1.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn transport_matches_correspondence() {
        for (s, t) in lemma2_correspondence() {
            assert_eq!(transport_patterns(&PatternSet::single(s)), PatternSet::single(t));
        }
    }

    #[test]
    fn single_candidate_is_its_own_class() {
        for stat in Statistic::ALL {
            let r = st_wilf_classes(&[set(&["132"])], stat, 4).unwrap();
            assert_eq!(r.classes, vec![vec![set(&["132"])]]);
            assert_eq!(r.witness_polynomials[&set(&["132"])].len(), 5);
        }
        assert!(st_wilf_classes(&[], Statistic::Charge, 3).is_err());
    }

    #[test]
    fn theorem3_both_statistics() {
        for stat in [Statistic::Charge, Statistic::MajorIndex] {
            let r = verify_theorem3(7, stat, LIMIT).unwrap();
            assert_eq!(r.class_sizes().iter().sum::<usize>(), 6);
        }
        let r = verify_theorem3(7, Statistic::Charge, LIMIT).unwrap();
        assert_eq!(r.class_of(&set(&["312"])).unwrap(), [set(&["132"]), set(&["312"])]);
    }

    #[test]
    fn theorem4_small_range_only_refines() {
        for n_max in 3..=5 {
            verify_theorem4(n_max, Statistic::Charge, LIMIT).unwrap();
        }
        assert!(matches!(
            verify_theorem4(2, Statistic::Charge, LIMIT),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn pair_candidates() {
        let c = s3_pair_candidates();
        assert_eq!(c.len(), 14);
        assert!(!c.contains(&set(&["123", "321"])));
    }

    #[test]
    fn wrong_expectation_is_reported() {
        let r = st_wilf_classes(
            &[set(&["123"]), set(&["321"])],
            Statistic::Charge,
            6,
        )
        .unwrap();
        let wrong = vec![vec![set(&["123"]), set(&["321"])]];
        assert!(matches!(check_classes(&r, &wrong), Err(Error::ClassMismatch { .. })));
    }
}
