//! Exhaustive structural checks over small symmetric groups and over every
//! subset of S_3.

use std::collections::BTreeSet;

use permstat::perm::s3;
use permstat::statistics::stat_polynomial;
use permstat::tableaux::{avoider_count_from_shapes, count_two_row, enumerate_two_row_syt, involution_phi};
use permstat::wilf::{st_wilf_classes, transport_patterns};
use permstat::{enumerate_avoiders, PatternSet, Permutation, Statistic};

fn subsets_of_s3() -> Vec<PatternSet> {
    let all = s3();
    (0u32..64)
        .map(|mask| (0..6).filter(|i| mask >> i & 1 == 1).map(|i| all[i].clone()).collect())
        .collect()
}

#[test]
fn symmetries_are_involutions() {
    for n in 0..=8 {
        for p in Permutation::all(n) {
            assert_eq!(p.reverse().reverse(), p);
            assert_eq!(p.complement().complement(), p);
            assert_eq!(p.inverse().inverse(), p);
        }
    }
}

#[test]
fn rci_is_a_bijection() {
    for n in 0..=8 {
        let image: BTreeSet<Permutation> = Permutation::all(n).map(|p| p.reverse_complement_inverse()).collect();
        assert_eq!(image.len(), (1..=n).product::<usize>());
    }
}

#[test]
fn larger_pattern_sets_give_smaller_classes() {
    let subsets = subsets_of_s3();
    for n in 0..=6 {
        let av: Vec<BTreeSet<Permutation>> =
            subsets.iter().map(|s| enumerate_avoiders(n, s).collect()).collect();
        for (i, big) in subsets.iter().enumerate() {
            for (j, small) in subsets.iter().enumerate() {
                if small.is_subset(big) {
                    assert!(av[i].is_subset(&av[j]), "Av_{n}({big}) not in Av_{n}({small})");
                }
            }
        }
    }
}

#[test]
fn singletons_of_s3_are_catalan() {
    let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
    for pat in s3() {
        let pi = PatternSet::single(pat);
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(enumerate_avoiders(n, &pi).count(), c);
        }
    }
}

#[test]
fn maj_transports_to_charge() {
    for pi in subsets_of_s3() {
        let image = transport_patterns(&pi);
        for n in 0..=8 {
            let maj = stat_polynomial(n, &pi, Statistic::MajorIndex).unwrap();
            let ch = stat_polynomial(n, &image, Statistic::Charge).unwrap();
            assert_eq!(maj.coeffs(), ch.coeffs(), "{pi} -> {image} at n = {n}");
        }
    }
}

#[test]
fn class_reports_over_all_subsets() {
    let subsets = subsets_of_s3();
    let n_max = 6;
    let maj = st_wilf_classes(&subsets, Statistic::MajorIndex, n_max).unwrap();
    let ch = st_wilf_classes(&subsets, Statistic::Charge, n_max).unwrap();

    for report in [&maj, &ch] {
        // Partition laws.
        let members: Vec<&PatternSet> = report.classes.iter().flatten().collect();
        let unique: BTreeSet<&PatternSet> = members.iter().copied().collect();
        assert_eq!(members.len(), unique.len());
        assert_eq!(unique.len(), subsets.len());

        // Equal statistic polynomials force equal class sizes.
        for class in &report.classes {
            for n in 0..=n_max {
                let totals: BTreeSet<u64> = class
                    .iter()
                    .map(|s| report.witness_polynomials[s][n].total().unwrap())
                    .collect();
                assert_eq!(totals.len(), 1);
            }
        }
    }

    // Relabelling the major-index classes gives the charge classes.
    let relabelled: BTreeSet<BTreeSet<PatternSet>> = maj
        .classes
        .iter()
        .map(|c| c.iter().map(transport_patterns).collect())
        .collect();
    assert_eq!(relabelled, ch.partition());
}

#[test]
fn involution_on_larger_even_sizes() {
    for n in [3usize, 7, 9, 11, 15] {
        let count = count_two_row(n).unwrap();
        if count % 2 == 1 {
            continue;
        }
        let mut seen = 0u64;
        for w in enumerate_two_row_syt(n) {
            let image = involution_phi(&w).unwrap();
            assert_ne!(image, w);
            assert_eq!(involution_phi(&image).unwrap(), w);
            seen += 1;
        }
        assert_eq!(seen, count);
    }
}

#[test]
fn shape_count_identity() {
    let pi = PatternSet::single("321".parse().unwrap());
    for n in 0..=10 {
        assert_eq!(avoider_count_from_shapes(n).unwrap(), enumerate_avoiders(n, &pi).count() as u64);
    }
    // Catalan numbers by the ballot recurrence C(n+1) = sum C(i) C(n-i).
    let mut catalan = vec![1u64];
    for m in 0..20 {
        let next = (0..=m).map(|i| catalan[i] * catalan[m - i]).sum();
        catalan.push(next);
    }
    for (n, &c) in catalan.iter().enumerate() {
        assert_eq!(avoider_count_from_shapes(n).unwrap(), c, "n = {n}");
    }
}
