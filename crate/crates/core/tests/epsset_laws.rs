mod common;

use colombeau::IndexSet;
use common::{index_set, raw_set};
use proptest::prelude::*;

fn raw_contains((m, t, n, ins, outs): &common::RawSet, k: u64) -> bool {
    if k < *n && ins.contains(&k) {
        return true;
    }
    if k < *n && outs.contains(&k) {
        return false;
    }
    t.contains(&(k % m))
}

/// Indices far enough out to see every period twice past every threshold.
fn horizon(sets: &[&IndexSet]) -> u64 {
    sets.iter().map(|s| 8 * s.modulus() * s.threshold().max(1)).max().unwrap().max(64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn boolean_algebra(a in index_set(), b in index_set(), c in index_set()) {
        prop_assert_eq!(a.union(&b).complement(), a.complement().intersect(&b.complement()));
        prop_assert_eq!(a.intersect(&b).complement(), a.complement().union(&b.complement()));
        prop_assert_eq!(a.union(&a), a.clone());
        prop_assert_eq!(a.intersect(&a), a.clone());
        prop_assert_eq!(a.union(&a.intersect(&b)), a.clone());
        prop_assert_eq!(a.intersect(&a.union(&b)), a.clone());
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.intersect(&b.union(&c)), a.intersect(&b).union(&a.intersect(&c)));
        prop_assert_eq!(a.union(&b.intersect(&c)), a.union(&b).intersect(&a.union(&c)));
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert!(a.union(&a.complement()).is_full());
        prop_assert!(a.intersect(&a.complement()).is_empty());
        prop_assert_eq!(a.difference(&b), a.intersect(&b.complement()));
    }

    #[test]
    fn pointwise_operations(a in index_set(), b in index_set()) {
        for k in 0..horizon(&[&a, &b]) {
            prop_assert_eq!(a.union(&b).contains(k), a.contains(k) || b.contains(k));
            prop_assert_eq!(a.intersect(&b).contains(k), a.contains(k) && b.contains(k));
            prop_assert_eq!(a.complement().contains(k), !a.contains(k));
        }
        prop_assert_eq!(a.is_subset(&b), a.intersect(&b) == a);
    }

    #[test]
    fn canonical_form_is_a_fixed_point(raw in raw_set()) {
        let (m, t, n, i, o) = raw;
        let s = IndexSet::make_periodic(m, t, n, i, o).unwrap();
        let again = IndexSet::make_periodic(
            s.modulus(),
            s.residues().iter().copied(),
            s.threshold(),
            s.exceptions_in().iter().copied(),
            s.exceptions_out().iter().copied(),
        )
        .unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(s.to_string().parse::<IndexSet>().unwrap(), s);
    }

    #[test]
    fn membership_matches_raw_data(raw in raw_set()) {
        let (m, t, n, i, o) = raw.clone();
        let s = IndexSet::make_periodic(m, t, n, i, o).unwrap();
        for k in 0..(8 * raw.0 * raw.2).max(64) {
            prop_assert_eq!(s.contains(k), raw_contains(&raw, k), "index {}", k);
        }
    }

    #[test]
    fn sharpness(a in index_set()) {
        prop_assert_eq!(a.is_sharp(), a.complement().is_sharp());
        if a.is_sharp() {
            prop_assert!(!a.is_finite() && !a.is_cofinite());
        }
        // oracle: both the set and its complement meet the last full period
        let m = a.modulus();
        let start = a.threshold() + 8 * m;
        let hits = (start..start + m).filter(|&k| a.contains(k)).count() as u64;
        prop_assert_eq!(a.is_sharp(), hits > 0 && hits < m);
        prop_assert_eq!(a.is_finite(), hits == 0);
        prop_assert_eq!(a.is_cofinite(), hits == m);
    }
}
