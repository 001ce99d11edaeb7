use std::collections::BTreeSet;

use numon_core::arith::binom_u64;
use numon_core::sumset::{
    asymptotic_threshold, for_each_subset_with_zero, k_fold_sumset, lemma41_holds, max_sumset_size,
    not_sharp_region, ModularSubset,
};
use proptest::prelude::*;

fn naive_k_fold(a: &[u64], m: u64, k: u32) -> BTreeSet<u64> {
    let mut acc: BTreeSet<u64> = BTreeSet::from([0]);
    for _ in 0..k {
        acc = acc.iter().flat_map(|&s| a.iter().map(move |&x| (s + x) % m)).collect();
    }
    acc
}

/// Number of multisets of size `k` from `a` with distinct sums equals the count
/// of all multisets exactly when every sum has one representation.
fn unique_representation(a: &[u64], m: u64, k: u32) -> bool {
    fn go(a: &[u64], m: u64, k: u32, start: usize, sum: u64, seen: &mut BTreeSet<u64>) -> bool {
        if k == 0 {
            return seen.insert(sum);
        }
        (start..a.len()).all(|i| go(a, m, k - 1, i, (sum + a[i]) % m, seen))
    }
    go(a, m, k, 0, 0, &mut BTreeSet::new())
}

proptest! {
    #[test]
    fn sumset_matches_naive(m in 1u64..150, raw in prop::collection::vec(0u64..1000, 1..8), k in 1u32..5) {
        let elems: Vec<u64> = raw.iter().map(|x| x % m).collect();
        let a = ModularSubset::new(m, elems.iter().copied());
        let fast: BTreeSet<u64> = k_fold_sumset(&a, k).elements().into_iter().collect();
        prop_assert_eq!(fast, naive_k_fold(&a.elements(), m, k));
    }

    #[test]
    fn sumset_size_is_bounded(m in 2u64..200, raw in prop::collection::vec(0u64..1000, 1..7), k in 1u32..4) {
        let a = ModularSubset::new(m, raw.iter().map(|x| x % m));
        let n = a.len() as u64;
        let size = k_fold_sumset(&a, k).len() as u64;
        prop_assert!(size <= m.min(binom_u64(n + k as u64 - 1, k as u64).unwrap()));
    }

    #[test]
    fn lemma_region_is_consistent(e in 1u64..12, m in 2u64..3000) {
        if let Some(k) = not_sharp_region(e, m) {
            prop_assert!(k >= 2);
            prop_assert!(binom_u64(e + k, k).unwrap() <= m);
            prop_assert!(lemma41_holds(e, m, k));
        }
    }
}

#[test]
fn maximal_size_iff_unique_representation() {
    for m in 2..=12u64 {
        for size in 2..=4usize {
            for_each_subset_with_zero(m, size, |a| {
                let elems = a.elements();
                let full = binom_u64(size as u64 + 1, 2).unwrap() as usize;
                assert_eq!(k_fold_sumset(a, 2).len() == full, unique_representation(&elems, m, 2), "{elems:?} mod {m}");
            });
        }
    }
}

#[test]
fn four_elements_never_reach_ten_below_thirteen() {
    for m in 4..=12 {
        assert!(max_sumset_size(m, 4, 2) < 10, "m = {m}");
    }
    assert_eq!(max_sumset_size(13, 4, 2), 10);
}

#[test]
fn lemma_predicts_exhaustive_maxima() {
    for e in 2..=3u64 {
        for k in 2..=3u32 {
            let full = binom_u64(e + k as u64, k as u64).unwrap() as usize;
            for m in (e + 2)..=13 {
                if lemma41_holds(e, m, k as u64) {
                    assert!(max_sumset_size(m, e as usize + 1, k) < full, "e={e} k={k} m={m}");
                }
            }
        }
    }
}

#[test]
fn threshold_is_in_region() {
    for e in 3..=6u64 {
        let start: u64 = asymptotic_threshold(e).try_into().unwrap();
        for m in start..start + 2000 {
            assert!(not_sharp_region(e, m).is_some(), "e={e} m={m}");
        }
    }
}
