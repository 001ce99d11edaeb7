use std::collections::BTreeMap;

use num_bigint::BigUint;
use numon_core::arith::cem;
use numon_core::presentation::{
    candidate_bound, factorizations, has_unique_apery_factorizations, kernel_congruence_oracle, rho,
    rho_unique_factorization, rho_with_bound, Factorization,
};
use numon_core::NumericalMonoid;
use proptest::prelude::*;

fn members(gens: &[u64], n: u64) -> Vec<bool> {
    let mut ok = vec![false; n as usize + 1];
    ok[0] = true;
    for v in 1..=n as usize {
        ok[v] = gens.iter().any(|&g| g as usize <= v && ok[v - g as usize]);
    }
    ok
}

/// Generator lists with gcd 1: the smallest element is coprime to one other.
fn monoid_gens(max_mult: u64) -> impl Strategy<Value = Vec<u64>> {
    (2..=max_mult, prop::collection::vec(1u64..40, 1..6)).prop_map(|(m, offsets)| {
        let mut gens = vec![m];
        gens.extend(offsets.iter().map(|o| m + o));
        if gens.iter().fold(0, |a, &b| num_integer::gcd(a, b)) != 1 {
            gens.push(m + 1);
        }
        gens
    })
}

/// Components of the factorization graph of `n`, edges joining factorizations
/// with a common generator, found by breadth-first search.
fn components(facts: &[Factorization]) -> usize {
    let mut seen = vec![false; facts.len()];
    let mut count = 0;
    for s in 0..facts.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut queue = vec![s];
        seen[s] = true;
        while let Some(a) = queue.pop() {
            for b in 0..facts.len() {
                if !seen[b] && facts[a].shares_support(&facts[b]) {
                    seen[b] = true;
                    queue.push(b);
                }
            }
        }
    }
    count
}

fn rho_oracle(g: &NumericalMonoid, bound: u64) -> usize {
    (1..=bound)
        .filter(|&n| g.contains(n))
        .map(|n| {
            let facts = factorizations(g, n);
            if facts.is_empty() {
                0
            } else {
                components(&facts) - 1
            }
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalization_is_idempotent(gens in monoid_gens(15)) {
        let g = NumericalMonoid::from_generators(&gens).unwrap();
        let again = NumericalMonoid::from_generators(g.generators()).unwrap();
        prop_assert_eq!(&again, &g);
        let back = NumericalMonoid::from_apery(g.apery_by_residue().to_vec()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn membership_and_apery_match_dp(gens in monoid_gens(15)) {
        let g = NumericalMonoid::from_generators(&gens).unwrap();
        let top = g.apery_set().max() + 2 * g.multiplicity();
        let dp = members(&gens, top);
        for n in 0..=top {
            prop_assert_eq!(g.contains(n), dp[n as usize]);
        }
        let m = g.multiplicity();
        for w in g.apery_set().elements {
            prop_assert!(dp[w as usize]);
            prop_assert!(w < m || !dp[(w - m) as usize]);
        }
        let gaps = g.gaps();
        prop_assert_eq!(gaps.last().copied(), g.frobenius());
        prop_assert_eq!(gaps.len(), (1..=top).filter(|&n| !dp[n as usize]).count());
    }

    #[test]
    fn pseudo_frobenius_by_definition(gens in monoid_gens(15)) {
        let g = NumericalMonoid::from_generators(&gens).unwrap();
        let f = g.frobenius().unwrap_or(0);
        let expected: Vec<u64> = g
            .gaps()
            .into_iter()
            .filter(|&p| (1..=f + 1).filter(|&s| g.contains(s)).all(|s| g.contains(p + s)))
            .collect();
        prop_assert_eq!(g.pseudo_frobenius(), expected);
        prop_assert!((g.monoid_type() as u64) < g.multiplicity());
    }

    #[test]
    fn rho_matches_graph_oracle(gens in monoid_gens(9)) {
        let g = NumericalMonoid::from_generators(&gens).unwrap();
        let bound = candidate_bound(&g);
        prop_assert_eq!(rho(&g).rho, rho_oracle(&g, bound));
    }

    #[test]
    fn rho_bounds(gens in monoid_gens(12)) {
        let g = NumericalMonoid::from_generators(&gens).unwrap();
        let r = rho(&g).rho;
        let edim = g.edim();
        prop_assert!(r + 1 >= edim);
        if edim <= 3 {
            prop_assert!(r <= 3);
        }
        let (e, m) = (edim as u64 - 1, g.multiplicity());
        if e > 1 && e < m {
            prop_assert!(BigUint::from(r) <= cem(e, m).unwrap());
        }
    }

    #[test]
    fn bound_doubling_changes_nothing(gens in monoid_gens(8)) {
        let g = NumericalMonoid::from_generators(&gens).unwrap();
        prop_assert_eq!(rho(&g).rho, rho_with_bound(&g, 2 * candidate_bound(&g)).rho);
    }

    #[test]
    fn both_routes_agree_when_applicable(gens in monoid_gens(12)) {
        let g = NumericalMonoid::from_generators(&gens).unwrap();
        if has_unique_apery_factorizations(&g) {
            prop_assert_eq!(rho_unique_factorization(&g).unwrap().rho, rho(&g).rho);
        } else {
            prop_assert!(rho_unique_factorization(&g).is_err());
        }
    }
}

#[test]
fn kernel_pairs_are_factorization_pairs() {
    let g = NumericalMonoid::from_generators(&[10, 13, 15]).unwrap();
    let pairs = kernel_congruence_oracle(&g, 70);
    let mut by_value: BTreeMap<u64, usize> = BTreeMap::new();
    for (a, b) in &pairs {
        assert_eq!(a.value, b.value);
        assert!(a.coords < b.coords);
        *by_value.entry(a.value).or_insert(0) += 1;
    }
    for (&n, &count) in &by_value {
        let k = factorizations(&g, n).len();
        assert_eq!(count, k * (k - 1) / 2);
    }
    assert_eq!(by_value.keys().next(), Some(&30));
}

#[test]
fn worked_presentation_example() {
    let g = NumericalMonoid::from_generators(&[10, 13, 15]).unwrap();
    let report = rho(&g);
    assert_eq!(report.rho, 2);
    let elements: Vec<u64> = report.betti_elements.iter().map(|b| b.value).collect();
    assert_eq!(elements, vec![30, 65]);
    assert_eq!(factorizations(&g, 30).len(), 2);
}

#[test]
fn type_example_one_below_bound() {
    let g = NumericalMonoid::from_generators(&[11, 12, 14, 15, 20]).unwrap();
    assert_eq!(g.monoid_type(), 6);
    assert_eq!(numon_core::arith::dem(4, 11).unwrap(), BigUint::from(7u32));
}
