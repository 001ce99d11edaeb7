//! Bounded exhaustive search over numerical monoids of fixed multiplicity.
//!
//! A monoid of multiplicity `m` is determined by its Kunz coordinates
//! `k_1, ..., k_{m-1}`: the Apéry element in residue class `i` is
//! `k_i m + i`. Searching all vectors with `k_i <= K` visits every monoid
//! whose Frobenius number is below `K m`. Maxima found this way are lower
//! bounds for the true maxima over all monoids.

use alloc::vec::Vec;

use crate::monoid::NumericalMonoid;
use crate::presentation::rho;

/// Kunz coordinates of a monoid with multiplicity `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KunzVector {
    pub modulus: u64,
    pub coords: Vec<u64>,
}

impl KunzVector {
    pub fn from_monoid(monoid: &NumericalMonoid) -> Self {
        let m = monoid.multiplicity();
        let coords = monoid.apery_by_residue()[1..].iter().map(|&w| w / m).collect();
        Self { modulus: m, coords }
    }

    /// `k_i + k_j >= k_{i+j}` for `i + j < m` and `k_i + k_j + 1 >= k_{i+j-m}`
    /// for `i + j > m`, with every `k_i >= 1`.
    pub fn is_valid(&self) -> bool {
        let m = self.modulus as usize;
        if self.coords.len() + 1 != m || self.coords.contains(&0) {
            return false;
        }
        let k = |i: usize| self.coords[i - 1];
        for i in 1..m {
            for j in i..m {
                let ok = match (i + j).cmp(&m) {
                    core::cmp::Ordering::Less => k(i) + k(j) >= k(i + j),
                    core::cmp::Ordering::Greater => k(i) + k(j) + 1 >= k(i + j - m),
                    core::cmp::Ordering::Equal => true,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn apery(&self) -> Vec<u64> {
        let m = self.modulus;
        core::iter::once(0)
            .chain(self.coords.iter().enumerate().map(|(i, &c)| c * m + i as u64 + 1))
            .collect()
    }

    pub fn to_monoid(&self) -> NumericalMonoid {
        NumericalMonoid::from_apery(self.apery()).expect("valid Kunz vector")
    }
}

/// Whether assigning `coords[n-1]` (the last entry) keeps every constraint
/// among indices `<= n` satisfied.
fn last_is_consistent(m: usize, coords: &[u64]) -> bool {
    let n = coords.len();
    let k = |i: usize| coords[i - 1];
    for i in 1..=n / 2 {
        if k(i) + k(n - i) < k(n) {
            return false;
        }
    }
    for i in 1..=n {
        if i + n > m && k(i) + k(n) + 1 < k(i + n - m) {
            return false;
        }
    }
    true
}

fn extend(m: usize, bound: u64, coords: &mut Vec<u64>, f: &mut dyn FnMut(&KunzVector)) {
    if coords.len() + 1 == m {
        f(&KunzVector { modulus: m as u64, coords: coords.clone() });
        return;
    }
    for c in 1..=bound {
        coords.push(c);
        if last_is_consistent(m, coords) {
            extend(m, bound, coords, f);
        }
        coords.pop();
    }
}

/// Calls `f` on every valid Kunz vector with entries `<= bound` that starts
/// with `prefix`, in lexicographic order.
pub fn for_each_kunz_vector(m: u64, bound: u64, prefix: &[u64], mut f: impl FnMut(&KunzVector)) {
    assert!(m >= 2, "multiplicity must be at least 2");
    let m = m as usize;
    let mut coords = Vec::with_capacity(m - 1);
    for &c in prefix {
        if c == 0 || c > bound || coords.len() + 1 == m {
            return;
        }
        coords.push(c);
        if !last_is_consistent(m, &coords) {
            return;
        }
    }
    extend(m, bound, &mut coords, &mut f);
}

/// All monoids of multiplicity `m` with Kunz coordinates `<= bound`.
pub fn enumerate_monoids(m: u64, bound: u64) -> Vec<NumericalMonoid> {
    let mut out = Vec::new();
    for_each_kunz_vector(m, bound, &[], |k| out.push(k.to_monoid()));
    out
}

/// Valid prefixes of length `depth` (shorter when `m - 1 < depth`); each is
/// an independent work unit.
pub fn work_units(m: u64, bound: u64, depth: usize) -> Vec<Vec<u64>> {
    let m = m as usize;
    let depth = depth.min(m - 1);
    let mut out = Vec::new();
    fn go(m: usize, bound: u64, depth: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        for c in 1..=bound {
            cur.push(c);
            if last_is_consistent(m, cur) {
                go(m, bound, depth, cur, out);
            }
            cur.pop();
        }
    }
    go(m, bound, depth, &mut Vec::new(), &mut out);
    out
}

/// A maximum value together with its lex-least Kunz witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Best {
    pub value: usize,
    pub witness: KunzVector,
}

fn better(candidate: &Best, current: &Option<Best>) -> bool {
    match current {
        None => true,
        Some(cur) => candidate.value > cur.value || (candidate.value == cur.value && candidate.witness < cur.witness),
    }
}

fn merge_best(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (None, b) => b,
        (a, None) => a,
        (Some(a), Some(b)) => Some(if better(&b, &Some(a.clone())) { b } else { a }),
    }
}

/// Outcome of scanning one work unit, or a merge of several.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnitResult {
    pub scanned: u64,
    pub matching: u64,
    pub best_rho: Option<Best>,
    pub best_type: Option<Best>,
}

impl UnitResult {
    /// Associative and commutative.
    pub fn merge(self, other: UnitResult) -> UnitResult {
        UnitResult {
            scanned: self.scanned + other.scanned,
            matching: self.matching + other.matching,
            best_rho: merge_best(self.best_rho, other.best_rho),
            best_type: merge_best(self.best_type, other.best_type),
        }
    }
}

/// Scans the vectors under `prefix`, keeping monoids of embedding dimension `e + 1`.
pub fn scan_unit(e: u64, m: u64, bound: u64, prefix: &[u64]) -> UnitResult {
    let mut out = UnitResult::default();
    for_each_kunz_vector(m, bound, prefix, |k| {
        out.scanned += 1;
        let monoid = k.to_monoid();
        if monoid.edim() as u64 != e + 1 {
            return;
        }
        out.matching += 1;
        let r = Best { value: rho(&monoid).rho, witness: k.clone() };
        if better(&r, &out.best_rho) {
            out.best_rho = Some(r);
        }
        let t = Best { value: monoid.monoid_type(), witness: k.clone() };
        if better(&t, &out.best_type) {
            out.best_type = Some(t);
        }
    });
    out
}

/// Maxima of the number of relations and of the type over the box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub e: u64,
    pub m: u64,
    pub kunz_bound: u64,
    pub best_rho: usize,
    pub rho_witness: Option<NumericalMonoid>,
    pub best_type: usize,
    pub type_witness: Option<NumericalMonoid>,
    pub scanned: u64,
    pub matching: u64,
    /// Every vector in the box was visited.
    pub exhausted: bool,
}

impl SearchResult {
    pub fn from_units(e: u64, m: u64, kunz_bound: u64, merged: UnitResult, exhausted: bool) -> Self {
        SearchResult {
            e,
            m,
            kunz_bound,
            best_rho: merged.best_rho.as_ref().map_or(0, |b| b.value),
            rho_witness: merged.best_rho.map(|b| b.witness.to_monoid()),
            best_type: merged.best_type.as_ref().map_or(0, |b| b.value),
            type_witness: merged.best_type.map(|b| b.witness.to_monoid()),
            scanned: merged.scanned,
            matching: merged.matching,
            exhausted,
        }
    }
}

/// Default prefix length for work units.
pub const DEFAULT_UNIT_DEPTH: usize = 2;

/// Sequential exhaustive search of the box `k_i <= bound`.
pub fn max_invariants(e: u64, m: u64, bound: u64) -> SearchResult {
    assert!(e < m && m >= 2, "need e < m");
    let merged = work_units(m, bound, DEFAULT_UNIT_DEPTH)
        .iter()
        .map(|p| scan_unit(e, m, bound, p))
        .fold(UnitResult::default(), UnitResult::merge);
    SearchResult::from_units(e, m, bound, merged, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_two() {
        let all = enumerate_monoids(2, 4);
        let gens: Vec<Vec<u64>> = all.iter().map(|g| g.generators().to_vec()).collect();
        assert_eq!(gens, alloc::vec![alloc::vec![2, 3], alloc::vec![2, 5], alloc::vec![2, 7], alloc::vec![2, 9]]);
    }

    #[test]
    fn round_trip() {
        for g in enumerate_monoids(6, 3) {
            let k = KunzVector::from_monoid(&g);
            assert!(k.is_valid());
            assert_eq!(k.to_monoid(), g);
            assert_eq!(g.multiplicity(), 6);
        }
        let all = enumerate_monoids(4, 1);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].generators(), &[4, 5, 6, 7]);
    }

    #[test]
    fn units_partition_the_box() {
        let total = enumerate_monoids(7, 3).len() as u64;
        let units = work_units(7, 3, 2);
        let sum: u64 = units.iter().map(|p| scan_unit(0, 7, 3, p).scanned).sum();
        assert_eq!(sum, total);
    }

    #[test]
    fn small_maxima() {
        let r = max_invariants(3, 4, 2);
        assert_eq!(r.best_rho, 6);
        assert_eq!(r.best_type, 3);
    }
}
