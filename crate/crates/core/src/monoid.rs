//! Numerical monoids given by their minimal generators.
//!
//! A [`NumericalMonoid`] stores its Apéry set with respect to the
//! multiplicity, indexed by residue class. Membership, gaps, the Frobenius
//! number and the pseudo-Frobenius numbers are all read off that table.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::MonoidError;

const UNREACHED: u64 = u64::MAX;

/// Cofinite submonoid of the nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalMonoid {
    generators: Vec<u64>,
    /// `apery[i]` is the least element congruent to `i` modulo the multiplicity.
    apery: Vec<u64>,
}

/// The Apéry set with respect to the multiplicity, sorted increasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySet {
    pub elements: Vec<u64>,
}

impl AperySet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: u64) -> bool {
        self.elements.binary_search(&w).is_ok()
    }

    pub fn max(&self) -> u64 {
        *self.elements.last().expect("Apéry set contains 0")
    }
}

/// Relaxes residue distances after adding generator `g` to a monoid of
/// multiplicity `m`. Each cycle of `r -> r + g (mod m)` is walked twice
/// starting from its cheapest node.
fn add_generator(dist: &mut [u64], g: u64) {
    let m = dist.len() as u64;
    let cycles = g.gcd(&m);
    let len = m / cycles;
    for start in 0..cycles {
        let mut best = start;
        let mut r = start;
        for _ in 0..len {
            if dist[r as usize] < dist[best as usize] {
                best = r;
            }
            r = (r + g) % m;
        }
        if dist[best as usize] == UNREACHED {
            continue;
        }
        let mut r = best;
        for _ in 0..len {
            let next = (r + g) % m;
            let cand = dist[r as usize].saturating_add(g);
            if cand < dist[next as usize] {
                dist[next as usize] = cand;
            }
            r = next;
        }
    }
}

impl NumericalMonoid {
    /// Normalizes `raw` to the unique minimal generating set.
    pub fn from_generators(raw: &[u64]) -> Result<Self, MonoidError> {
        if raw.is_empty() {
            return Err(MonoidError::Empty);
        }
        if raw.contains(&0) {
            return Err(MonoidError::ZeroGenerator);
        }
        let g = raw.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(MonoidError::NotCofinite(g));
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];
        let mut dist = vec![UNREACHED; m as usize];
        dist[0] = 0;
        let mut generators = vec![m];
        for &g in &sorted[1..] {
            if dist[(g % m) as usize] <= g {
                continue;
            }
            add_generator(&mut dist, g);
            generators.push(g);
        }
        debug_assert!(dist.iter().all(|&d| d != UNREACHED));
        Ok(Self { generators, apery: dist })
    }

    /// Builds the monoid whose Apéry set (by residue) is `apery`. The table
    /// must satisfy `apery[0] == 0`, `apery[i] ≡ i`, and be closed under the
    /// Apéry order; minimal generators are the multiplicity together with the
    /// Apéry elements that are not a sum of two nonzero Apéry elements.
    pub fn from_apery(apery: Vec<u64>) -> Result<Self, MonoidError> {
        let m = apery.len() as u64;
        if m == 0 {
            return Err(MonoidError::Empty);
        }
        if apery[0] != 0 {
            return Err(MonoidError::InvalidApery("residue 0 must map to 0"));
        }
        for (i, &w) in apery.iter().enumerate() {
            if w % m != i as u64 {
                return Err(MonoidError::InvalidApery("wrong residue class"));
            }
        }
        for i in 1..m as usize {
            for j in i..m as usize {
                let s = apery[i] + apery[j];
                if s < apery[(s % m) as usize] {
                    return Err(MonoidError::InvalidApery("not closed under addition"));
                }
            }
        }
        let mut generators = vec![m];
        let mut minimal: Vec<u64> = (1..m as usize)
            .filter(|&i| {
                let w = apery[i];
                !(1..m as usize).any(|j| {
                    let u = apery[j];
                    u < w && {
                        let rest = w - u;
                        !rest.is_multiple_of(m) && apery[(rest % m) as usize] == rest
                    }
                })
            })
            .map(|i| apery[i])
            .collect();
        minimal.sort_unstable();
        generators.extend(minimal);
        Ok(Self { generators, apery })
    }

    /// Minimal generators `g_0 < g_1 < ... < g_e`.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Embedding dimension `e + 1`.
    pub fn edim(&self) -> usize {
        self.generators.len()
    }

    /// Largest minimal generator.
    pub fn max_generator(&self) -> u64 {
        *self.generators.last().unwrap()
    }

    /// Apéry table indexed by residue modulo the multiplicity.
    pub fn apery_by_residue(&self) -> &[u64] {
        &self.apery
    }

    pub fn apery_set(&self) -> AperySet {
        let mut elements = self.apery.clone();
        elements.sort_unstable();
        AperySet { elements }
    }

    /// Whether `w` lies in the Apéry set.
    pub fn is_apery(&self, w: u64) -> bool {
        self.apery[(w % self.multiplicity()) as usize] == w
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.apery[(n % self.multiplicity()) as usize]
    }

    /// Largest integer outside the monoid, or `None` for the whole of ℕ.
    pub fn frobenius(&self) -> Option<u64> {
        let m = self.multiplicity();
        if m == 1 {
            return None;
        }
        self.apery.iter().max().map(|&w| w - m)
    }

    pub fn gaps(&self) -> Vec<u64> {
        match self.frobenius() {
            None => Vec::new(),
            Some(f) => (1..=f).filter(|&n| !self.contains(n)).collect(),
        }
    }

    /// Nonzero Apéry elements maximal for `w <= w'` iff `w' - w` in the monoid.
    pub fn maximal_apery_elements(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .apery
            .iter()
            .copied()
            .filter(|&w| w != 0)
            .filter(|&w| self.generators[1..].iter().all(|&g| !self.is_apery(w + g)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        let m = self.multiplicity();
        self.maximal_apery_elements().into_iter().map(|w| w - m).collect()
    }

    /// Number of pseudo-Frobenius numbers.
    pub fn monoid_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }
}

impl fmt::Debug for NumericalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Display for NumericalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bit-vector membership over `[0, n]`.
    fn dp_members(gens: &[u64], n: u64) -> Vec<bool> {
        let mut ok = vec![false; n as usize + 1];
        ok[0] = true;
        for v in 1..=n as usize {
            ok[v] = gens.iter().any(|&g| g as usize <= v && ok[v - g as usize]);
        }
        ok
    }

    #[test]
    fn normalization() {
        let m = NumericalMonoid::from_generators(&[10, 13, 15]).unwrap();
        assert_eq!(m.generators(), &[10, 13, 15]);
        let m = NumericalMonoid::from_generators(&[2, 4, 3]).unwrap();
        assert_eq!(m.generators(), &[2, 3]);
        let m = NumericalMonoid::from_generators(&[6, 9, 20, 15]).unwrap();
        assert_eq!(m.generators(), &[6, 9, 20]);
        assert_eq!(NumericalMonoid::from_generators(&[]), Err(MonoidError::Empty));
        assert_eq!(NumericalMonoid::from_generators(&[4, 6]), Err(MonoidError::NotCofinite(2)));
        assert_eq!(NumericalMonoid::from_generators(&[0, 1]), Err(MonoidError::ZeroGenerator));
    }

    #[test]
    fn membership_matches_dp() {
        for gens in [&[10u64, 13, 15][..], &[2, 3], &[4, 5, 6, 7], &[11, 12, 14, 15, 20], &[6, 9, 20]] {
            let m = NumericalMonoid::from_generators(gens).unwrap();
            let dp = dp_members(gens, 200);
            for (n, &expected) in dp.iter().enumerate() {
                assert_eq!(m.contains(n as u64), expected, "{gens:?} at {n}");
            }
        }
        let m = NumericalMonoid::from_generators(&[10, 13, 15]).unwrap();
        assert!(m.contains(28));
        assert!(m.contains(0));
        assert!(!NumericalMonoid::from_generators(&[2, 3]).unwrap().contains(1));
    }

    #[test]
    fn apery_sets() {
        let m = NumericalMonoid::from_generators(&[4, 5, 6, 7]).unwrap();
        assert_eq!(m.apery_set().elements, vec![0, 5, 6, 7]);
        let m = NumericalMonoid::from_generators(&[2, 3]).unwrap();
        assert_eq!(m.apery_set().elements, vec![0, 3]);
        let m = NumericalMonoid::from_generators(&[10, 13, 15]).unwrap();
        let dp = dp_members(&[10, 13, 15], 300);
        let mut expected: Vec<u64> = (0..10)
            .map(|r| (0..300u64).find(|&n| n % 10 == r && dp[n as usize]).unwrap())
            .collect();
        expected.sort_unstable();
        assert_eq!(m.apery_set().elements, expected);
        assert_eq!(m.frobenius(), Some(m.apery_set().max() - 10));
    }

    #[test]
    fn frobenius_gaps_pseudo() {
        let m = NumericalMonoid::from_generators(&[2, 3]).unwrap();
        assert_eq!(m.frobenius(), Some(1));
        assert_eq!(m.gaps(), vec![1]);
        assert_eq!(m.pseudo_frobenius(), vec![1]);
        let m = NumericalMonoid::from_generators(&[4, 5, 6, 7]).unwrap();
        assert_eq!(m.gaps(), vec![1, 2, 3]);
        assert_eq!(m.pseudo_frobenius(), vec![1, 2, 3]);
        let m = NumericalMonoid::from_generators(&[11, 12, 14, 15, 20]).unwrap();
        assert_eq!(m.monoid_type(), 6);
        let m = NumericalMonoid::from_generators(&[10, 13, 15]).unwrap();
        assert_eq!(*m.gaps().last().unwrap(), m.frobenius().unwrap());
    }

    #[test]
    fn whole_naturals() {
        let m = NumericalMonoid::from_generators(&[1, 5]).unwrap();
        assert_eq!(m.generators(), &[1]);
        assert_eq!(m.frobenius(), None);
        assert!(m.gaps().is_empty());
        assert!(m.pseudo_frobenius().is_empty());
    }

    #[test]
    fn apery_round_trip() {
        let m = NumericalMonoid::from_generators(&[11, 12, 14, 15, 20]).unwrap();
        let back = NumericalMonoid::from_apery(m.apery_by_residue().to_vec()).unwrap();
        assert_eq!(back, m);
        assert!(NumericalMonoid::from_apery(vec![0, 1, 5]).is_err());
    }
}
