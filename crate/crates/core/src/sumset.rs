//! Sumsets in `ℤ/mℤ` and the size criteria built on them.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::arith::{binom, binom_sat, ceil_sqrt};

/// A subset of `ℤ/mℤ` stored as a bit set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModularSubset {
    modulus: u64,
    words: Vec<u64>,
}

impl ModularSubset {
    pub fn empty(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Self { modulus, words: vec![0; modulus.div_ceil(64) as usize] }
    }

    /// Residues are reduced modulo `modulus`.
    pub fn new(modulus: u64, elements: impl IntoIterator<Item = u64>) -> Self {
        let mut out = Self::empty(modulus);
        for a in elements {
            out.insert(a % modulus);
        }
        out
    }

    fn insert(&mut self, a: u64) {
        self.words[(a / 64) as usize] |= 1 << (a % 64);
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn contains(&self, a: u64) -> bool {
        let a = a % self.modulus;
        self.words[(a / 64) as usize] >> (a % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Sorted residues.
    pub fn elements(&self) -> Vec<u64> {
        (0..self.modulus).filter(|&a| self.contains(a)).collect()
    }

    /// `self + c`.
    fn rotated(&self, c: u64) -> Self {
        let m = self.modulus;
        let c = c % m;
        if m <= 64 {
            let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
            let w = self.words[0];
            let r = if c == 0 { w } else { ((w << c) | (w >> (m - c))) & mask };
            return Self { modulus: m, words: vec![r] };
        }
        let mut out = Self::empty(m);
        for a in self.elements() {
            out.insert((a + c) % m);
        }
        out
    }

    fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// `A + B = {a + b}`.
    pub fn sumset(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        let mut out = Self::empty(self.modulus);
        for a in self.elements() {
            out.union_with(&other.rotated(a));
        }
        out
    }
}

impl core::fmt::Debug for ModularSubset {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{:?} mod {}", self.elements(), self.modulus)
    }
}

/// `kA = A + ... + A` (`k` copies).
pub fn k_fold_sumset(a: &ModularSubset, k: u32) -> ModularSubset {
    assert!(k >= 1, "k must be positive");
    let mut acc = a.clone();
    for _ in 1..k {
        acc = acc.sumset(a);
    }
    acc
}

/// `m < binom(e+k-1, k-1) + e binom(e+k-2, k-1)`: then every `A ⊆ ℤ/mℤ` with
/// `|A| = e + 1` has `|kA| < binom(e+k, k)`.
pub fn lemma41_holds(e: u64, m: u64, k: u64) -> bool {
    if k == 0 {
        return false;
    }
    let rhs = binom(e + k - 1, k - 1) + BigUint::from(e) * binom(e + k - 2, k - 1);
    BigUint::from(m) < rhs
}

/// Smallest `k >= 2` with `binom(e+k, k) <= m <= binom(e+k-1, k-1) + e binom(e+k-2, k-1) - 1`.
/// For such `m` the number of relations cannot reach its upper bound.
pub fn not_sharp_region(e: u64, m: u64) -> Option<u64> {
    for k in 2.. {
        if binom_sat(e + k, k) > m {
            return None;
        }
        if lemma41_holds(e, m, k) {
            return Some(k);
        }
    }
    unreachable!()
}

/// `t = ⌈3 + 3√e⌉`.
pub fn asymptotic_t(e: u64) -> u64 {
    3 + ceil_sqrt(9 * e)
}

/// `binom(e+t, t)` with `t = ⌈3 + 3√e⌉`; from there on every `m` lies in the
/// non-sharp region.
pub fn asymptotic_threshold(e: u64) -> BigUint {
    let t = asymptotic_t(e);
    binom(e + t, t)
}

/// Largest `|kA|` over `A ⊆ ℤ/mℤ` with `|A| = size` and `0 ∈ A`.
pub fn max_sumset_size(m: u64, size: usize, k: u32) -> usize {
    let mut best = 0;
    for_each_subset_with_zero(m, size, |a| {
        best = best.max(k_fold_sumset(a, k).len());
    });
    best
}

/// Calls `f` on every `A ⊆ ℤ/mℤ` with `|A| = size` containing 0.
pub fn for_each_subset_with_zero(m: u64, size: usize, mut f: impl FnMut(&ModularSubset)) {
    fn go(m: u64, need: usize, start: u64, cur: &mut Vec<u64>, f: &mut dyn FnMut(&ModularSubset)) {
        if need == 0 {
            f(&ModularSubset::new(m, cur.iter().copied()));
            return;
        }
        for a in start..m {
            if m - a < need as u64 {
                break;
            }
            cur.push(a);
            go(m, need - 1, a + 1, cur, f);
            cur.pop();
        }
    }
    if size == 0 || size as u64 > m {
        return;
    }
    go(m, size - 1, 1, &mut vec![0], &mut f);
}
