//! Exact binomial and Macaulay-expansion arithmetic.
//!
//! Every quantity that can grow past 64 bits (binomial coefficients, the
//! upper Macaulay shift, the bounds `cem` and `dem`) is returned as a
//! [`BigUint`]. Inputs are `u64`: the expansion of `n` in degree `d >= 1`
//! never uses a top index larger than `n` itself.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::ArithError;

/// Binomial coefficient `n choose k`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient in machine words; `None` on overflow.
pub fn binom_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `binom_u64` saturating at `u64::MAX`; useful for comparisons.
pub fn binom_sat(n: u64, k: u64) -> u64 {
    binom_u64(n, k).unwrap_or(u64::MAX)
}

/// One summand `binom(top, bottom)` of a Macaulay expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MacaulayTerm {
    pub top: u64,
    pub bottom: u32,
}

/// The `d`-th Macaulay expansion `n = binom(n_d, d) + binom(n_{d-1}, d-1) + ... + binom(n_j, j)`
/// with `n_d > n_{d-1} > ... > n_j >= j >= 1`.
///
/// The expansion of zero is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayExpansion {
    pub n: u64,
    pub d: u32,
    pub terms: Vec<MacaulayTerm>,
}

impl MacaulayExpansion {
    /// Sum of the terms; equals `n`.
    pub fn value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binom(t.top, t.bottom as u64))
            .sum()
    }

    /// `sum binom(top + 1, bottom + 1)`.
    pub fn upper(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binom(t.top + 1, t.bottom as u64 + 1))
            .sum()
    }

    /// `sum binom(top - 1, bottom)`.
    pub fn lower(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| binom_u64(t.top - 1, t.bottom as u64).expect("bounded by n"))
            .sum()
    }

    /// Checks the defining chain `n_d > ... > n_j >= j >= 1` over consecutive bottoms.
    pub fn is_well_formed(&self) -> bool {
        if self.terms.is_empty() {
            return self.n == 0;
        }
        let mut expected_bottom = self.d;
        let mut prev_top = u64::MAX;
        for t in &self.terms {
            if t.bottom != expected_bottom || t.bottom == 0 {
                return false;
            }
            if t.top >= prev_top || t.top < t.bottom as u64 {
                return false;
            }
            prev_top = t.top;
            expected_bottom -= 1;
        }
        self.value() == BigUint::from(self.n)
    }
}

/// Largest `t >= d` with `binom(t, d) <= n`, for `n >= 1`.
fn greedy_top(n: u64, d: u32) -> u64 {
    let d64 = d as u64;
    if d == 1 {
        return n;
    }
    let fits = |t: u64| binom_u64(t, d64).is_some_and(|b| b <= n);
    let mut lo = d64;
    let mut step = 1u64;
    let mut hi = loop {
        let probe = lo.saturating_add(step);
        if !fits(probe) {
            break probe;
        }
        lo = probe;
        step = step.saturating_mul(2);
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy Macaulay expansion of `n` in degree `d`.
///
/// # Panics
/// If `d == 0`.
pub fn macaulay_expansion(n: u64, d: u32) -> MacaulayExpansion {
    assert!(d >= 1, "Macaulay expansion degree must be positive");
    let mut terms = Vec::new();
    let mut rest = n;
    let mut bottom = d;
    while rest > 0 {
        debug_assert!(bottom >= 1);
        let top = greedy_top(rest, bottom);
        rest -= binom_u64(top, bottom as u64).expect("fits by construction");
        terms.push(MacaulayTerm { top, bottom });
        bottom -= 1;
    }
    MacaulayExpansion { n, d, terms }
}

/// `n^<d>`; zero for `n = 0`.
pub fn upper_shift(n: u64, d: u32) -> BigUint {
    macaulay_expansion(n, d).upper()
}

/// `n_<d>`; zero for `n = 0`.
pub fn lower_shift(n: u64, d: u32) -> u64 {
    macaulay_expansion(n, d).lower()
}

/// The pair `(r, s)` with `binom(e+r-1, r-1) <= m < binom(e+r, r)` and
/// `s = m - binom(e+r-1, r-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RsPair {
    pub r: u32,
    pub s: u64,
}

/// `(r, s)` for any `e >= 1`, `m >= 1`. This is the degree data of the very
/// compressed lex ideal of colength `m` in `e` variables.
pub(crate) fn rs_split(e: u64, m: u64) -> RsPair {
    debug_assert!(e >= 1 && m >= 1);
    let mut r: u32 = 1;
    loop {
        let upper = binom_sat(e + r as u64, r as u64);
        if m < upper {
            let lower = binom_sat(e + r as u64 - 1, r as u64 - 1);
            return RsPair { r, s: m - lower };
        }
        r += 1;
    }
}

/// `(r, s)` for `1 < e < m`.
pub fn rs_decompose(e: u64, m: u64) -> Result<RsPair, ArithError> {
    if e <= 1 || m <= e {
        return Err(ArithError::InvalidRange { e, m });
    }
    Ok(rs_split(e, m))
}

/// Upper bound for the number of minimal relations of a numerical monoid with
/// embedding dimension `e + 1` and multiplicity `m`.
pub fn cem(e: u64, m: u64) -> Result<BigUint, ArithError> {
    let RsPair { r, s } = rs_decompose(e, m)?;
    Ok(binom(e + r as u64 - 1, r as u64) + upper_shift(s, r) - BigUint::from(s))
}

/// Upper bound for the type of a numerical monoid with embedding dimension
/// `e + 1` and multiplicity `m`.
pub fn dem(e: u64, m: u64) -> Result<BigUint, ArithError> {
    let RsPair { r, s } = rs_decompose(e, m)?;
    Ok(binom(e + r as u64 - 2, r as u64 - 1) + BigUint::from(lower_shift(s, r)))
}

/// Ceiling of the square root.
pub fn ceil_sqrt(n: u64) -> u64 {
    let s = num_integer::Roots::sqrt(&n);
    if s * s == n {
        s
    } else {
        s + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn binom_basics() {
        assert_eq!(binom(5, 2), big(10));
        assert_eq!(binom(17, 0), big(1));
        assert_eq!(binom(0, 0), big(1));
        assert_eq!(binom(4, 6), big(0));
        assert_eq!(binom_u64(4, 6), Some(0));
        assert_eq!(binom_u64(68, 34), None);
        assert_eq!(binom_u64(67, 33), Some(14226520737620288370));
        assert_eq!(binom(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn expansions_from_worked_examples() {
        let ex = macaulay_expansion(5, 2);
        assert_eq!(
            ex.terms,
            vec![MacaulayTerm { top: 3, bottom: 2 }, MacaulayTerm { top: 2, bottom: 1 }]
        );
        assert!(macaulay_expansion(0, 4).terms.is_empty());
        assert_eq!(macaulay_expansion(10, 3).terms, vec![MacaulayTerm { top: 5, bottom: 3 }]);
    }

    #[test]
    fn shifts() {
        assert_eq!(upper_shift(5, 2), big(7));
        assert_eq!(upper_shift(3, 2), big(4));
        assert_eq!(upper_shift(1, 2), big(1));
        assert_eq!(upper_shift(0, 2), big(0));
        assert_eq!(lower_shift(6, 2), 3);
        assert_eq!(lower_shift(0, 2), 0);
        for r in 1..10 {
            assert_eq!(lower_shift(1, r), 0);
        }
    }

    #[test]
    fn rs_pairs() {
        for e in 3..20 {
            for delta in 1..=6 {
                assert_eq!(rs_decompose(e, e + delta).unwrap(), RsPair { r: 2, s: delta - 1 });
            }
        }
        assert_eq!(rs_decompose(3, 10).unwrap(), RsPair { r: 3, s: 0 });
        assert_eq!(rs_decompose(4, 11).unwrap(), RsPair { r: 2, s: 6 });
        assert!(rs_decompose(1, 5).is_err());
        assert!(rs_decompose(4, 4).is_err());
    }

    #[test]
    fn bounds() {
        for e in 3..30u64 {
            assert_eq!(cem(e, e + 6).unwrap(), binom(e + 1, 2) + big(2));
            assert_eq!(dem(e, e + 1).unwrap(), big(e));
            assert_eq!(dem(e, e + 2).unwrap(), big(e));
        }
        assert_eq!(cem(3, 10).unwrap(), big(10));
        assert_eq!(cem(4, 11).unwrap(), big(14));
        assert_eq!(dem(4, 11).unwrap(), big(7));
        assert!(cem(2, 2).is_err());
    }

    #[test]
    fn ceil_sqrt_edges() {
        assert_eq!(ceil_sqrt(0), 0);
        assert_eq!(ceil_sqrt(27), 6);
        assert_eq!(ceil_sqrt(36), 6);
        assert_eq!(ceil_sqrt(37), 7);
    }
}
