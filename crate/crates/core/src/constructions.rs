//! Monoids with the largest possible number of minimal relations for their
//! multiplicity and embedding dimension.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::arith::{cem, dem};
use crate::error::ConstructionError;
use crate::monoid::NumericalMonoid;
use crate::presentation::{has_unique_apery_factorizations, rho, rho_unique_factorization};

/// `δ - 1 = binom(t, 2) - q` with `0 <= q <= t - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub delta: u64,
    pub t: u32,
    pub q: u32,
}

/// The unique `(t, q)` for `δ >= 2`; `δ = 1` maps to `(1, 0)` by convention.
pub fn tq_decompose(delta: u64) -> FamilyParams {
    assert!(delta >= 1, "delta must be positive");
    if delta == 1 {
        return FamilyParams { delta, t: 1, q: 0 };
    }
    let mut t: u64 = 2;
    while t * (t - 1) / 2 < delta - 1 {
        t += 1;
    }
    let q = t * (t - 1) / 2 - (delta - 1);
    FamilyParams { delta, t: t as u32, q: q as u32 }
}

fn expect_edim(monoid: NumericalMonoid, e: u64) -> Result<NumericalMonoid, ConstructionError> {
    if monoid.edim() as u64 != e + 1 {
        return Err(ConstructionError::WrongEmbeddingDimension { expected: e as usize + 1, found: monoid.edim() });
    }
    Ok(monoid)
}

/// `{0} ∪ {m + 2^i - 1 : i < t} ∪ [m + 2^{t-1} + 2^{t-q-1} - 1, ∞)` for
/// `δ = m - e >= 2` and `m >= 2^t`.
pub fn sharp_family_large_m(e: u64, m: u64) -> Result<NumericalMonoid, ConstructionError> {
    if m <= e + 1 {
        return Err(ConstructionError::DeltaTooSmall(m.saturating_sub(e)));
    }
    let FamilyParams { t, q, .. } = tq_decompose(m - e);
    let threshold = 1u64.checked_shl(t).filter(|&p| p <= m);
    if threshold.is_none() {
        return Err(ConstructionError::BelowThreshold { m, threshold: 1u64.checked_shl(t).unwrap_or(u64::MAX) });
    }
    let h = m + (1 << (t - 1)) + (1 << (t - q - 1)) - 1;
    let mut gens: Vec<u64> = (0..t).map(|i| m + (1 << i) - 1).collect();
    gens.extend(h..h + m);
    expect_edim(NumericalMonoid::from_generators(&gens)?, e)
}

/// Largest Apéry element of the large-`m` family, `2m + 2^{t-1} + 2^{t-q-1} - 2`.
pub fn large_m_max_apery(e: u64, m: u64) -> u64 {
    let FamilyParams { t, q, .. } = tq_decompose(m - e);
    2 * m + (1 << (t - 1)) + (1 << (t - q - 1)) - 2
}

/// The family `Γ_{e,e+δ}` for `1 <= δ <= 6`, `e >= 3`.
pub fn sharp_family_small_delta(e: u64, delta: u64) -> Result<NumericalMonoid, ConstructionError> {
    if !(1..=6).contains(&delta) {
        return Err(ConstructionError::DeltaOutOfRange(delta));
    }
    if e < 3 {
        return Err(ConstructionError::EmbeddingTooSmall(e));
    }
    let run = |lo: u64, hi: u64| lo..=hi;
    let gens: Vec<u64> = match delta {
        1 => run(e + 1, 2 * e + 1).collect(),
        2 => [e + 2, e + 3].into_iter().chain(run(e + 5, 2 * e + 3)).collect(),
        3 => [e + 3, e + 4, e + 6, e + 7].into_iter().chain(run(e + 9, 2 * e + 5)).collect(),
        4 => [e + 4, e + 5, e + 7, 2 * e + 13].into_iter().chain(run(2 * e + 15, 3 * e + 11)).collect(),
        5 => [e + 5, e + 6, 2 * e + 8, 3 * e + 12].into_iter().chain(run(3 * e + 19, 4 * e + 15)).collect(),
        _ => [e + 6, e + 7, e + 9, e + 10, e + 15].into_iter().chain(run(e + 16, 2 * e + 11)).collect(),
    };
    expect_edim(NumericalMonoid::from_generators(&gens)?, e)
}

/// Checks of a candidate extremal monoid against the bounds for `(e, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessReport {
    pub e: u64,
    pub m: u64,
    pub edim_ok: bool,
    pub multiplicity_ok: bool,
    pub unique_apery_factorizations: bool,
    pub rho: usize,
    /// Count from the unique-factorization route, when it applies.
    pub rho_unique: Option<usize>,
    pub cem: Option<BigUint>,
    pub monoid_type: usize,
    pub dem: Option<BigUint>,
}

impl SharpnessReport {
    /// Edim and multiplicity match, both counting routes agree, and `ρ = cem`.
    pub fn is_sharp(&self) -> bool {
        self.edim_ok
            && self.multiplicity_ok
            && self.rho_unique.is_none_or(|r| r == self.rho)
            && self.cem.as_ref() == Some(&BigUint::from(self.rho))
    }

    pub fn type_attains_dem(&self) -> bool {
        self.dem.as_ref() == Some(&BigUint::from(self.monoid_type))
    }
}

pub fn verify_sharp(monoid: &NumericalMonoid, e: u64, m: u64) -> SharpnessReport {
    let unique = has_unique_apery_factorizations(monoid);
    SharpnessReport {
        e,
        m,
        edim_ok: monoid.edim() as u64 == e + 1,
        multiplicity_ok: monoid.multiplicity() == m,
        unique_apery_factorizations: unique,
        rho: rho(monoid).rho,
        rho_unique: if unique { rho_unique_factorization(monoid).ok().map(|r| r.rho) } else { None },
        cem: cem(e, m).ok(),
        monoid_type: monoid.monoid_type(),
        dem: dem(e, m).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binom;

    #[test]
    fn tq_values() {
        assert_eq!(tq_decompose(7), FamilyParams { delta: 7, t: 4, q: 0 });
        assert_eq!(tq_decompose(6), FamilyParams { delta: 6, t: 4, q: 1 });
        assert_eq!(tq_decompose(2), FamilyParams { delta: 2, t: 2, q: 0 });
        assert_eq!(tq_decompose(1), FamilyParams { delta: 1, t: 1, q: 0 });
        for delta in 2..200u64 {
            let p = tq_decompose(delta);
            let c = (p.t as u64) * (p.t as u64 - 1) / 2;
            assert_eq!(delta - 1, c - p.q as u64);
            assert!(p.q + 2 <= p.t);
        }
    }

    #[test]
    fn large_family_instance() {
        let g = sharp_family_large_m(9, 16).unwrap();
        assert_eq!(g.multiplicity(), 16);
        assert_eq!(g.edim(), 10);
        assert!(g.generators().starts_with(&[16, 17, 19, 23]));
        assert_eq!(g.apery_set().max(), large_m_max_apery(9, 16));
        let r = verify_sharp(&g, 9, 16);
        assert!(r.is_sharp(), "{r:?}");
        assert!(matches!(sharp_family_large_m(9, 15), Err(ConstructionError::BelowThreshold { .. })));
        assert!(matches!(sharp_family_large_m(9, 10), Err(ConstructionError::DeltaTooSmall(1))));
    }

    #[test]
    fn small_families() {
        for e in 3..=9 {
            for delta in 1..=6 {
                let g = sharp_family_small_delta(e, delta).unwrap();
                let r = verify_sharp(&g, e, e + delta);
                assert!(r.is_sharp(), "e={e} delta={delta}: {r:?}");
                let extra = [0, 0, 0, 1, 1, 2][delta as usize - 1];
                assert_eq!(BigUint::from(r.rho), binom(e + 1, 2) + BigUint::from(extra as u32));
            }
        }
        assert_eq!(sharp_family_small_delta(4, 7), Err(ConstructionError::DeltaOutOfRange(7)));
    }
}
