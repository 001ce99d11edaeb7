//! Betti numbers of stable and lex ideals.

use alloc::vec;
use alloc::vec::Vec;

use super::lex::{is_lexsegment, restrict_hyperplane};
use super::{BettiTable, MonomialIdeal};
use crate::arith::binom_u64;
use crate::error::IdealError;

/// For every generator `u` and every `i < max(u)`, `x_i * u / x_max(u)` lies in
/// the ideal.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.generators().iter().all(|u| {
        let Some(k) = u.max_var() else { return true };
        let mut exps = u.exponents().to_vec();
        exps[k] -= 1;
        (0..k).all(|i| {
            exps[i] += 1;
            let inside = ideal.contains(&super::Monomial::new(exps.clone()));
            exps[i] -= 1;
            inside
        })
    })
}

/// Graded Betti numbers of a stable ideal:
/// `β_{i, deg u + i} = sum over generators u of binom(max(u) - 1, i)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable, IdealError> {
    if !is_stable(ideal) {
        return Err(IdealError::NotStable);
    }
    let mut table = BettiTable::new(ideal.nvars());
    for u in ideal.generators() {
        let top = u.max_var().map_or(0, |k| k as u64);
        let deg = u.degree() as usize;
        for i in 0..=top {
            table.add(i as usize, deg + i as usize, binom_u64(top, i).expect("small"));
        }
    }
    Ok(table)
}

/// Total Betti numbers `β_0, ..., β_{e-1}` of an artinian lex ideal from
/// `β_i(L) = β_i(L̂) + ℓ(Ŝ/L̂) binom(e-1, i)`, where `L̂` is the restriction to
/// `x_e = 0`.
pub fn betti_recursion(ideal: &MonomialIdeal) -> Result<Vec<u64>, IdealError> {
    if !ideal.is_artinian() {
        return Err(IdealError::NotArtinian);
    }
    if !is_lexsegment(ideal) {
        return Err(IdealError::NotLexsegment);
    }
    Ok(recurse(ideal))
}

fn recurse(ideal: &MonomialIdeal) -> Vec<u64> {
    let e = ideal.nvars();
    if e == 1 {
        return vec![1];
    }
    let hat = restrict_hyperplane(ideal);
    let ell = hat.colength().expect("restriction of an artinian ideal is artinian");
    let hat_totals = recurse(&hat);
    (0..e)
        .map(|i| {
            let below = hat_totals.get(i).copied().unwrap_or(0);
            below + ell * binom_u64(e as u64 - 1, i as u64).expect("small")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{lex_ideal_from_hf, very_compressed_lex, HilbertFunction, Monomial};

    #[test]
    fn maximal_ideal_is_koszul() {
        let m = MonomialIdeal::maximal_power(3, 1);
        assert_eq!(ek_betti(&m).unwrap().totals(), vec![3, 3, 1]);
        assert_eq!(betti_recursion(&m).unwrap(), vec![3, 3, 1]);
    }

    #[test]
    fn recursion_matches_ek() {
        for e in 2..=4 {
            for m in 2..30 {
                let l = very_compressed_lex(e, m);
                assert_eq!(ek_betti(&l).unwrap().totals(), betti_recursion(&l).unwrap(), "e={e} m={m}");
            }
        }
        let l = lex_ideal_from_hf(3, &HilbertFunction::new(vec![1, 3, 4, 2, 1])).unwrap();
        assert_eq!(ek_betti(&l).unwrap().totals(), betti_recursion(&l).unwrap());
    }

    #[test]
    fn rejects() {
        let not_stable = MonomialIdeal::new(2, vec![Monomial::new(vec![0, 1]), Monomial::new(vec![3, 0])]).unwrap();
        assert_eq!(ek_betti(&not_stable), Err(IdealError::NotStable));
        let not_artinian = MonomialIdeal::new(2, vec![Monomial::new(vec![1, 0])]).unwrap();
        assert_eq!(betti_recursion(&not_artinian), Err(IdealError::NotArtinian));
    }
}
