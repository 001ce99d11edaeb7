//! Lexsegment ideals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::{monomials_of_degree, HilbertFunction, Monomial, MonomialIdeal};
use crate::arith::{rs_split, upper_shift};
use crate::error::IdealError;
use crate::presentation::min_elements_of_upset_complement;

/// Default bound on the number of objects returned by the enumerators.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// The lex ideal `(first N_r - s monomials of degree r) + m^(r+1)` where
/// `(r, s)` is the degree split of `m` in `e` variables. Its colength is `m`
/// and its Hilbert function is `(1, e, ..., N_{r-1}, s)`.
pub fn very_compressed_lex(e: usize, m: u64) -> MonomialIdeal {
    assert!(e >= 1 && m >= 1, "need e >= 1 and m >= 1");
    let pair = rs_split(e as u64, m);
    let degree_r = monomials_of_degree(e, pair.r);
    let count = degree_r.len() - pair.s as usize;
    let mut gens: Vec<Monomial> = degree_r.into_iter().take(count).collect();
    gens.extend(monomials_of_degree(e, pair.r + 1));
    MonomialIdeal::minimalized(e, gens)
}

/// Checks Macaulay's conditions `h_0 = 1`, `h_1 <= e`, `h_{d+1} <= h_d^<d>`.
fn check_admissible(e: usize, hf: &HilbertFunction) -> Result<(), IdealError> {
    let h = &hf.values;
    if h.first() != Some(&1) {
        return Err(IdealError::InadmissibleHilbertFunction("h_0 must be 1"));
    }
    if h.len() > 1 && h[1] > e as u64 {
        return Err(IdealError::InadmissibleHilbertFunction("h_1 exceeds the number of variables"));
    }
    for d in 1..h.len().saturating_sub(1) {
        if BigUint::from(h[d + 1]) > upper_shift(h[d], d as u32) {
            return Err(IdealError::InadmissibleHilbertFunction("growth exceeds Macaulay bound"));
        }
    }
    Ok(())
}

/// The `count` lex-last monomials of degree `d`, smallest first.
pub fn lex_last_monomials(nvars: usize, d: u32, count: usize) -> Vec<Monomial> {
    fn fill(nvars: usize, pos: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>, count: usize) {
        if out.len() == count {
            return;
        }
        if pos + 1 == nvars {
            cur.push(rest);
            out.push(Monomial::new(cur.clone()));
            cur.pop();
            return;
        }
        for a in 0..=rest {
            cur.push(a);
            fill(nvars, pos + 1, rest - a, cur, out, count);
            cur.pop();
            if out.len() == count {
                return;
            }
        }
    }
    let mut out = Vec::with_capacity(count);
    if count == 0 || nvars == 0 {
        return out;
    }
    fill(nvars, 0, d, &mut Vec::with_capacity(nvars), &mut out, count);
    out
}

/// The lex ideal of `k[x_1..x_e]` with Hilbert function `hf`: its standard
/// monomials in degree `d` are the `h_d` lex-last ones.
pub fn lex_ideal_from_hf(e: usize, hf: &HilbertFunction) -> Result<MonomialIdeal, IdealError> {
    if e == 0 {
        return Err(IdealError::VariableMismatch { expected: 1, found: 0 });
    }
    let hf = HilbertFunction::new(hf.values.clone());
    check_admissible(e, &hf)?;
    let standard: Vec<Vec<u32>> = hf
        .values
        .iter()
        .enumerate()
        .flat_map(|(d, &h)| lex_last_monomials(e, d as u32, h as usize))
        .map(|u| u.exponents().to_vec())
        .collect();
    let gens = min_elements_of_upset_complement(e, &standard)
        .map_err(|_| IdealError::InadmissibleHilbertFunction("segments do not form an ideal"))?;
    Ok(MonomialIdeal::minimalized(e, gens.into_iter().map(Monomial::new).collect()))
}

/// In every degree the ideal's monomials form an initial lex segment, i.e.
/// the monomials outside it are lex-last.
pub fn is_lexsegment(ideal: &MonomialIdeal) -> bool {
    let e = ideal.nvars();
    if let Ok(hf) = ideal.hilbert_function() {
        return (0..hf.values.len()).all(|d| {
            lex_last_monomials(e, d as u32, hf.values[d] as usize).iter().all(|u| !ideal.contains(u))
        });
    }
    let top = ideal.max_generator_degree();
    for d in 0..=top {
        let mut outside = false;
        for u in monomials_of_degree(e, d) {
            let inside = ideal.contains(&u);
            if inside && outside {
                return false;
            }
            outside |= !inside;
        }
    }
    true
}

/// Sets `x_e = 0`: keeps the generators not involving the last variable, in
/// `e - 1` variables.
pub fn restrict_hyperplane(ideal: &MonomialIdeal) -> MonomialIdeal {
    let e = ideal.nvars();
    assert!(e >= 1, "cannot restrict an ideal in zero variables");
    let gens = ideal
        .generators()
        .iter()
        .filter(|g| g.exponents()[e - 1] == 0)
        .map(|g| Monomial::new(g.exponents()[..e - 1].to_vec()))
        .collect();
    MonomialIdeal::minimalized(e - 1, gens)
}

/// All admissible Hilbert functions of artinian quotients of `k[x_1..x_e]`
/// with the given colength. Errors with `ResourceLimit` past `cap`.
pub fn enumerate_hilbert_functions(
    e: usize,
    colength: u64,
    cap: usize,
) -> Result<Vec<HilbertFunction>, IdealError> {
    fn walk(
        e: usize,
        remaining: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<HilbertFunction>,
        cap: usize,
    ) -> Result<(), IdealError> {
        if remaining == 0 {
            if out.len() >= cap {
                return Err(IdealError::ResourceLimit("too many Hilbert functions"));
            }
            out.push(HilbertFunction { values: cur.clone() });
            return Ok(());
        }
        let d = cur.len() - 1;
        let bound = if d == 0 {
            e as u64
        } else {
            let shift = upper_shift(cur[d], d as u32);
            u64::try_from(shift).unwrap_or(u64::MAX)
        };
        for h in 1..=bound.min(remaining) {
            cur.push(h);
            walk(e, remaining - h, cur, out, cap)?;
            cur.pop();
        }
        Ok(())
    }
    if colength == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    walk(e, colength - 1, &mut vec![1], &mut out, cap)?;
    Ok(out)
}

/// All lex ideals of `k[x_1..x_e]` with the given colength, one per
/// admissible Hilbert function.
pub fn enumerate_lex_ideals(e: usize, colength: u64, cap: usize) -> Result<Vec<MonomialIdeal>, IdealError> {
    enumerate_hilbert_functions(e, colength, cap)?
        .iter()
        .map(|hf| lex_ideal_from_hf(e, hf))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn very_compressed_examples() {
        let c = very_compressed_lex(3, 16);
        assert_eq!(c.hilbert_function().unwrap().values, vec![1, 3, 6, 6]);
        assert_eq!(c.colength().unwrap(), 16);
        let c = very_compressed_lex(1, 5);
        assert_eq!(c.generators(), &[mono(&[5])]);
        let c = very_compressed_lex(4, 5);
        assert_eq!(c.hilbert_function().unwrap().values, vec![1, 4]);
        assert!(is_lexsegment(&c));
    }

    #[test]
    fn lex_from_hf() {
        let l = lex_ideal_from_hf(2, &HilbertFunction::new(vec![1, 1, 1])).unwrap();
        assert_eq!(l.generators(), &[mono(&[1, 0]), mono(&[0, 3])]);
        let l = lex_ideal_from_hf(3, &HilbertFunction::new(vec![1, 3, 5, 7])).unwrap();
        assert_eq!(l.hilbert_function().unwrap().values, vec![1, 3, 5, 7]);
        assert!(is_lexsegment(&l));
        assert!(lex_ideal_from_hf(2, &HilbertFunction::new(vec![1, 2, 4])).is_err());
        assert!(lex_ideal_from_hf(2, &HilbertFunction::new(vec![2])).is_err());
    }

    #[test]
    fn hyperplane() {
        let l = lex_ideal_from_hf(3, &HilbertFunction::new(vec![1, 3, 2])).unwrap();
        let r = restrict_hyperplane(&l);
        assert_eq!(r.nvars(), 2);
        assert!(r.is_artinian());
    }

    #[test]
    fn enumeration_counts() {
        // colength 3 in two variables: (1,2) and (1,1,1)
        let hfs = enumerate_hilbert_functions(2, 3, 100).unwrap();
        assert_eq!(hfs.len(), 2);
        let ideals = enumerate_lex_ideals(3, 6, 100).unwrap();
        for l in &ideals {
            assert_eq!(l.colength().unwrap(), 6);
            assert!(is_lexsegment(l));
        }
        assert!(enumerate_hilbert_functions(3, 12, 2).is_err());
    }
}
