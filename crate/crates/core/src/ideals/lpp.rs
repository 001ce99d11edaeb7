//! Lex-plus-powers ideals `P + L` with `P = (x_1^{d_1}, ..., x_c^{d_c})`.

use alloc::vec::Vec;

use super::{monomials_of_degree, HilbertFunction, Monomial, MonomialIdeal};
use crate::error::IdealError;

/// The lex-plus-powers ideal for the powers `d_1 <= ... <= d_c` with the given
/// Hilbert function, built greedily degree by degree.
pub fn lex_plus_powers(e: usize, powers: &[u32], hf: &HilbertFunction) -> Result<MonomialIdeal, IdealError> {
    if powers.len() > e {
        return Err(IdealError::VariableMismatch { expected: e, found: powers.len() });
    }
    if powers.windows(2).any(|w| w[0] > w[1]) || powers.contains(&0) {
        return Err(IdealError::NoLexPlusPowers);
    }
    let hf = HilbertFunction::new(hf.values.clone());
    if hf.at(0) != 1 {
        return Err(IdealError::InadmissibleHilbertFunction("h_0 must be 1"));
    }
    let in_powers = |u: &Monomial| powers.iter().enumerate().any(|(i, &p)| u.exponents()[i] >= p);
    let mut prev: Vec<Monomial> = Vec::new();
    let mut gens = Vec::new();
    for d in 1..=hf.values.len() as u32 {
        let all = monomials_of_degree(e, d);
        let target = all.len() as u64 - hf.at(d as usize);
        let from_below: Vec<Monomial> = prev.iter().flat_map(|u| (0..e).map(move |k| u.mul_var(k))).collect();
        let mut member: Vec<bool> = all.iter().map(|u| in_powers(u) || from_below.contains(u)).collect();
        let mut count = member.iter().filter(|&&b| b).count() as u64;
        if count > target {
            return Err(IdealError::NoLexPlusPowers);
        }
        for (k, slot) in member.iter_mut().enumerate() {
            if count == target {
                break;
            }
            if !*slot && !in_powers(&all[k]) {
                *slot = true;
                count += 1;
            }
        }
        if count < target {
            return Err(IdealError::NoLexPlusPowers);
        }
        // outside P, the chosen monomials must be an initial lex segment
        let mut gap = false;
        for (u, &inside) in all.iter().zip(&member) {
            if in_powers(u) {
                continue;
            }
            if inside && gap {
                return Err(IdealError::NoLexPlusPowers);
            }
            gap |= !inside;
        }
        let current: Vec<Monomial> = all.into_iter().zip(member).filter(|(_, b)| *b).map(|(u, _)| u).collect();
        gens.extend(current.iter().filter(|u| !from_below.contains(u)).cloned());
        prev = current;
    }
    let ideal = MonomialIdeal::minimalized(e, gens);
    if ideal.hilbert_function()? != hf {
        return Err(IdealError::NoLexPlusPowers);
    }
    Ok(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_plus_lex() {
        // (x1^2) + m^4 in three variables has Hilbert function (1,3,5,7)
        let hf = HilbertFunction::new(alloc::vec![1, 3, 5, 7]);
        let i = lex_plus_powers(3, &[2], &hf).unwrap();
        assert_eq!(i.hilbert_function().unwrap(), hf);
        assert!(i.contains(&Monomial::new(alloc::vec![2, 0, 0])));
    }

    #[test]
    fn no_powers_is_lex() {
        let hf = HilbertFunction::new(alloc::vec![1, 3, 4, 2]);
        let i = lex_plus_powers(3, &[], &hf).unwrap();
        assert_eq!(i, crate::ideals::lex_ideal_from_hf(3, &hf).unwrap());
    }

    #[test]
    fn impossible() {
        let hf = HilbertFunction::new(alloc::vec![1, 2, 3]);
        assert_eq!(lex_plus_powers(2, &[1], &hf), Err(IdealError::NoLexPlusPowers));
    }
}
