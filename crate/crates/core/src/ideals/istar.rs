//! The ideal of initial forms attached to a numerical monoid.
//!
//! For `Γ = ⟨g_0, g_1, ..., g_e⟩` the ring `k[x_1..x_e]/I*` is the associated
//! graded ring of `k[Γ]/(t^{g_0})`. Its monomials correspond to Apéry
//! factorizations, so it has colength `g_0`.

use alloc::vec::Vec;

use super::koszul::graded_hilbert_function;
use super::{GradedIdeal, Monomial};
use crate::error::IdealError;
use crate::monoid::NumericalMonoid;
use crate::presentation::{apery_factorizations, min_elements_of_upset_complement};

/// `I*` generated by
/// * `x^a - x^b` for factorizations of equal length of the same Apéry element,
/// * `x^a` when some factorization of the same Apéry element is longer,
/// * `x^a` for the minimal exponents outside the set of all Apéry factorizations.
///
/// The colength of the result is checked against the multiplicity.
pub fn istar_ideal(monoid: &NumericalMonoid) -> Result<GradedIdeal, IdealError> {
    let e = monoid.edim() - 1;
    let m = monoid.multiplicity();
    let length = |a: &[u32]| a.iter().map(|&x| x as u64).sum::<u64>();
    let mut monomials = Vec::new();
    let mut binomials = Vec::new();
    let mut downset = Vec::with_capacity(m as usize);
    for (_, facts) in apery_factorizations(monoid) {
        let longest = facts.iter().map(|f| length(f)).max().unwrap_or(0);
        let mut first_of_length: Vec<(u64, &Vec<u32>)> = Vec::new();
        for f in &facts {
            let len = length(f);
            if len < longest {
                monomials.push(Monomial::new(f.clone()));
            }
            match first_of_length.iter().find(|(l, _)| *l == len) {
                Some((_, anchor)) => {
                    binomials.push((Monomial::new((*anchor).clone()), Monomial::new(f.clone())));
                }
                None => first_of_length.push((len, f)),
            }
        }
        downset.extend(facts);
    }
    let outside = min_elements_of_upset_complement(e, &downset)
        .expect("Apéry factorizations form a down-set");
    monomials.extend(outside.into_iter().map(Monomial::new));
    // binomials whose terms already lie in the monomial part are redundant
    let ideal = GradedIdeal::new(e, monomials, binomials)?;
    let pruned: Vec<(Monomial, Monomial)> = ideal
        .binomial_gens()
        .iter()
        .filter(|(u, v)| {
            let covered = |w: &Monomial| ideal.monomial_gens().iter().any(|g| g.divides(w));
            !(covered(u) && covered(v))
        })
        .cloned()
        .collect();
    let ideal = GradedIdeal::new(e, ideal.monomial_gens().to_vec(), pruned)?;
    let colength = graded_hilbert_function(&ideal)?.colength();
    if colength != m {
        return Err(IdealError::TruncationNotCertified { found: colength as usize, expected: m as usize });
    }
    Ok(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::koszul_betti;

    #[test]
    fn colength_is_multiplicity() {
        for gens in [&[4u64, 5, 6, 7][..], &[10, 13, 15], &[11, 12, 14, 15, 20], &[6, 7, 9, 10, 15], &[5, 6, 9]] {
            let n = NumericalMonoid::from_generators(gens).unwrap();
            let i = istar_ideal(&n).unwrap();
            assert_eq!(graded_hilbert_function(&i).unwrap().colength(), gens[0]);
        }
    }

    #[test]
    fn relations_match_presentation() {
        for gens in [&[4u64, 5, 6, 7][..], &[10, 13, 15], &[7, 8, 10, 11]] {
            let n = NumericalMonoid::from_generators(gens).unwrap();
            let i = istar_ideal(&n).unwrap();
            let t = koszul_betti(&i).unwrap();
            let rho = crate::presentation::rho(&n).rho as u64;
            assert!(t.totals()[0] >= rho, "{gens:?}");
            assert!(t.totals()[n.edim() - 2] >= n.monoid_type() as u64, "{gens:?}");
        }
    }
}
