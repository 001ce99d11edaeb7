//! Graded Betti numbers over `Q` from the homology of the Koszul complex
//! `K(x_1..x_e; S/I)`.
//!
//! `β_{i,j}(S/I) = dim (K_i)_j - rank (d_i)_j - rank (d_{i+1})_j` with
//! `(K_i)_j = ∧^i Q^e ⊗ (S/I)_{j-i}`. All ranks are exact.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::linalg::{normal_form_of_unit, Echelon, SparseVec};
use super::{monomials_of_degree, BettiTable, GradedIdeal, HilbertFunction, Monomial};
use crate::arith::upper_shift;
use crate::error::IdealError;

/// Caps on the degree reached while computing the quotient and on the width of
/// any matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KoszulLimits {
    pub max_degree: u32,
    pub max_columns: usize,
}

impl Default for KoszulLimits {
    fn default() -> Self {
        Self { max_degree: 64, max_columns: 250_000 }
    }
}

struct Piece {
    monos: Vec<Monomial>,
    index: BTreeMap<Vec<u32>, usize>,
    ideal: Echelon,
    /// Position among standard monomials for each non-pivot column.
    std_pos: Vec<Option<usize>>,
    std_count: usize,
}

impl Piece {
    fn build(nvars: usize, d: u32, spanning: Vec<SparseVec>) -> Self {
        let monos = monomials_of_degree(nvars, d);
        let index = monos.iter().enumerate().map(|(i, u)| (u.exponents().to_vec(), i)).collect();
        let mut ideal = Echelon::new(monos.len());
        for v in spanning {
            if ideal.rank() == monos.len() {
                break;
            }
            ideal.insert(v);
        }
        let mut std_pos = alloc::vec![None; monos.len()];
        let mut std_count = 0;
        for (c, slot) in std_pos.iter_mut().enumerate() {
            if !ideal.is_pivot(c) {
                *slot = Some(std_count);
                std_count += 1;
            }
        }
        Self { monos, index, ideal, std_pos, std_count }
    }

    fn col(&self, exps: &[u32]) -> usize {
        self.index[exps]
    }
}

/// The graded pieces `(S/I)_0, ..., (S/I)_D` of an artinian quotient.
fn quotient_pieces(ideal: &GradedIdeal, limits: KoszulLimits) -> Result<Vec<Piece>, IdealError> {
    let e = ideal.nvars();
    let max_gen = ideal.max_generator_degree();
    let mut pieces: Vec<Piece> = Vec::new();
    let next_spanning = |d: u32, prev: Option<&Piece>| -> Result<Piece, IdealError> {
        let monos_len = monomials_of_degree(e, d).len();
        if monos_len > limits.max_columns {
            return Err(IdealError::ResourceLimit("graded piece too large"));
        }
        let probe = Piece::build(e, d, Vec::new());
        let mut spanning: Vec<SparseVec> = Vec::new();
        if let Some(prev) = prev {
            for row in prev.ideal.rows() {
                for k in 0..e {
                    let mut v: SparseVec = row
                        .iter()
                        .map(|(c, x)| (probe.col(prev.monos[*c].mul_var(k).exponents()), x.clone()))
                        .collect();
                    v.sort_by_key(|(c, _)| *c);
                    spanning.push(v);
                }
            }
        }
        for g in ideal.monomial_gens().iter().filter(|g| g.degree() == d) {
            spanning.push(alloc::vec![(probe.col(g.exponents()), BigInt::one())]);
        }
        for (u, v) in ideal.binomial_gens().iter().filter(|(u, _)| u.degree() == d) {
            let (a, b) = (probe.col(u.exponents()), probe.col(v.exponents()));
            if a != b {
                let mut vec = alloc::vec![(a, BigInt::one()), (b, -BigInt::one())];
                vec.sort_by_key(|(c, _)| *c);
                spanning.push(vec);
            }
        }
        Ok(Piece::build(e, d, spanning))
    };
    let mut d = 0u32;
    loop {
        let piece = next_spanning(d, pieces.last())?;
        let h = piece.std_count as u64;
        if h == 0 {
            return Ok(pieces);
        }
        if d > max_gen.max(1) {
            let prev_h = pieces[d as usize - 1].std_count as u64;
            if upper_shift(prev_h, d - 1) == BigUint::from(h) {
                return Err(IdealError::NotArtinian);
            }
        }
        if d >= limits.max_degree {
            return Err(IdealError::ResourceLimit("quotient degree cap reached"));
        }
        pieces.push(piece);
        d += 1;
    }
}

/// Hilbert function of `S/I`; the quotient must be artinian.
pub fn graded_hilbert_function(ideal: &GradedIdeal) -> Result<HilbertFunction, IdealError> {
    graded_hilbert_function_with(ideal, KoszulLimits::default())
}

pub(crate) fn graded_hilbert_function_with(
    ideal: &GradedIdeal,
    limits: KoszulLimits,
) -> Result<HilbertFunction, IdealError> {
    let pieces = quotient_pieces(ideal, limits)?;
    Ok(HilbertFunction { values: pieces.iter().map(|p| p.std_count as u64).collect() })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Rank of `d_i : ∧^i ⊗ (S/I)_a -> ∧^{i-1} ⊗ (S/I)_{a+1}`.
fn koszul_rank(
    e: usize,
    i: usize,
    source: &Piece,
    target: &Piece,
    nf: &[(SparseVec, BigInt)],
    limits: KoszulLimits,
) -> Result<usize, IdealError> {
    let lower = subsets(e, i - 1);
    let lower_index: BTreeMap<Vec<usize>, usize> = lower.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect();
    let width = lower.len() * target.std_count;
    if width == 0 {
        return Ok(0);
    }
    if width > limits.max_columns {
        return Err(IdealError::ResourceLimit("Koszul matrix too wide"));
    }
    let mut ech = Echelon::new(width);
    let std_cols: Vec<usize> = (0..source.monos.len()).filter(|&c| source.std_pos[c].is_some()).collect();
    for t in subsets(e, i) {
        for &c in &std_cols {
            let u = &source.monos[c];
            let mut denom = BigInt::one();
            let mut terms = Vec::with_capacity(i);
            for (k, &var) in t.iter().enumerate() {
                let w = target.col(u.mul_var(var).exponents());
                let (nums, d) = &nf[w];
                if nums.is_empty() {
                    continue;
                }
                denom = denom.lcm(d);
                let mut rest = t.clone();
                rest.remove(k);
                let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                terms.push((lower_index[&rest], sign, nums, d));
            }
            let mut entries: Vec<(usize, BigInt)> = Vec::new();
            for (block, sign, nums, d) in terms {
                let scale = sign * (&denom / d);
                for (col, x) in nums {
                    let pos = target.std_pos[*col].expect("normal forms use standard columns");
                    entries.push((block * target.std_count + pos, &scale * x));
                }
            }
            entries.sort_by_key(|(c, _)| *c);
            let mut merged: SparseVec = Vec::with_capacity(entries.len());
            for (c, x) in entries {
                match merged.last_mut() {
                    Some((last, acc)) if *last == c => *acc += x,
                    _ => merged.push((c, x)),
                }
            }
            merged.retain(|(_, x)| !x.is_zero());
            if !merged.is_empty() {
                ech.insert(merged);
            }
            if ech.rank() == width {
                return Ok(width);
            }
        }
    }
    Ok(ech.rank())
}

/// Graded Betti table of `I` over `Q` with default limits.
pub fn koszul_betti(ideal: &GradedIdeal) -> Result<BettiTable, IdealError> {
    koszul_betti_with(ideal, KoszulLimits::default())
}

pub fn koszul_betti_with(ideal: &GradedIdeal, limits: KoszulLimits) -> Result<BettiTable, IdealError> {
    let e = ideal.nvars();
    let pieces = quotient_pieces(ideal, limits)?;
    let mut table = BettiTable::new(e);
    if pieces.is_empty() {
        table.add(0, 0, 1);
        return Ok(table);
    }
    let top = pieces.len() - 1;
    let nfs: Vec<Vec<(SparseVec, BigInt)>> = pieces
        .iter()
        .map(|p| (0..p.monos.len()).map(|c| normal_form_of_unit(&p.ideal, c)).collect())
        .collect();
    // rank[i][a]: rank of d_i with source in quotient degree a
    let mut rank = alloc::vec![alloc::vec![0usize; top + 1]; e + 2];
    for (i, row) in rank.iter_mut().enumerate().take(e + 1).skip(1) {
        for a in 0..top {
            row[a] = koszul_rank(e, i, &pieces[a], &pieces[a + 1], &nfs[a + 1], limits)?;
        }
    }
    let binom = |n: usize, k: usize| crate::arith::binom_u64(n as u64, k as u64).expect("small") as usize;
    for i in 1..=e {
        for a in 0..=top {
            let j = i + a;
            let dim = binom(e, i) * pieces[a].std_count;
            // d_{i+1} into (K_i)_j starts from quotient degree a - 1
            let incoming = if a >= 1 { rank[i + 1][a - 1] } else { 0 };
            let beta = dim - rank[i][a] - incoming;
            table.add(i - 1, j, beta as u64);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{ek_betti, very_compressed_lex, MonomialIdeal};

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn maximal_ideal() {
        let m = GradedIdeal::from(&MonomialIdeal::maximal_power(3, 1));
        let t = koszul_betti(&m).unwrap();
        assert_eq!(t.totals(), alloc::vec![3, 3, 1]);
        assert_eq!(t.get(0, 1), 3);
        assert_eq!(t.get(2, 3), 1);
    }

    #[test]
    fn agrees_with_ek_on_lex() {
        for (e, m) in [(2, 5), (3, 7), (3, 10), (3, 16), (4, 9)] {
            let l = very_compressed_lex(e, m);
            assert_eq!(koszul_betti(&GradedIdeal::from(&l)).unwrap(), ek_betti(&l).unwrap(), "e={e} m={m}");
        }
    }

    #[test]
    fn binomial_ideal() {
        // complete intersection (x1^2 - x2^2, x1 x2) in two variables
        let i = GradedIdeal::new(2, alloc::vec![mono(&[1, 1])], alloc::vec![(mono(&[2, 0]), mono(&[0, 2]))]).unwrap();
        assert_eq!(graded_hilbert_function(&i).unwrap().values, alloc::vec![1, 2, 1]);
        let t = koszul_betti(&i).unwrap();
        assert_eq!(t.get(0, 2), 2);
        assert_eq!(t.get(1, 4), 1);
        assert_eq!(t.totals(), alloc::vec![2, 1]);
    }

    #[test]
    fn detects_non_artinian() {
        let i = GradedIdeal::new(3, alloc::vec![mono(&[1, 0, 0])], alloc::vec![]).unwrap();
        assert_eq!(graded_hilbert_function(&i), Err(IdealError::NotArtinian));
    }
}
