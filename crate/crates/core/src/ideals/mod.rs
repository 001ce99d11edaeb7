//! Monomial and binomial ideals in `k[x_1, ..., x_e]`, their Hilbert
//! functions, and graded Betti numbers.
//!
//! Betti tables are always reported for the ideal `I`, not the quotient:
//! `β_{i,j}(I) = β_{i+1,j}(S/I)`.
//!
//! Monomials of a fixed degree are ordered lexicographically with
//! `x_1 > x_2 > ... > x_e`; "lex-first" means largest in that order.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::IdealError;

mod betti;
mod istar;
mod koszul;
mod lex;
mod linalg;
mod lpp;

pub use betti::{betti_recursion, ek_betti, is_stable};
pub use istar::istar_ideal;
pub use koszul::{graded_hilbert_function, koszul_betti, koszul_betti_with, KoszulLimits};
pub use lex::{
    enumerate_hilbert_functions, enumerate_lex_ideals, is_lexsegment, lex_ideal_from_hf, lex_last_monomials,
    restrict_hyperplane, very_compressed_lex, DEFAULT_ENUMERATION_CAP,
};
pub use lpp::lex_plus_powers;

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    /// `x_i^power`, zero-based `i`.
    pub fn pure_power(nvars: usize, i: usize, power: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = power;
        Self { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// Zero-based index of the last variable with positive exponent.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&a| a > 0)
    }

    /// The variable index if this is a pure power `x_i^a`, `a > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.exps.iter().enumerate().filter(|(_, &a)| a > 0);
        let first = support.next()?;
        if support.next().is_none() {
            Some(first.0)
        } else {
            None
        }
    }

    /// Lexicographic comparison with `x_1 > x_2 > ...`, ignoring degree.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &a) in self.exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Sort key: degree ascending, then lex-first.
fn graded_lex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.lex_cmp(a))
}

/// All monomials of degree `d` in `nvars` variables, lex-first first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn fill(nvars: usize, pos: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == nvars {
            cur.push(rest);
            out.push(Monomial { exps: cur.clone() });
            cur.pop();
            return;
        }
        for a in (0..=rest).rev() {
            cur.push(a);
            fill(nvars, pos + 1, rest - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial { exps: Vec::new() });
        }
        return out;
    }
    fill(nvars, 0, d, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// Monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` (removes every generator divisible by another).
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self, IdealError> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(IdealError::VariableMismatch { expected: nvars, found: g.nvars() });
        }
        Ok(Self::minimalized(nvars, gens))
    }

    pub(crate) fn minimalized(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(graded_lex_desc);
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        Self { nvars, gens: minimal }
    }

    /// `m^k`.
    pub fn maximal_power(nvars: usize, k: u32) -> Self {
        Self { nvars, gens: monomials_of_degree(nvars, k) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators sorted by degree, then lex-first.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, mono: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(mono))
    }

    /// Some power of every variable lies in the ideal.
    pub fn is_artinian(&self) -> bool {
        let mut seen = vec![false; self.nvars];
        for g in &self.gens {
            if g.degree() == 0 {
                return true;
            }
            if let Some(i) = g.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// `[I]_d` in lex-first order.
    pub fn monomials_in_degree(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, d).into_iter().filter(|u| self.contains(u)).collect()
    }

    /// Monomials outside an artinian ideal, sorted by degree then lex-first.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>, IdealError> {
        if !self.is_artinian() {
            return Err(IdealError::NotArtinian);
        }
        let one = Monomial::one(self.nvars);
        if self.contains(&one) {
            return Ok(Vec::new());
        }
        // each standard monomial is reached once, from u / x_max(u)
        let mut out = vec![one];
        let mut k = 0;
        while k < out.len() {
            let start = out[k].max_var().unwrap_or(0);
            for i in start..self.nvars {
                let v = out[k].mul_var(i);
                if !self.contains(&v) {
                    out.push(v);
                }
            }
            k += 1;
        }
        out.sort_by(graded_lex_desc);
        Ok(out)
    }

    /// Number of monomials outside the ideal in each degree, up to the last
    /// nonzero value.
    pub fn hilbert_function(&self) -> Result<HilbertFunction, IdealError> {
        let mut values: Vec<u64> = Vec::new();
        for u in self.standard_monomials()? {
            let d = u.degree() as usize;
            if values.len() <= d {
                values.resize(d + 1, 0);
            }
            values[d] += 1;
        }
        Ok(HilbertFunction { values })
    }

    pub fn colength(&self) -> Result<u64, IdealError> {
        Ok(self.hilbert_function()?.colength())
    }

    /// Whether every generator of `other` lies in `self`, i.e. `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g:?}")?;
        }
        write!(f, ")")
    }
}

/// Homogeneous ideal generated by monomials and binomials `u - v` with
/// `deg u = deg v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    nvars: usize,
    monomial_gens: Vec<Monomial>,
    binomial_gens: Vec<(Monomial, Monomial)>,
}

impl GradedIdeal {
    pub fn new(
        nvars: usize,
        monomial_gens: Vec<Monomial>,
        binomial_gens: Vec<(Monomial, Monomial)>,
    ) -> Result<Self, IdealError> {
        for m in monomial_gens.iter().chain(binomial_gens.iter().flat_map(|(u, v)| [u, v])) {
            if m.nvars() != nvars {
                return Err(IdealError::VariableMismatch { expected: nvars, found: m.nvars() });
            }
        }
        if binomial_gens.iter().any(|(u, v)| u.degree() != v.degree()) {
            return Err(IdealError::Inhomogeneous);
        }
        let monomial_gens = MonomialIdeal::minimalized(nvars, monomial_gens).gens;
        Ok(Self { nvars, monomial_gens, binomial_gens })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomial_gens(&self) -> &[Monomial] {
        &self.monomial_gens
    }

    pub fn binomial_gens(&self) -> &[(Monomial, Monomial)] {
        &self.binomial_gens
    }

    pub fn is_monomial(&self) -> bool {
        self.binomial_gens.is_empty()
    }

    pub(crate) fn max_generator_degree(&self) -> u32 {
        self.monomial_gens
            .iter()
            .map(Monomial::degree)
            .chain(self.binomial_gens.iter().map(|(u, _)| u.degree()))
            .max()
            .unwrap_or(0)
    }
}

impl From<&MonomialIdeal> for GradedIdeal {
    fn from(ideal: &MonomialIdeal) -> Self {
        Self { nvars: ideal.nvars, monomial_gens: ideal.gens.clone(), binomial_gens: Vec::new() }
    }
}

/// Hilbert function of an artinian quotient, `h_0, ..., h_D` with `h_D > 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>) -> Self {
        let mut values = values;
        while values.last() == Some(&0) {
            values.pop();
        }
        Self { values }
    }

    pub fn colength(&self) -> u64 {
        self.values.iter().sum()
    }

    /// `h_d`, zero past the end.
    pub fn at(&self, d: usize) -> u64 {
        self.values.get(d).copied().unwrap_or(0)
    }

    /// Top degree `D` with `h_D > 0`.
    pub fn socle_degree(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }
}

/// Graded Betti numbers `β_{i,j}` of an ideal in `nvars` variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub nvars: usize,
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, entries: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, j: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti numbers `β_0, ..., β_{e-1}`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0).max(self.nvars);
        let mut out = vec![0; len];
        for (&(i, _), &c) in &self.entries {
            out[i] += c;
        }
        out
    }

    /// Entrywise `self <= other`.
    pub fn graded_le(&self, other: &BettiTable) -> bool {
        self.entries.iter().all(|(&(i, j), &c)| c <= other.get(i, j))
    }
}
