//! Factorizations, Betti elements, and the cardinality of a minimal presentation.
//!
//! The general route builds, for every candidate element `n`, the graph on
//! the factorizations of `n` in which two factorizations are adjacent when
//! their supports meet. A minimal presentation has `components - 1` relations
//! for every element whose graph is disconnected. When every Apéry element has
//! a unique factorization, the count also equals the number of minimal
//! vectors outside the down-set of Apéry factorizations.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::PresentationError;
use crate::monoid::NumericalMonoid;

/// Exponent vector over the minimal generators `g_0, ..., g_e`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    pub coords: Vec<u32>,
    pub value: u64,
}

impl Factorization {
    pub fn length(&self) -> u64 {
        self.coords.iter().map(|&c| c as u64).sum()
    }

    /// Whether both vectors are positive at some common index.
    pub fn shares_support(&self, other: &Factorization) -> bool {
        self.coords.iter().zip(&other.coords).any(|(&a, &b)| a > 0 && b > 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationMethod {
    Graph,
    UniqueFactorization,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiElement {
    pub value: u64,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    pub rho: usize,
    /// Empty for the unique-factorization route.
    pub betti_elements: Vec<BettiElement>,
    pub method: PresentationMethod,
}

/// All multisets of generators (nondecreasing index sequences) summing to
/// `target`, written as exponent vectors; `visit` is called once per solution.
fn for_each_factorization(gens: &[u64], target: u64, visit: &mut dyn FnMut(&[u32])) {
    fn walk(gens: &[u64], start: usize, rest: u64, coords: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
        if rest == 0 {
            visit(coords);
            return;
        }
        for j in start..gens.len() {
            let g = gens[j];
            if g > rest {
                break;
            }
            coords[j] += 1;
            walk(gens, j, rest - g, coords, visit);
            coords[j] -= 1;
        }
    }
    let mut coords = vec![0u32; gens.len()];
    walk(gens, 0, target, &mut coords, visit);
}

/// All factorizations of `n`, sorted lexicographically by coordinates.
pub fn factorizations(monoid: &NumericalMonoid, n: u64) -> Vec<Factorization> {
    factorizations_over(monoid.generators(), n)
}

fn factorizations_over(gens: &[u64], n: u64) -> Vec<Factorization> {
    let mut out = Vec::new();
    for_each_factorization(gens, n, &mut |c| {
        out.push(Factorization { coords: c.to_vec(), value: n })
    });
    out.sort();
    out
}

/// Default Betti-element candidate bound `F(Γ) + g_0 + g_e`.
pub fn candidate_bound(monoid: &NumericalMonoid) -> u64 {
    let base = monoid.multiplicity() + monoid.max_generator();
    match monoid.frobenius() {
        Some(f) => f + base,
        None => base - 1,
    }
}

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn find(&mut self, offset: usize, mut x: u32) -> u32 {
        while self.parent[offset + x as usize] != x {
            let p = self.parent[offset + x as usize];
            self.parent[offset + x as usize] = self.parent[offset + p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, offset: usize, a: u32, b: u32) {
        let ra = self.find(offset, a);
        let rb = self.find(offset, b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[offset + hi as usize] = lo;
        }
    }
}

/// Graph-method presentation count with an explicit candidate bound.
///
/// Every multiset of generators with sum at most `bound` is visited once; for
/// each sum the generator indices occurring in one factorization are merged
/// in a union-find, so the number of classes among used indices is the
/// number of connected components of the factorization graph.
pub fn rho_with_bound(monoid: &NumericalMonoid, bound: u64) -> PresentationReport {
    let gens = monoid.generators();
    let width = gens.len();
    let slots = bound as usize + 1;
    let mut dsu = Dsu { parent: (0..slots).flat_map(|_| 0..width as u32).collect() };
    let mut used = vec![false; slots * width];

    fn walk(
        gens: &[u64],
        start: usize,
        sum: u64,
        bound: u64,
        support: &mut Vec<u32>,
        dsu: &mut Dsu,
        used: &mut [bool],
    ) {
        let width = gens.len();
        for j in start..width {
            let next = sum + gens[j];
            if next > bound {
                break;
            }
            let fresh = support.last() != Some(&(j as u32));
            if fresh {
                support.push(j as u32);
            }
            let offset = next as usize * width;
            let first = support[0];
            used[offset + first as usize] = true;
            for &k in &support[1..] {
                dsu.union(offset, first, k);
            }
            walk(gens, j, next, bound, support, dsu, used);
            if fresh {
                support.pop();
            }
        }
    }
    walk(gens, 0, 0, bound, &mut Vec::new(), &mut dsu, &mut used);

    let mut betti_elements = Vec::new();
    let mut rho = 0;
    for n in 2..=bound {
        let offset = n as usize * width;
        let mut roots = BTreeSet::new();
        for k in 0..width {
            if used[offset + k] {
                roots.insert(dsu.find(offset, k as u32));
            }
        }
        if roots.len() > 1 {
            rho += roots.len() - 1;
            betti_elements.push(BettiElement { value: n, components: roots.len() });
        }
    }
    PresentationReport { rho, betti_elements, method: PresentationMethod::Graph }
}

/// Cardinality of a minimal presentation via factorization graphs.
pub fn rho(monoid: &NumericalMonoid) -> PresentationReport {
    rho_with_bound(monoid, candidate_bound(monoid))
}

/// Factorizations of each Apéry element over the non-multiplicity generators
/// `g_1, ..., g_e`, in increasing order of the element.
pub fn apery_factorizations(monoid: &NumericalMonoid) -> Vec<(u64, Vec<Vec<u32>>)> {
    let rest = &monoid.generators()[1..];
    monoid
        .apery_set()
        .elements
        .into_iter()
        .map(|w| {
            let facts = factorizations_over(rest, w).into_iter().map(|f| f.coords).collect();
            (w, facts)
        })
        .collect()
}

/// Minimal vectors of `N^dim` outside a finite down-set.
pub fn min_elements_of_upset_complement(
    dim: usize,
    downset: &[Vec<u32>],
) -> Result<Vec<Vec<u32>>, PresentationError> {
    if downset.is_empty() {
        return Ok(vec![vec![0; dim]]);
    }
    let set: BTreeSet<&[u32]> = downset.iter().map(Vec::as_slice).collect();
    let mut probe = vec![0u32; dim];
    for d in downset {
        if d.len() != dim {
            return Err(PresentationError::NotDownSet("dimension mismatch"));
        }
        probe.copy_from_slice(d);
        for i in 0..dim {
            if probe[i] > 0 {
                probe[i] -= 1;
                let ok = set.contains(probe.as_slice());
                probe[i] += 1;
                if !ok {
                    return Err(PresentationError::NotDownSet("not closed under decrements"));
                }
            }
        }
    }
    let mut minimal = BTreeSet::new();
    for d in downset {
        for i in 0..dim {
            let mut v = d.clone();
            v[i] += 1;
            if set.contains(v.as_slice()) {
                continue;
            }
            let mut is_min = true;
            for j in 0..dim {
                if v[j] == 0 {
                    continue;
                }
                v[j] -= 1;
                let inside = set.contains(v.as_slice());
                v[j] += 1;
                if !inside {
                    is_min = false;
                    break;
                }
            }
            if is_min {
                minimal.insert(v);
            }
        }
    }
    Ok(minimal.into_iter().collect())
}

/// Presentation count via minimal elements, valid when every Apéry element
/// factors uniquely over `g_1, ..., g_e`.
pub fn rho_unique_factorization(monoid: &NumericalMonoid) -> Result<PresentationReport, PresentationError> {
    let dim = monoid.edim() - 1;
    let mut downset = Vec::with_capacity(monoid.multiplicity() as usize);
    for (w, facts) in apery_factorizations(monoid) {
        if facts.len() != 1 {
            return Err(PresentationError::NonUniqueAperyFactorization { element: w, count: facts.len() });
        }
        downset.extend(facts);
    }
    let minimal = min_elements_of_upset_complement(dim, &downset)?;
    Ok(PresentationReport {
        rho: minimal.len(),
        betti_elements: Vec::new(),
        method: PresentationMethod::UniqueFactorization,
    })
}

/// Whether every Apéry element has exactly one factorization.
pub fn has_unique_apery_factorizations(monoid: &NumericalMonoid) -> bool {
    apery_factorizations(monoid).iter().all(|(_, f)| f.len() == 1)
}

/// All pairs `(a, b)` with `a < b` and `φ(a) = φ(b) <= bound`.
pub fn kernel_congruence_oracle(monoid: &NumericalMonoid, bound: u64) -> Vec<(Factorization, Factorization)> {
    let mut out = Vec::new();
    for n in 0..=bound {
        let facts = factorizations(monoid, n);
        for i in 0..facts.len() {
            for j in i + 1..facts.len() {
                out.push((facts[i].clone(), facts[j].clone()));
            }
        }
    }
    out
}
