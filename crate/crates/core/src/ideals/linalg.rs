//! Exact row reduction over the rationals with integer rows.
//!
//! Rows are kept primitive (content 1, positive pivot) so entries stay small
//! for the ±1 matrices that arise from binomial ideals and Koszul maps.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer vector, sorted by column.
pub(crate) type SparseVec = Vec<(usize, BigInt)>;

fn make_primitive(v: &mut SparseVec) {
    let mut g = BigInt::zero();
    for (_, c) in v.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    let negate = v.first().is_some_and(|(_, c)| c.is_negative());
    if g.is_zero() {
        return;
    }
    if !g.is_one() {
        for (_, c) in v.iter_mut() {
            *c /= &g;
        }
    }
    if negate {
        for (_, c) in v.iter_mut() {
            *c = -core::mem::take(c);
        }
    }
}

/// `a*x - b*y` for sparse vectors.
fn combine(a: &BigInt, x: &SparseVec, b: &BigInt, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let c = a * &x[i].1 - b * &y[j].1;
            if !c.is_zero() {
                out.push((x[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn coeff(v: &SparseVec, col: usize) -> Option<&BigInt> {
    v.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &v[k].1)
}

/// Reduced row echelon form, built incrementally.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    /// Row index owning each pivot column.
    pivot_of: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new(), pivot_of: vec![None; ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of[col].is_some()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Row whose pivot is `col`, if any.
    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_of[col].map(|r| &self.rows[r])
    }

    /// Eliminates every pivot column from `v`. The result is a nonzero
    /// multiple of `v` modulo the row space.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < v.len() {
            let col = v[k].0;
            if let Some(r) = self.pivot_of[col] {
                let row = &self.rows[r];
                let p = coeff(row, col).expect("pivot entry");
                let c = v[k].1.clone();
                let g = p.gcd(&c);
                v = combine(&(p / &g), &v, &(c / &g), row);
                // entries before position k are unchanged pivot-free columns
                k = v.partition_point(|(c, _)| *c < col);
            } else {
                k += 1;
            }
        }
        make_primitive(&mut v);
        v
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.iter().all(|(c, _)| *c < self.ncols));
        let v = self.reduce(v);
        let Some(&(pivot, _)) = v.first() else {
            return false;
        };
        let p = v[0].1.clone();
        for row in self.rows.iter_mut() {
            if let Some(c) = coeff(row, pivot).cloned() {
                let g = p.gcd(&c);
                let mut new = combine(&(&p / &g), row, &(c / &g), &v);
                make_primitive(&mut new);
                *row = new;
            }
        }
        self.pivot_of[pivot] = Some(self.rows.len());
        self.rows.push(v);
        true
    }
}

/// Normal form of the unit vector at `col` modulo the row space of `ech`,
/// as `(numerators, denominator)` over non-pivot columns.
pub(crate) fn normal_form_of_unit(ech: &Echelon, col: usize) -> (SparseVec, BigInt) {
    match ech.pivot_row(col) {
        None => (vec![(col, BigInt::one())], BigInt::one()),
        Some(row) => {
            let p = coeff(row, col).expect("pivot entry").clone();
            let nums = row.iter().filter(|(c, _)| *c != col).map(|(c, x)| (*c, -x.clone())).collect();
            (nums, p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(c, x)| (c, BigInt::from(x))).collect()
    }

    #[test]
    fn rank_and_reduction() {
        let mut e = Echelon::new(4);
        assert!(e.insert(sv(&[(0, 2), (1, 4)])));
        assert!(e.insert(sv(&[(1, 3), (2, 1)])));
        assert!(!e.insert(sv(&[(0, 1), (1, 5), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.reduce(sv(&[(0, 1), (2, 3)])).iter().all(|(c, _)| !e.is_pivot(*c)));
        assert!(e.reduce(sv(&[(0, 2), (1, 7), (2, 1)])).is_empty());
    }

    #[test]
    fn unit_normal_forms() {
        let mut e = Echelon::new(3);
        e.insert(sv(&[(0, 1), (2, -1)]));
        let (nf, d) = normal_form_of_unit(&e, 0);
        assert_eq!(d, BigInt::one());
        assert_eq!(nf, sv(&[(2, 1)]));
    }
}
