//! Incremental reduced row echelon form over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::matrix::axpy;
use super::{RationalMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::rational::Q;

/// Reduced row echelon basis of a subspace, grown one vector at a time.
/// Pivots are leading entries, so for a fixed column order the result is
/// the unique reduced echelon basis of the span.
#[derive(Clone, Debug, Default)]
pub struct Rref {
    rows: BTreeMap<usize, SparseVec>,
}

impl Rref {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    pub fn rows(&self) -> &BTreeMap<usize, SparseVec> {
        &self.rows
    }

    /// Subtracts the span from `v`, leaving only non-pivot coordinates.
    pub fn reduce(&self, v: &mut SparseVec) {
        let hits: Vec<usize> = v.keys().copied().filter(|c| self.rows.contains_key(c)).collect();
        for p in hits {
            if let Some(c) = v.get(&p).cloned() {
                axpy(v, &-c, &self.rows[&p]);
            }
        }
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        self.reduce(&mut v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = Q::one() / lead;
        for x in v.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &v);
            }
        }
        self.rows.insert(p, v);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_empty()
    }
}

/// A basis of the null space of `m`.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Q>> {
    let mut r = Rref::new();
    for row in m.row_vectors() {
        r.insert(row);
    }
    (0..m.cols())
        .filter(|c| !r.is_pivot(*c))
        .map(|free| {
            let mut v = vec![Q::zero(); m.cols()];
            v[free] = Q::one();
            for (&p, row) in r.rows() {
                if let Some(x) = row.get(&free) {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect()
}

/// Whether `v` lies in the column space of `m`.
pub fn in_span(v: &[Q], m: &RationalMatrix) -> Result<bool> {
    if v.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: v.len(),
        });
    }
    let mut r = Rref::new();
    for c in m.columns() {
        r.insert(c.clone());
    }
    let w: SparseVec = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect();
    Ok(r.contains(&w))
}
