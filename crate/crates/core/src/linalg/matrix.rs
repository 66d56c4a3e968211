use std::collections::BTreeMap;
use std::fmt::Write;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{format_q, Q};

/// Sparse vector: index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Q>;

/// Adds `c * src` into `dst`, dropping entries that cancel.
pub fn axpy(dst: &mut SparseVec, c: &Q, src: &SparseVec) {
    for (&i, x) in src {
        let entry = dst.entry(i).or_insert_with(Q::zero);
        *entry += c * x;
        if entry.is_zero() {
            dst.remove(&i);
        }
    }
}

/// Column-major sparse rational matrix with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.cols[i].insert(i, Q::from_integer(1.into()));
        }
        m
    }

    /// Builds from columns, dropping zeros. Panics on out-of-range rows.
    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        let cols = cols
            .into_iter()
            .map(|c| {
                assert!(c.keys().all(|&r| r < rows), "row index out of range");
                c.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        RationalMatrix { rows, cols }
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(nrows, ncols);
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn set(&mut self, r: usize, c: usize, x: Q) {
        assert!(r < self.rows && c < self.cols.len(), "index out of range");
        if x.is_zero() {
            self.cols[c].remove(&r);
        } else {
            self.cols[c].insert(r, x);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.cols[c].get(&r).cloned().unwrap_or_else(Q::zero)
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut rows = vec![SparseVec::new(); self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, x) in col {
                rows[r].insert(c, x.clone());
            }
        }
        rows
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Nonzero entries sorted by (row, col).
    pub fn entries(&self) -> Vec<(usize, usize, Q)> {
        let mut out: Vec<(usize, usize, Q)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, x)| (r, c, x.clone())))
            .collect();
        out.sort_by_key(|e| (e.0, e.1));
        out
    }

    pub fn transpose(&self) -> Self {
        RationalMatrix {
            rows: self.cols.len(),
            cols: self.row_vectors(),
        }
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                found: other.rows,
            });
        }
        let cols = other
            .cols
            .iter()
            .map(|oc| {
                let mut out = SparseVec::new();
                for (&k, x) in oc {
                    axpy(&mut out, x, &self.cols[k]);
                }
                out
            })
            .collect();
        Ok(RationalMatrix { rows: self.rows, cols })
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols(), "dimension mismatch");
        let mut out = vec![Q::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (&r, y) in &self.cols[c] {
                out[r] += x * y;
            }
        }
        out
    }

    pub fn select_columns(&self, which: &[usize]) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: which.iter().map(|&c| self.cols[c].clone()).collect(),
        }
    }

    pub fn select_rows(&self, which: &[usize]) -> RationalMatrix {
        let mut pos = vec![None; self.rows];
        for (i, &r) in which.iter().enumerate() {
            pos[r] = Some(i);
        }
        RationalMatrix {
            rows: which.len(),
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().filter_map(|(&r, x)| pos[r].map(|i| (i, x.clone()))).collect())
                .collect(),
        }
    }

    /// Coordinate list `row col p/q`, one line per nonzero entry, sorted.
    pub fn to_coordinate_text(&self) -> String {
        let mut s = String::new();
        for (r, c, x) in self.entries() {
            writeln!(s, "{r} {c} {}", format_q(&x)).expect("write to string");
        }
        s
    }
}
