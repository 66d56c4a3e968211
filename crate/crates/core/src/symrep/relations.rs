//! The span of the orbit of `z = (id + Σ_{k≤t} (k, t+1)) e_{t+1} ∧ ... ∧ e_{t+2j}`
//! inside `Λ^{2j} Q^{t+2j}`.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_traits::{One, Zero};

use super::character::CharacterVector;
use super::partition::partitions;
use super::wedge::{act, add_term, Mask, WedgeVec};
use crate::linalg::{Rref, SparseVec};
use crate::rational::Q;

/// `z` for positions `0..n` with the wedge occupying the last `i` slots,
/// written with 0-based indices.
pub fn relation_vector(t: usize, i: usize) -> WedgeVec {
    let n = t + i;
    let top: Mask = ((1u64 << i) - 1) << t;
    let mut z = WedgeVec::new();
    add_term(&mut z, top, Q::one());
    for k in 0..t {
        let swapped = act(&BTreeMap::from([(top, Q::one())]), |x| {
            if x == k {
                t
            } else if x == t {
                k
            } else {
                x
            }
        });
        for (m, c) in swapped {
            add_term(&mut z, m, c);
        }
    }
    debug_assert!(z.keys().all(|&m| m < 1 << n));
    z
}

/// Column order placing monomials through the top index first, so that
/// echelon pivots always contain it.
pub fn column_of(mask: Mask, n: usize) -> usize {
    let top = 1u64 << (n - 1);
    if mask & top != 0 {
        (mask & !top) as usize
    } else {
        (top + mask) as usize
    }
}

pub fn mask_of_column(col: usize, n: usize) -> Mask {
    let top = 1u64 << (n - 1);
    let c = col as u64;
    if c < top {
        c | top
    } else {
        c - top
    }
}

fn to_columns(v: &WedgeVec, n: usize) -> SparseVec {
    v.iter().map(|(&m, c)| (column_of(m, n), c.clone())).collect()
}

/// Reduced echelon basis of the span of the `S_{t+i}` orbit of `z`, in the
/// column order of [`column_of`].
pub fn relation_span(t: usize, i: usize) -> Rref {
    let n = t + i;
    let z = relation_vector(t, i);
    let mut rref = Rref::new();
    if z.is_empty() {
        return rref;
    }
    let key = |v: &WedgeVec| -> Vec<(Mask, bool)> { v.iter().map(|(&m, c)| (m, c > &Q::zero())).collect() };
    let mut seen = HashSet::new();
    seen.insert(key(&z));
    let mut queue = VecDeque::from([z]);
    while let Some(v) = queue.pop_front() {
        rref.insert(to_columns(&v, n));
        let swap = act(&v, |x| match x {
            0 => 1,
            1 => 0,
            _ => x,
        });
        let cycle = act(&v, |x| (x + 1) % n);
        for w in [swap, cycle] {
            if seen.insert(key(&w)) {
                queue.push_back(w);
            }
        }
    }
    rref
}

pub fn relation_span_dimension(t: usize, j: usize) -> usize {
    relation_span(t, 2 * j).rank()
}

fn permutation_of_type(parts: &[usize]) -> Vec<usize> {
    let n: usize = parts.iter().sum();
    let mut perm = vec![0; n];
    let mut start = 0;
    for &p in parts {
        for k in 0..p {
            perm[start + k] = start + (k + 1) % p;
        }
        start += p;
    }
    perm
}

/// Character of the symmetric group acting on the orbit span.
pub fn relation_span_character(t: usize, j: usize) -> CharacterVector {
    let i = 2 * j;
    let n = t + i;
    let span = relation_span(t, i);
    partitions(n)
        .into_iter()
        .map(|mu| {
            let perm = permutation_of_type(mu.parts());
            let mut trace = Q::zero();
            for (&p, row) in span.rows() {
                let v: WedgeVec = row.iter().map(|(&c, x)| (mask_of_column(c, n), x.clone())).collect();
                let image = act(&v, |x| perm[x]);
                if let Some(x) = image.get(&mask_of_column(p, n)) {
                    trace += x;
                }
            }
            assert!(trace.is_integer(), "trace of a permutation action is integral");
            let value = trace.to_integer().try_into().expect("small trace");
            (mu, value)
        })
        .collect()
}
