//! Mod 2 edge orders. An orientation is an ordering of the edges of a graph;
//! reordering by an odd permutation negates it.

use num_traits::Zero;

use crate::graph::{GraphIsomorphism, ModularGraph};
use crate::linalg::RationalMatrix;
use crate::rational::Q;

/// Which determinant line the edge order lives in. The two only differ in
/// the degree they contribute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    /// Edges in degree -1.
    K,
    /// Edges in degree +1.
    KDual,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    /// Edge indices of the host graph, listed in order.
    pub edge_order: Vec<usize>,
    pub twist: Twist,
}

impl Orientation {
    pub fn standard(edges: usize) -> Self {
        Orientation {
            edge_order: (0..edges).collect(),
            twist: Twist::KDual,
        }
    }

    pub fn new(edge_order: Vec<usize>) -> Self {
        Orientation {
            edge_order,
            twist: Twist::KDual,
        }
    }

    pub fn degree(&self) -> i64 {
        match self.twist {
            Twist::K => -(self.edge_order.len() as i64),
            Twist::KDual => self.edge_order.len() as i64,
        }
    }

    /// Sign relating this order to the increasing one.
    pub fn sign(&self) -> i32 {
        permutation_sign(&self.edge_order)
    }

    /// The increasing order together with the sign that relates it to `self`.
    pub fn normalized(&self) -> (i32, Orientation) {
        let mut sorted = self.edge_order.clone();
        sorted.sort_unstable();
        (
            self.sign(),
            Orientation {
                edge_order: sorted,
                twist: self.twist,
            },
        )
    }
}

/// Sign of a sequence of distinct keys relative to its sorted order.
pub fn permutation_sign<T: Ord>(p: &[T]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sorts in place and returns the sign of the sorting permutation.
pub fn sort_with_sign<T: Ord>(v: &mut [T]) -> i32 {
    let s = permutation_sign(v);
    v.sort();
    s
}

/// Pushes `o` forward along `iso` and compares with `target`.
pub fn iso_sign(
    iso: &GraphIsomorphism,
    src: &ModularGraph,
    o: &Orientation,
    tgt: &ModularGraph,
    target: &Orientation,
) -> i32 {
    let image = iso.edge_permutation(src, tgt);
    let pushed: Vec<usize> = o.edge_order.iter().map(|&e| image[e]).collect();
    let mut pos = vec![0; tgt.edge_count()];
    for (i, &e) in target.edge_order.iter().enumerate() {
        pos[e] = i;
    }
    permutation_sign(&pushed.iter().map(|&e| pos[e]).collect::<Vec<_>>())
}

/// Factors the edge order `o` as (quotient edges) ∧ (contracted edges), each
/// part keeping the order induced from `o`. The returned sign is that of the
/// shuffle moving the contracted edges to the back.
pub fn contraction_orientation(o: &Orientation, contracted: &[usize]) -> (i32, Vec<usize>, Vec<usize>) {
    let mut quotient = Vec::new();
    let mut nest = Vec::new();
    let mut inversions = 0usize;
    for &e in &o.edge_order {
        if contracted.contains(&e) {
            nest.push(e);
        } else {
            inversions += nest.len();
            quotient.push(e);
        }
    }
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    (sign, quotient, nest)
}

/// Whether averaging `v` over `Aut(g)` gives zero, where each automorphism
/// acts by its edge sign times `label_action`.
pub fn vanishes_under_automorphisms(
    g: &ModularGraph,
    automorphisms: &[GraphIsomorphism],
    label_action: impl Fn(&GraphIsomorphism) -> RationalMatrix,
    v: &[Q],
) -> bool {
    let mut total = vec![Q::zero(); v.len()];
    for a in automorphisms {
        let s = a.edge_sign(g, g);
        let image = label_action(a).mul_vec(v);
        for (t, x) in total.iter_mut().zip(image) {
            if s > 0 {
                *t += x;
            } else {
                *t -= x;
            }
        }
    }
    total.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_signs() {
        let o = Orientation::standard(6);
        assert_eq!(contraction_orientation(&o, &[5]).0, 1);
        assert_eq!(contraction_orientation(&o, &[0]).0, -1);
        let (s, q, n) = contraction_orientation(&o, &[0, 4, 5]);
        assert_eq!((s, q, n), (-1, vec![1, 2, 3], vec![0, 4, 5]));
    }

    #[test]
    fn signs_of_permutations() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
        let mut v = vec![3, 1, 2];
        assert_eq!(sort_with_sign(&mut v), 1);
        assert_eq!(v, vec![1, 2, 3]);
    }
}
