//! Exterior powers of the permutation representation in the monomial basis.
//! A monomial `e_S` is stored as a bitmask of `S`, factors in increasing
//! order.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::Q;

pub type Mask = u64;

/// A linear combination of sorted wedge monomials.
pub type WedgeVec = BTreeMap<Mask, Q>;

pub fn bits(m: Mask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| m >> i & 1 == 1)
}

/// `e_{m_1} ∧ ... ∧ e_{m_k}` for an arbitrary list of indices: the sorted
/// mask and the sign, or `None` if an index repeats.
pub fn wedge_of(indices: &[usize]) -> Option<(i32, Mask)> {
    let mut mask = 0u64;
    let mut sign = 1;
    for &i in indices {
        if mask >> i & 1 == 1 {
            return None;
        }
        // i is moved past the larger indices already present
        if (mask >> i).count_ones() % 2 == 1 {
            sign = -sign;
        }
        mask |= 1 << i;
    }
    Some((sign, mask))
}

/// Applies a map on indices to a monomial.
pub fn permute(mask: Mask, perm: impl Fn(usize) -> usize) -> (i32, Mask) {
    let images: Vec<usize> = bits(mask).map(perm).collect();
    wedge_of(&images).expect("map is injective")
}

pub fn add_term(v: &mut WedgeVec, mask: Mask, c: Q) {
    let e = v.entry(mask).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&mask);
    }
}

pub fn act(v: &WedgeVec, perm: impl Fn(usize) -> usize) -> WedgeVec {
    let mut out = WedgeVec::new();
    for (&m, c) in v {
        let (s, m2) = permute(m, &perm);
        add_term(&mut out, m2, if s > 0 { c.clone() } else { -c.clone() });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(wedge_of(&[0, 1, 2]), Some((1, 0b111)));
        assert_eq!(wedge_of(&[1, 0, 2]), Some((-1, 0b111)));
        assert_eq!(wedge_of(&[2, 0, 1]), Some((1, 0b111)));
        assert_eq!(wedge_of(&[2, 2]), None);
        assert_eq!(permute(0b011, |i| 1 - i), (-1, 0b011));
    }
}
