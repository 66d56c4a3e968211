//! `S_2 ≀ S_q` inside `S_{2q}` and restriction multiplicities of its sign of
//! block permutation character `L_q`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::character::{character_value, class_size, cycle_type};
use super::partition::{partitions, Partition};
use crate::orientation::permutation_sign;

/// `q` sign bits and a permutation of the `q` blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub flips: Vec<bool>,
    pub blocks: Vec<usize>,
}

impl WreathElement {
    /// Block `i` holds points `2i` and `2i + 1`; point `2i + b` goes to
    /// `2τ(i) + (b xor flip_i)`.
    pub fn to_permutation(&self) -> Vec<usize> {
        let q = self.blocks.len();
        let mut perm = vec![0; 2 * q];
        for i in 0..q {
            for b in 0..2 {
                perm[2 * i + b] = 2 * self.blocks[i] + (b ^ usize::from(self.flips[i]));
            }
        }
        perm
    }

    pub fn block_sign(&self) -> i32 {
        permutation_sign(&self.blocks)
    }
}

pub fn enumerate_wreath(q: usize) -> Vec<WreathElement> {
    let mut out = Vec::new();
    for blocks in (0..q).permutations(q) {
        for bits in 0u32..(1 << q) {
            out.push(WreathElement {
                flips: (0..q).map(|i| bits >> i & 1 == 1).collect(),
                blocks: blocks.clone(),
            });
        }
    }
    out
}

type Table = BTreeMap<(Partition, i32), u64>;

/// Number of wreath elements per (cycle type in `S_{2q}`, block sign).
pub fn wreath_class_table(q: usize) -> Arc<Table> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&q) {
        return t.clone();
    }
    let mut table = Table::new();
    for w in enumerate_wreath(q) {
        *table
            .entry((cycle_type(&w.to_permutation()), w.block_sign()))
            .or_default() += 1;
    }
    let table = Arc::new(table);
    cache.lock().expect("cache lock").insert(q, table.clone());
    table
}

fn wreath_order(q: usize) -> BigInt {
    (1..=q).fold(BigInt::from(1u64 << q), |a, k| a * k)
}

/// Multiplicity of `L_q` in the restriction of `V_hook` to `S_2 ≀ S_q`.
pub fn wreath_hook_multiplicity(hook: &Partition, q: usize) -> u64 {
    assert_eq!(hook.size(), 2 * q, "shape must have 2q boxes");
    let mut total = BigInt::zero();
    for ((mu, s), count) in wreath_class_table(q).iter() {
        total += BigInt::from(*count) * character_value(hook, mu) * s;
    }
    let (m, r) = num_integer::Integer::div_rem(&total, &wreath_order(q));
    assert!(r.is_zero(), "multiplicity is integral");
    m.to_u64().expect("nonnegative multiplicity")
}

/// Multiplicity of `L_q ⊠ V_beta` in the restriction of `V_shape` to
/// `(S_2 ≀ S_q) × S_{|shape| - 2q}`.
pub fn full_restriction_multiplicity(shape: &Partition, q: usize, beta: &Partition) -> u64 {
    let m = shape.size().checked_sub(2 * q).expect("2q fits in the shape");
    assert_eq!(beta.size(), m, "beta must partition the complement");
    let mut total = BigInt::zero();
    let rest = partitions(m);
    for ((mu, s), count) in wreath_class_table(q).iter() {
        let mut inner = BigInt::zero();
        for rho in &rest {
            let chi = character_value(shape, &mu.union(rho));
            if chi != 0 {
                inner += class_size(rho) * chi * character_value(beta, rho);
            }
        }
        total += BigInt::from(*count) * s * inner;
    }
    let order = wreath_order(q) * (1..=m).fold(BigInt::from(1), |a, k| a * k);
    let (mult, r) = num_integer::Integer::div_rem(&total, &order);
    assert!(r.is_zero(), "multiplicity is integral");
    mult.to_u64().expect("nonnegative multiplicity")
}
