//! Murnaghan–Nakayama on beta sets, memoised per (shape, cycle type).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::{partitions, Partition};
use crate::rational::Q;

/// Character values indexed by cycle type.
pub type CharacterVector = BTreeMap<Partition, i64>;

type Memo = Mutex<HashMap<(Vec<usize>, Vec<usize>), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn from_beta(beta: &[usize]) -> Vec<usize> {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let l = b.len();
    b.iter()
        .enumerate()
        .map(|(i, &x)| x - (l - 1 - i))
        .filter(|&p| p > 0)
        .collect()
}

fn mn(shape: &[usize], cycles: &[usize]) -> i64 {
    if cycles.is_empty() {
        return i64::from(shape.is_empty());
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo().lock().expect("memo lock").get(&key) {
        return v;
    }
    let k = cycles[0];
    let l = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut next = beta.clone();
        next[idx] = b - k;
        let v = mn(&from_beta(&next), &cycles[1..]);
        total += if between % 2 == 0 { v } else { -v };
    }
    memo().lock().expect("memo lock").insert(key, total);
    total
}

/// Value of the irreducible character of shape `p` on cycle type `mu`.
pub fn character_value(p: &Partition, mu: &Partition) -> i64 {
    assert_eq!(p.size(), mu.size(), "sizes differ");
    mn(p.parts(), mu.parts())
}

pub fn character(p: &Partition) -> CharacterVector {
    partitions(p.size())
        .into_iter()
        .map(|mu| {
            let v = character_value(p, &mu);
            (mu, v)
        })
        .collect()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// Number of permutations of the given cycle type.
pub fn class_size(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (p, m) in counts {
        z *= BigInt::from(p).pow(m as u32) * factorial(m);
    }
    factorial(mu.size()) / z
}

/// `(1/n!) Σ |C| χ ψ` over the classes present in both vectors.
pub fn inner_product(a: &CharacterVector, b: &CharacterVector) -> Q {
    let mut total = BigInt::zero();
    let mut n = 0;
    for (mu, x) in a {
        n = mu.size();
        if let Some(y) = b.get(mu) {
            total += class_size(mu) * x * y;
        }
    }
    Q::new(total, factorial(n))
}

/// Cycle type of a permutation of `0..n`.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts)
}
