//! Restriction to the cyclic group generated by a long cycle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::character::character_value;
use super::partition::Partition;

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `c_m(i)`: the sum of `ζ^i` over primitive `m`-th roots of unity.
pub fn ramanujan_sum(m: usize, i: usize) -> i64 {
    let g = m.gcd(&i);
    (1..=g)
        .filter(|e| g.is_multiple_of(*e))
        .map(|e| mobius(m / e) * e as i64)
        .sum()
}

/// Multiplicity of the character `σ ↦ ω^i` of `Z_N` (ω = e^{2πi/N}, σ the
/// standard `N`-cycle) in the restriction of `V_p`, `N = |p|`.
///
/// `σ^k` has cycle type `(N/d)^d` with `d = gcd(k, N)`, and summing `ω^{-ik}`
/// over the `k` sharing that gcd is a Ramanujan sum.
pub fn cyclic_multiplicity(p: &Partition, i: usize) -> u64 {
    let n = p.size();
    assert!(i < n, "index must be below the group order");
    let mut total = BigInt::zero();
    for m in (1..=n).filter(|m| n.is_multiple_of(*m)) {
        let cycles = Partition::new(vec![m; n / m]).expect("rectangular");
        total += BigInt::from(character_value(p, &cycles)) * ramanujan_sum(m, i);
    }
    let (q, r) = total.div_rem(&BigInt::from(n));
    assert!(r.is_zero(), "multiplicity is integral");
    q.to_u64().expect("nonnegative multiplicity")
}
