//! Distinguished classes: `α`, the products `m_t`, the wheel label `x` and
//! the vectors `v`, `w` spanning the preimage of `x`.

use num_traits::{One, Zero};

use super::compose::{compose_edge, OperadElement};
use super::model::GenusOneClass;
use crate::rational::{q, Q};
use crate::symrep::wedge::{add_term, wedge_of, WedgeVec};

/// `α_{2j+1} = [e_1 ∧ ... ∧ e_{2j}]` on flags `1..=2j+1`.
pub fn alpha(j: usize) -> GenusOneClass {
    let wedge: Vec<usize> = (1..=2 * j).collect();
    GenusOneClass::monomial((1..=2 * j + 1).collect(), &wedge, Q::one())
}

/// The product on flags `1..=t+1`.
pub fn m_t(t: usize) -> OperadElement {
    OperadElement::product((1..=t + 1).collect())
}

/// `x_{2j+1}`: graft a binary product onto each of the flags
/// `2j+1, 2j, ..., 4` of `α_{2j+1}`, in that order. Flags `1, 2, 3` stay;
/// flag `k ≥ 4` is replaced by the pair `2k-4, 2k-3`, so the result lives on
/// `1..=4j-1` and each pair is one loop of the theta graph.
pub fn x_class(j: usize) -> GenusOneClass {
    assert!(j >= 1 && 4 * j + 40 < 64, "j out of range");
    if j == 1 {
        return alpha(1);
    }
    // park the flags to be grafted at 40 + k while new pairs are created
    let park = |f: usize| if f >= 4 { 40 + f } else { f };
    let mut x = OperadElement::Genus1(alpha(j).relabel(park));
    for k in (4..=2 * j + 1).rev() {
        let product = OperadElement::product(vec![39, 2 * k - 4, 2 * k - 3]);
        x = compose_edge(&x, 40 + k, &product, 39)
            .expect("flags line up")
            .expect("genus one result");
    }
    match x {
        OperadElement::Genus1(c) => c,
        OperadElement::Genus0 { .. } => unreachable!("composition keeps genus one"),
    }
}

/// Sum over choices of one representative per loop not in `skip`, wedged in
/// loop order. Loop `i` (1-based) has representatives `2i+2, 2i+3`.
pub fn loop_sum(j: usize, skip: &[usize]) -> WedgeVec {
    let loops: Vec<usize> = (1..=2 * j - 2).filter(|i| !skip.contains(i)).collect();
    let mut acc = WedgeVec::from([(0u64, Q::one())]);
    for i in loops {
        let mut next = WedgeVec::new();
        for (&m, c) in &acc {
            for r in [2 * i + 2, 2 * i + 3] {
                let mut factors: Vec<usize> = crate::symrep::wedge::bits(m).collect();
                factors.push(r);
                let (s, m2) = wedge_of(&factors).expect("distinct");
                add_term(&mut next, m2, if s > 0 { c.clone() } else { -c.clone() });
            }
        }
        acc = next;
    }
    acc
}

fn prefix(head: &[usize], tail: &WedgeVec) -> WedgeVec {
    let mut out = WedgeVec::new();
    for (&m, c) in tail {
        let mut factors = head.to_vec();
        factors.extend(crate::symrep::wedge::bits(m));
        if let Some((s, m2)) = wedge_of(&factors) {
            add_term(&mut out, m2, if s > 0 { c.clone() } else { -c.clone() });
        }
    }
    out
}

fn combine(parts: &[(i64, WedgeVec)]) -> WedgeVec {
    let mut out = WedgeVec::new();
    for (c, v) in parts {
        for (&m, x) in v {
            add_term(&mut out, m, x * q(*c));
        }
    }
    out
}

/// The vectors and checks behind the preimage of `x_{2j+1}`.
#[derive(Clone, Debug)]
pub struct KernelIdentity {
    pub v: GenusOneClass,
    pub w: GenusOneClass,
    /// `[(2j-2) v - 3 w]`, expected to vanish.
    pub combination: GenusOneClass,
    /// `1∧2∧S ~ -1∧3∧S ~ 2∧3∧S ~ -1∧2∧3∧S_1`.
    pub claim_one: bool,
    /// `(-1)^{i-1} 1∧2∧3∧S_i ~ 1∧2∧3∧S_1` for every loop `i`.
    pub claim_two: bool,
    /// `[v] = c · x` with `c ≠ 0`.
    pub v_over_x: Option<Q>,
}

pub fn kernel_identity(j: usize) -> KernelIdentity {
    assert!(j >= 2, "the identity concerns j >= 2");
    let n = 4 * j - 1;
    let flags: Vec<usize> = (1..=n).collect();
    let class = |v: WedgeVec| GenusOneClass::new(flags.clone(), 2 * j, v);
    let s = loop_sum(j, &[]);
    let s_i = |i: usize| loop_sum(j, &[i]);
    let v = combine(&[
        (1, prefix(&[1, 2], &s)),
        (-1, prefix(&[1, 3], &s)),
        (1, prefix(&[2, 3], &s)),
    ]);
    let w_parts: Vec<(i64, WedgeVec)> = (1..=2 * j - 2)
        .map(|i| (if i % 2 == 0 { 1 } else { -1 }, prefix(&[1, 2, 3], &s_i(i))))
        .collect();
    let w = combine(&w_parts);
    let combination = combine(&[((2 * j - 2) as i64, v.clone()), (-3, w.clone())]);

    let t1 = class(prefix(&[1, 2, 3], &s_i(1)));
    let minus_t1 = t1.scale(&-Q::one());
    let claim_one = class(prefix(&[1, 2], &s)) == minus_t1
        && class(prefix(&[1, 3], &s)).scale(&-Q::one()) == minus_t1
        && class(prefix(&[2, 3], &s)) == minus_t1;
    let claim_two = (1..=2 * j - 2).all(|i| {
        let sign = if (i - 1) % 2 == 0 { Q::one() } else { -Q::one() };
        class(prefix(&[1, 2, 3], &s_i(i))).scale(&sign) == t1
    });
    let v = class(v);
    let v_over_x = v.ratio_to(&x_class(j)).filter(|c| !c.is_zero());
    KernelIdentity {
        w: class(w),
        combination: class(combination),
        v,
        claim_one,
        claim_two,
        v_over_x,
    }
}
