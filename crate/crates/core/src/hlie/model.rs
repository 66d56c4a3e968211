use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::linalg::{Rref, SparseVec};
use crate::rational::{format_q, Q};
use crate::symrep::relation_span;
use crate::symrep::wedge::{bits, Mask, WedgeVec};

type Cache = RwLock<HashMap<(usize, usize), Arc<Rref>>>;

/// Echelon basis of the relations in degree `i` on `n` flags, in positional
/// coordinates. Pivots are exactly the monomials through position `n - 1`.
pub fn relation_basis(n: usize, i: usize) -> Arc<Rref> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.read().expect("cache lock").get(&(n, i)) {
        return r.clone();
    }
    assert!(i < n, "degree must be below the arity");
    let r = Arc::new(if i == 0 { Rref::new() } else { relation_span(n - i, i) });
    debug_assert!(r.pivots().all(|&c| c < 1 << (n - 1)));
    cache.write().expect("cache lock").entry((n, i)).or_insert(r).clone()
}

/// Dimension of the model in arity `n` and degree `i`, computed from the
/// relation span.
pub fn model_dimension(n: usize, i: usize) -> usize {
    let all = binomial(n, i);
    all - relation_basis(n, i).rank()
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// A genus one class on an explicit set of flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenusOneClass {
    flags: Vec<usize>,
    degree: usize,
    coords: WedgeVec,
}

impl GenusOneClass {
    /// Reduces `v` (monomials over `flags`) to normal form.
    pub fn new(mut flags: Vec<usize>, degree: usize, v: WedgeVec) -> Self {
        flags.sort_unstable();
        assert!(degree < flags.len(), "degree must be below the arity");
        let coords = reduce(&flags, degree, v);
        GenusOneClass { flags, degree, coords }
    }

    pub fn zero(flags: Vec<usize>, degree: usize) -> Self {
        Self::new(flags, degree, WedgeVec::new())
    }

    pub fn monomial(flags: Vec<usize>, wedge: &[usize], c: Q) -> Self {
        let (s, m) = crate::symrep::wedge::wedge_of(wedge).expect("distinct factors");
        let c = if s > 0 { c } else { -c };
        Self::new(flags, wedge.len(), WedgeVec::from([(m, c)]))
    }

    pub fn flags(&self) -> &[usize] {
        &self.flags
    }

    pub fn arity(&self) -> usize {
        self.flags.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Normal form coordinates: monomials avoiding the largest flag.
    pub fn coords(&self) -> &WedgeVec {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let coords = if c.is_zero() {
            WedgeVec::new()
        } else {
            self.coords.iter().map(|(&m, x)| (m, x * c)).collect()
        };
        GenusOneClass {
            flags: self.flags.clone(),
            degree: self.degree,
            coords,
        }
    }

    pub fn add(&self, other: &GenusOneClass) -> Self {
        assert_eq!(self.flags, other.flags, "flag sets differ");
        assert_eq!(self.degree, other.degree, "degrees differ");
        let mut coords = self.coords.clone();
        for (&m, x) in &other.coords {
            crate::symrep::wedge::add_term(&mut coords, m, x.clone());
        }
        GenusOneClass {
            flags: self.flags.clone(),
            degree: self.degree,
            coords,
        }
    }

    /// Renames flags through an injective map and reduces on the new set.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let flags = self.flags.iter().map(|&f| map(f)).collect();
        let v = crate::symrep::wedge::act(&self.coords, map);
        Self::new(flags, self.degree, v)
    }

    /// If `self = c * other` for a scalar `c`, returns `c`.
    pub fn ratio_to(&self, other: &GenusOneClass) -> Option<Q> {
        if other.is_zero() {
            return self.is_zero().then(Q::zero);
        }
        let (m, x) = other.coords.iter().next().expect("nonzero");
        let c = self.coords.get(m).cloned().unwrap_or_else(Q::zero) / x;
        (*self == other.scale(&c)).then_some(c)
    }
}

impl fmt::Display for GenusOneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .map(|(&m, x)| {
                let s: Vec<String> = bits(m).map(|b| b.to_string()).collect();
                format!("{{{}}}: {}", s.join(","), format_q(x))
            })
            .collect();
        write!(f, "[{}]", terms.join("; "))
    }
}

fn reduce(flags: &[usize], degree: usize, v: WedgeVec) -> WedgeVec {
    let n = flags.len();
    let top = flags[n - 1];
    if v.keys().all(|&m| m >> top & 1 == 0) {
        return v.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    }
    let mut pos = HashMap::with_capacity(n);
    for (p, &f) in flags.iter().enumerate() {
        pos.insert(f, p);
    }
    let to_local = |m: Mask| -> Mask { bits(m).map(|b| 1u64 << pos[&b]).sum() };
    let to_global = |m: Mask| -> Mask { bits(m).map(|p| 1u64 << flags[p]).sum() };
    let basis = relation_basis(n, degree);
    let mut sv: SparseVec = v
        .into_iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(m, x)| {
            debug_assert_eq!(m.count_ones() as usize, degree);
            (crate::symrep::column_of(to_local(m), n), x)
        })
        .collect();
    basis.reduce(&mut sv);
    sv.into_iter()
        .map(|(c, x)| (to_global(crate::symrep::mask_of_column(c, n)), x))
        .collect()
}
