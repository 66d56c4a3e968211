use num_traits::{One, Zero};

use super::model::GenusOneClass;
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::symrep::wedge::{add_term, bits, wedge_of, WedgeVec};

/// An element of `H_Lie` on an explicit flag set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperadElement {
    /// `coeff` times the commutative product on `flags`.
    Genus0 {
        flags: Vec<usize>,
        coeff: Q,
    },
    Genus1(GenusOneClass),
}

impl OperadElement {
    pub fn product(mut flags: Vec<usize>) -> Self {
        flags.sort_unstable();
        OperadElement::Genus0 { flags, coeff: Q::one() }
    }

    pub fn flags(&self) -> &[usize] {
        match self {
            OperadElement::Genus0 { flags, .. } => flags,
            OperadElement::Genus1(c) => c.flags(),
        }
    }

    pub fn genus(&self) -> u32 {
        match self {
            OperadElement::Genus0 { .. } => 0,
            OperadElement::Genus1(_) => 1,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            OperadElement::Genus0 { .. } => 0,
            OperadElement::Genus1(c) => c.degree(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            OperadElement::Genus0 { coeff, .. } => coeff.is_zero(),
            OperadElement::Genus1(c) => c.is_zero(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        match self {
            OperadElement::Genus0 { flags, coeff } => OperadElement::Genus0 {
                flags: flags.clone(),
                coeff: coeff * c,
            },
            OperadElement::Genus1(x) => OperadElement::Genus1(x.scale(c)),
        }
    }
}

fn check_flag(x: &OperadElement, f: usize) -> Result<()> {
    if x.flags().contains(&f) {
        Ok(())
    } else {
        Err(Error::ArityMismatch(format!("flag {f} is not among {:?}", x.flags())))
    }
}

/// Substitutes `e_f -> Σ_{k in repl} e_k` in every monomial.
pub(crate) fn substitute(v: &WedgeVec, f: usize, repl: &[usize]) -> WedgeVec {
    let mut out = WedgeVec::new();
    for (&m, c) in v {
        if m >> f & 1 == 0 {
            add_term(&mut out, m, c.clone());
            continue;
        }
        let factors: Vec<usize> = bits(m).collect();
        for &k in repl {
            let replaced: Vec<usize> = factors.iter().map(|&b| if b == f { k } else { b }).collect();
            if let Some((s, m2)) = wedge_of(&replaced) {
                add_term(&mut out, m2, if s > 0 { c.clone() } else { -c.clone() });
            }
        }
    }
    out
}

/// Grafts `b` onto `a` along the flags `fa` of `a` and `fb` of `b`.
/// Returns `None` when the result has genus two, where the truncation is zero.
pub fn compose_edge(a: &OperadElement, fa: usize, b: &OperadElement, fb: usize) -> Result<Option<OperadElement>> {
    check_flag(a, fa)?;
    check_flag(b, fb)?;
    let rest = |x: &OperadElement, f: usize| -> Vec<usize> { x.flags().iter().copied().filter(|&g| g != f).collect() };
    let (ra, rb) = (rest(a, fa), rest(b, fb));
    if ra.iter().any(|f| rb.contains(f)) {
        return Err(Error::ArityMismatch("flag sets overlap after gluing".into()));
    }
    let mut flags = ra.clone();
    flags.extend_from_slice(&rb);
    Ok(match (a, b) {
        (OperadElement::Genus0 { coeff: x, .. }, OperadElement::Genus0 { coeff: y, .. }) => {
            flags.sort_unstable();
            Some(OperadElement::Genus0 { flags, coeff: x * y })
        }
        (OperadElement::Genus0 { coeff, .. }, OperadElement::Genus1(c)) => {
            let v = substitute(c.coords(), fb, &ra);
            Some(OperadElement::Genus1(
                GenusOneClass::new(flags, c.degree(), v).scale(coeff),
            ))
        }
        (OperadElement::Genus1(c), OperadElement::Genus0 { coeff, .. }) => {
            let v = substitute(c.coords(), fa, &rb);
            Some(OperadElement::Genus1(
                GenusOneClass::new(flags, c.degree(), v).scale(coeff),
            ))
        }
        (OperadElement::Genus1(_), OperadElement::Genus1(_)) => None,
    })
}

/// Glues two flags of the same element. A genus zero product becomes the
/// degree zero genus one class with the same coefficient; genus one goes to
/// zero.
pub fn self_glue(a: &OperadElement, f1: usize, f2: usize) -> Result<Option<OperadElement>> {
    check_flag(a, f1)?;
    check_flag(a, f2)?;
    if f1 == f2 {
        return Err(Error::ArityMismatch("cannot glue a flag to itself".into()));
    }
    Ok(match a {
        OperadElement::Genus0 { flags, coeff } => {
            let rest: Vec<usize> = flags.iter().copied().filter(|&g| g != f1 && g != f2).collect();
            let v = if coeff.is_zero() {
                WedgeVec::new()
            } else {
                WedgeVec::from([(0, coeff.clone())])
            };
            Some(OperadElement::Genus1(GenusOneClass::new(rest, 0, v)))
        }
        OperadElement::Genus1(_) => None,
    })
}
