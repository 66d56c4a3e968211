use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::summand::SummandKey;
use super::FeynmanTransform;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, GraphJson, ModularGraph};
use crate::rational::{format_q, parse_q, Q};

/// Basis vector `index` of the summand `key`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisRef {
    pub key: Arc<SummandKey>,
    pub index: usize,
}

/// A finite linear combination of basis elements of `B(P)(genus, legs)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledChain {
    pub genus: usize,
    pub legs: usize,
    terms: BTreeMap<BasisRef, Q>,
}

impl LabeledChain {
    pub fn zero(genus: usize, legs: usize) -> Self {
        LabeledChain {
            genus,
            legs,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(b: BasisRef) -> Self {
        let mut c = Self::zero(b.key.graph.total_genus(), b.key.graph.leg_count());
        c.terms.insert(b, Q::from_integer(1.into()));
        c
    }

    pub fn terms(&self) -> &BTreeMap<BasisRef, Q> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: BasisRef, x: Q) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                if !x.is_zero() {
                    v.insert(x);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += x;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LabeledChain, c: &Q) {
        for (b, x) in &other.terms {
            self.add_term(b.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.genus, self.legs);
        out.add_scaled(self, c);
        out
    }

    /// Coordinates on the summand of `graph` (canonical) in internal
    /// degree `degree`, as a dense vector.
    pub fn project(&self, transform: &FeynmanTransform, graph: &ModularGraph, degree: usize) -> Vec<Q> {
        let s = transform.summand(graph, degree);
        let mut v = vec![Q::zero(); s.dim()];
        for (b, x) in &self.terms {
            if b.key.graph == *graph && b.key.degree == degree {
                v[b.index] = x.clone();
            }
        }
        v
    }

    /// Only the components on graphs accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(&ModularGraph) -> bool) -> Self {
        LabeledChain {
            genus: self.genus,
            legs: self.legs,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(&b.key.graph))
                .map(|(b, x)| (b.clone(), x.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self, transform: &FeynmanTransform) -> ChainJson {
        let terms = self
            .terms
            .iter()
            .map(|(b, x)| {
                let g = &b.key.graph;
                let offset: usize = transform
                    .summands_of(g)
                    .iter()
                    .take_while(|s| s.degree() < b.key.degree)
                    .map(|s| s.dim())
                    .sum();
                TermJson {
                    graph: g.to_json(),
                    orientation: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
                    basis_index: offset + b.index,
                    coeff: format_q(x),
                }
            })
            .collect();
        ChainJson {
            g: self.genus,
            n: self.legs,
            terms,
        }
    }

    pub fn from_json(transform: &FeynmanTransform, j: &ChainJson) -> Result<Self> {
        let mut out = Self::zero(j.g, j.n);
        for t in &j.terms {
            let g = ModularGraph::try_from(&t.graph)?;
            if canonical_form(&g)?.0 != g {
                return Err(Error::InvalidGraph("chain terms must use canonical graphs".into()));
            }
            if g.total_genus() != j.g || g.leg_count() != j.n {
                return Err(Error::InvalidGraph("term has the wrong type".into()));
            }
            let mut sign = 1;
            let mut order = Vec::new();
            for &[a, b] in &t.orientation {
                let e = g
                    .edge_of_flag(a)
                    .filter(|&e| g.edge_of_flag(b) == Some(e))
                    .ok_or_else(|| Error::InvalidGraph(format!("[{a},{b}] is not an edge")))?;
                if order.contains(&e) {
                    return Err(Error::InvalidGraph("edge listed twice".into()));
                }
                order.push(e);
            }
            if order.len() != g.edge_count() {
                return Err(Error::InvalidGraph("orientation must list every edge".into()));
            }
            sign *= crate::orientation::permutation_sign(&order);
            let mut rest = t.basis_index;
            let mut placed = None;
            for s in transform.summands_of(&g) {
                if rest < s.dim() {
                    placed = Some(BasisRef {
                        key: Arc::new(s.key.clone()),
                        index: rest,
                    });
                    break;
                }
                rest -= s.dim();
            }
            let b =
                placed.ok_or_else(|| Error::InvalidParameter(format!("basis index {} out of range", t.basis_index)))?;
            let x = parse_q(&t.coeff)?;
            out.add_term(b, if sign > 0 { x } else { -x });
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub graph: GraphJson,
    pub orientation: Vec<[usize; 2]>,
    pub basis_index: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub g: usize,
    pub n: usize,
    pub terms: Vec<TermJson>,
}
