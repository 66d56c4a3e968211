//! Summands `K*(γ) ⊗_{Aut γ} A(γ)` with explicit bases.
//!
//! Labels are tuples of normal form monomials, one per genus one vertex in
//! increasing vertex order; genus zero vertices carry the product. The
//! coinvariant quotient is computed from the relations `g·b - b` over a
//! generating set of the automorphism group; its basis is the set of label
//! tuples that are not echelon pivots of those relations.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::Operad;
use crate::graph::{automorphism_generators, GraphIsomorphism, ModularGraph, VertexId};
use crate::hlie::GenusOneClass;
use crate::linalg::{RationalMatrix, Rref, SparseVec};
use crate::rational::Q;
use crate::symrep::wedge::{bits, Mask, WedgeVec};

/// A canonical graph together with a total internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SummandKey {
    pub graph: ModularGraph,
    pub degree: usize,
}

pub type LabelTuple = Vec<Mask>;

#[derive(Clone, Debug)]
pub struct Summand {
    pub key: SummandKey,
    genus_one: Vec<VertexId>,
    tuples: Vec<LabelTuple>,
    index: HashMap<LabelTuple, usize>,
    relations: Rref,
    free: Vec<usize>,
    generators: Vec<GraphIsomorphism>,
}

fn subsets(pool: &[usize], k: usize) -> Vec<Mask> {
    let mut out = Vec::new();
    fn go(pool: &[usize], k: usize, start: usize, acc: Mask, out: &mut Vec<Mask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k {
                break;
            }
            go(pool, k - 1, i + 1, acc | 1 << pool[i], out);
        }
    }
    go(pool, k, 0, 0, &mut out);
    out
}

fn label_tuples(operad: Operad, g: &ModularGraph, genus_one: &[VertexId], s: usize) -> Vec<LabelTuple> {
    let allowed = match operad {
        Operad::Com => g.max_vertex_genus() == 0,
        Operad::HLie => g.max_vertex_genus() <= 1,
    };
    if !allowed {
        return Vec::new();
    }
    let mut out = Vec::new();
    fn go(g: &ModularGraph, genus_one: &[VertexId], rest: usize, acc: &mut LabelTuple, out: &mut Vec<LabelTuple>) {
        let Some((&v, tail)) = genus_one.split_first() else {
            if rest == 0 {
                out.push(acc.clone());
            }
            return;
        };
        let flags = g.flags_at(v);
        let pool = &flags[..flags.len() - 1];
        for d in (0..=pool.len().min(rest)).step_by(2) {
            for m in subsets(pool, d) {
                acc.push(m);
                go(g, tail, rest - d, acc, out);
                acc.pop();
            }
        }
    }
    go(g, genus_one, s, &mut Vec::new(), &mut out);
    out
}

/// Expands a product of classes (one per position) into label tuples.
pub(crate) fn expand(classes: &[GenusOneClass], scale: &Q) -> Vec<(LabelTuple, Q)> {
    let mut acc: Vec<(LabelTuple, Q)> = vec![(Vec::new(), scale.clone())];
    for c in classes {
        let mut next = Vec::with_capacity(acc.len() * c.coords().len());
        for (t, x) in &acc {
            for (&m, y) in c.coords() {
                let mut t2 = t.clone();
                t2.push(m);
                next.push((t2, x * y));
            }
        }
        acc = next;
    }
    acc
}

pub(crate) fn genus_one_vertices(g: &ModularGraph) -> Vec<VertexId> {
    (0..g.vertex_count()).filter(|&v| g.genus_of(v) == 1).collect()
}

/// Pushes labels along an isomorphism `iso: src -> tgt`. `classes` gives
/// the class at each genus one vertex of `src`; the result is expanded in
/// the tuple coordinates of `tgt`.
pub(crate) fn push_labels(
    classes: &[(VertexId, GenusOneClass)],
    iso: &GraphIsomorphism,
    tgt: &ModularGraph,
    scale: &Q,
) -> Vec<(LabelTuple, Q)> {
    let order = genus_one_vertices(tgt);
    let mut placed: Vec<Option<GenusOneClass>> = vec![None; order.len()];
    for (v, c) in classes {
        let w = iso.vertex_map[*v];
        let pos = order
            .iter()
            .position(|&x| x == w)
            .expect("genus one vertex maps to genus one vertex");
        placed[pos] = Some(c.relabel(|f| iso.flag_map[f]));
    }
    let placed: Vec<GenusOneClass> = placed.into_iter().map(|c| c.expect("every vertex labelled")).collect();
    expand(&placed, scale)
}

impl Summand {
    pub fn build(operad: Operad, key: SummandKey) -> Summand {
        let g = &key.graph;
        let genus_one = genus_one_vertices(g);
        let tuples = label_tuples(operad, g, &genus_one, key.degree);
        let index: HashMap<LabelTuple, usize> = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let generators = if tuples.is_empty() {
            Vec::new()
        } else {
            automorphism_generators(g)
        };
        let mut summand = Summand {
            key,
            genus_one,
            tuples,
            index,
            relations: Rref::new(),
            free: Vec::new(),
            generators,
        };
        let mut relations = Rref::new();
        for a in &summand.generators {
            for b in 0..summand.tuples.len() {
                let mut r = summand.act(a, b);
                let e = r.entry(b).or_insert_with(Q::zero);
                *e -= Q::one();
                if e.is_zero() {
                    r.remove(&b);
                }
                relations.insert(r);
            }
        }
        summand.free = (0..summand.tuples.len()).filter(|&i| !relations.is_pivot(i)).collect();
        summand.relations = relations;
        summand
    }

    pub fn graph(&self) -> &ModularGraph {
        &self.key.graph
    }

    pub fn degree(&self) -> usize {
        self.key.degree
    }

    /// Dimension of the coinvariants.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Dimension before taking coinvariants.
    pub fn label_dim(&self) -> usize {
        self.tuples.len()
    }

    pub fn genus_one(&self) -> &[VertexId] {
        &self.genus_one
    }

    pub fn generators(&self) -> &[GraphIsomorphism] {
        &self.generators
    }

    /// Label tuple representing basis vector `k`.
    pub fn representative(&self, k: usize) -> &LabelTuple {
        &self.tuples[self.free[k]]
    }

    pub fn tuple_index(&self, t: &LabelTuple) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn tuples(&self) -> &[LabelTuple] {
        &self.tuples
    }

    /// The class at each genus one vertex for a label tuple.
    pub fn classes_of(&self, t: &LabelTuple) -> Vec<(VertexId, GenusOneClass)> {
        self.genus_one
            .iter()
            .zip(t)
            .map(|(&v, &m)| {
                let flags = self.key.graph.flags_at(v).to_vec();
                let d = bits(m).count();
                (v, GenusOneClass::new(flags, d, WedgeVec::from([(m, Q::one())])))
            })
            .collect()
    }

    /// `sign(a) · a(b)` in tuple coordinates, for an automorphism `a`.
    pub fn act(&self, a: &GraphIsomorphism, b: usize) -> SparseVec {
        let g = &self.key.graph;
        let sign = Q::from_integer(a.edge_sign(g, g).into());
        let mut out = SparseVec::new();
        for (t, c) in push_labels(&self.classes_of(&self.tuples[b]), a, g, &sign) {
            let i = self.index[&t];
            let e = out.entry(i).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                out.remove(&i);
            }
        }
        out
    }

    /// The matrix of `sign(a) · a` on the label space.
    pub fn action_matrix(&self, a: &GraphIsomorphism) -> RationalMatrix {
        let cols = (0..self.tuples.len()).map(|b| self.act(a, b)).collect();
        RationalMatrix::from_columns(self.tuples.len(), cols)
    }

    /// Coordinates in the coinvariant basis of a vector given in tuples.
    pub fn normalize(&self, v: impl IntoIterator<Item = (LabelTuple, Q)>) -> SparseVec {
        let mut sv = SparseVec::new();
        for (t, c) in v {
            let i = *self.index.get(&t).expect("tuple belongs to this summand");
            let e = sv.entry(i).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                sv.remove(&i);
            }
        }
        self.relations.reduce(&mut sv);
        sv.into_iter()
            .map(|(i, c)| (self.free.binary_search(&i).expect("non-pivot after reduction"), c))
            .collect()
    }
}
