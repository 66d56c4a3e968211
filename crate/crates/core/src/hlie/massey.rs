//! Massey products of odd polygons.
//!
//! On a trivalent polygon with vertices `v_0, ..., v_{L-1}`, edges
//! `ε_k = (v_k, v_{k+1})` and one leg `l_k` at each vertex, the edge order
//! `ε_0 ∧ ... ∧ ε_{L-1}` goes to `[e_{l_0} ∧ ... ∧ e_{l_{L-2}}]`. A vertex
//! with several legs is blown up into a trivalent polygon vertex joined by a
//! new edge to a vertex carrying those legs; the differential condition for
//! the blown-up graph then forces the value on the original polygon to be
//! the value on the blown-up one with the new flag replaced by the sum of
//! the legs it carried.

use num_traits::One;

use super::compose::substitute;
use super::model::GenusOneClass;
use crate::graph::{ModularGraph, VertexId};
use crate::orientation::permutation_sign;
use crate::rational::Q;
use crate::symrep::wedge::{add_term, wedge_of, WedgeVec};

/// Legs per polygon vertex in cyclic order; `edges[k]` joins vertex `k` and
/// vertex `k + 1`. Edges are opaque labels and `orientation` lists them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPolygon {
    pub legs: Vec<Vec<usize>>,
    pub edges: Vec<usize>,
    pub orientation: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowUpOrder {
    FirstVertex,
    LastVertex,
}

impl LabeledPolygon {
    /// Standard polygon with one leg per vertex labelled `1..=L` and edges
    /// in traversal order.
    pub fn standard(sides: usize) -> Self {
        LabeledPolygon {
            legs: (1..=sides).map(|k| vec![k]).collect(),
            edges: (0..sides).collect(),
            orientation: (0..sides).collect(),
        }
    }

    /// Reads a polygon off a cycle of `g`. `cycle` lists edge indices of a
    /// simple cycle; all other flags at cycle vertices become legs.
    pub fn from_cycle(g: &ModularGraph, cycle: &[usize], orientation: &[usize]) -> Option<Self> {
        let (vertices, edges) = traverse_cycle(g, cycle)?;
        let legs = vertices
            .iter()
            .map(|&v| {
                g.flags_at(v)
                    .iter()
                    .copied()
                    .filter(|&f| g.edge_of_flag(f).is_none_or(|e| !cycle.contains(&e)))
                    .collect()
            })
            .collect();
        Some(LabeledPolygon {
            legs,
            edges,
            orientation: orientation.to_vec(),
        })
    }

    pub fn sides(&self) -> usize {
        self.edges.len()
    }

    pub fn flags(&self) -> Vec<usize> {
        let mut f: Vec<usize> = self.legs.iter().flatten().copied().collect();
        f.sort_unstable();
        f
    }

    fn orientation_sign(&self) -> i32 {
        let pos: Vec<usize> = self
            .orientation
            .iter()
            .map(|e| self.edges.iter().position(|x| x == e).expect("edge of the polygon"))
            .collect();
        permutation_sign(&pos)
    }
}

/// Orders the edges of a simple cycle. Returns the vertices `v_0..` and the
/// edges with `edges[k] = (v_k, v_{k+1})`.
pub(crate) fn traverse_cycle(g: &ModularGraph, cycle: &[usize]) -> Option<(Vec<VertexId>, Vec<usize>)> {
    let l = cycle.len();
    if l == 0 {
        return None;
    }
    let mut degree = std::collections::HashMap::new();
    for &e in cycle {
        let (a, b) = g.edge_endpoints(e);
        *degree.entry(a).or_insert(0) += 1;
        *degree.entry(b).or_insert(0) += 1;
    }
    if degree.len() != l || degree.values().any(|&d| d != 2) {
        return None;
    }
    let (start, _) = g.edge_endpoints(cycle[0]);
    let mut vertices = vec![start];
    let mut edges = vec![cycle[0]];
    let mut here = g.other_end(cycle[0], start);
    while here != start {
        let last = *edges.last().expect("nonempty");
        let next = *cycle.iter().find(|&&e| {
            e != last && {
                let (a, b) = g.edge_endpoints(e);
                a == here || b == here
            }
        })?;
        vertices.push(here);
        edges.push(next);
        here = g.other_end(next, here);
    }
    (edges.len() == l).then_some((vertices, edges))
}

fn trivalent_value(p: &LabeledPolygon) -> WedgeVec {
    let l = p.sides();
    let firsts: Vec<usize> = p.legs[..l - 1].iter().map(|ls| ls[0]).collect();
    let (s, m) = wedge_of(&firsts).expect("distinct legs");
    let sign = s * p.orientation_sign();
    WedgeVec::from([(m, if sign > 0 { Q::one() } else { -Q::one() })])
}

fn recurse(p: &LabeledPolygon, order: BlowUpOrder) -> WedgeVec {
    let heavy: Vec<usize> = (0..p.sides()).filter(|&k| p.legs[k].len() > 1).collect();
    let pick = match order {
        BlowUpOrder::FirstVertex => heavy.first(),
        BlowUpOrder::LastVertex => heavy.last(),
    };
    let Some(&v) = pick else {
        return trivalent_value(p);
    };
    let h = p.legs.iter().flatten().max().expect("legs") + 1;
    assert!(h < 64, "flag ids must stay below 64");
    let mut blown = p.clone();
    blown.legs[v] = vec![h];
    substitute(&recurse(&blown, order), h, &p.legs[v])
}

/// The Massey product of an odd polygon; zero for even polygons.
pub fn massey_polygon(p: &LabeledPolygon, order: BlowUpOrder) -> GenusOneClass {
    let l = p.sides();
    let flags = p.flags();
    assert!(
        p.legs.iter().all(|ls| !ls.is_empty()),
        "every polygon vertex needs a leg"
    );
    if l.is_multiple_of(2) {
        return GenusOneClass::zero(flags, l - 1);
    }
    GenusOneClass::new(flags, l - 1, recurse(p, order))
}

/// `sign(o) · (Σ_{l_0}) ∧ ... ∧ (Σ_{l_{L-2}})`, the expanded form of the
/// recursion.
pub fn massey_closed_form(p: &LabeledPolygon) -> GenusOneClass {
    let l = p.sides();
    let flags = p.flags();
    if l.is_multiple_of(2) {
        return GenusOneClass::zero(flags, l - 1);
    }
    let mut acc = WedgeVec::from([(0u64, Q::from_integer(p.orientation_sign().into()))]);
    for legs in &p.legs[..l - 1] {
        let mut next = WedgeVec::new();
        for (&m, c) in &acc {
            for &f in legs {
                let mut factors: Vec<usize> = crate::symrep::wedge::bits(m).collect();
                factors.push(f);
                if let Some((s, m2)) = wedge_of(&factors) {
                    add_term(&mut next, m2, if s > 0 { c.clone() } else { -c.clone() });
                }
            }
        }
        acc = next;
    }
    GenusOneClass::new(flags, l - 1, acc)
}
