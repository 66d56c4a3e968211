//! Wheels `ω_{2j+1}`, the graphs `θ_{2j+1}` with their label `β_{2j+1}`,
//! and the polygons feeding the θ component of `∂ω`.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::Zero;

use super::chain::LabeledChain;
use super::differential::{DifferentialMode, FeynmanTransform};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, ModularGraph};
use crate::hlie::x_class;
use crate::rational::Q;

/// The wheel with `2j+1` spokes. Vertex 0 is the hub and `1..=2j+1` the
/// rim. Edges are the rim edges `(o_k, o_{k+1})` followed by the spokes
/// `(hub, o_{k+j+1})`, indices taken cyclically.
pub fn omega_graph(j: usize) -> ModularGraph {
    let l = 2 * j + 1;
    let rim = |k: usize| 1 + (k - 1) % l;
    let mut edges: Vec<(usize, usize)> = (1..=l).map(|k| (rim(k), rim(k + 1))).collect();
    edges.extend((1..=l).map(|k| (0, rim(k + j + 1))));
    ModularGraph::from_edges(vec![0; l + 1], &edges, &[]).expect("wheels are stable")
}

/// `ω_{2j+1}` with its edges in the order of [`omega_graph`].
pub fn omega_chain(transform: &FeynmanTransform, j: usize) -> Result<LabeledChain> {
    let g = omega_graph(j);
    let order: Vec<usize> = (0..g.edge_count()).collect();
    transform.element(&g, &order, &[], &Q::from_integer(1.into()), None)
}

/// Vertex 0 of genus 0, vertex 1 of genus 1, three edges between them and
/// `2j-2` loops at vertex 1.
pub fn theta_graph(j: usize) -> ModularGraph {
    let mut edges = vec![(0, 1); 3];
    edges.extend(std::iter::repeat_n((1, 1), 2 * j - 2));
    ModularGraph::from_edges(vec![0, 1], &edges, &[]).expect("theta is stable")
}

/// `θ_{2j+1}` with `x_{2j+1}` at the genus one vertex: the three non-loop
/// flags play `1, 2, 3` and loop `i` plays `2i+2, 2i+3`.
pub fn beta(transform: &FeynmanTransform, j: usize) -> Result<LabeledChain> {
    let g = theta_graph(j);
    let x = x_class(j).relabel(|f| if f <= 3 { 2 * f - 1 } else { f + 2 });
    debug_assert_eq!(x.flags(), g.flags_at(1));
    let order: Vec<usize> = (0..g.edge_count()).collect();
    transform.element(&g, &order, &[(1, x)], &Q::from_integer(1.into()), None)
}

/// The θ component of `∂ω`, measured in units of `β`.
#[derive(Clone, Debug)]
pub struct ThetaCoefficient {
    pub j: usize,
    /// Dimension of the θ summand in internal degree `2j`.
    pub theta_dim: usize,
    pub beta_nonzero: bool,
    /// `∂ω = coefficient · β + (other graphs)`.
    pub coefficient: Q,
    /// Contribution of each nest of `ω` (edge indices of the canonical
    /// wheel) with a nonzero θ component.
    pub per_nest: Vec<(Vec<usize>, Q)>,
}

pub fn theta_coefficient(transform: &FeynmanTransform, j: usize) -> Result<ThetaCoefficient> {
    let theta = canonical_form(&theta_graph(j))?.0;
    let s = 2 * j;
    let theta_dim = transform.summand(&theta, s).dim();
    let b = beta(transform, j)?.project(transform, &theta, s);
    let beta_nonzero = b.iter().any(|x| !x.is_zero());
    let unit = |v: &[Q]| -> Result<Q> {
        let Some(i) = b.iter().position(|x| !x.is_zero()) else {
            return Err(Error::InvalidParameter("β vanishes".into()));
        };
        let c = &v[i] / &b[i];
        if v.iter().zip(&b).any(|(x, y)| *x != y * &c) {
            return Err(Error::InvalidParameter("θ component is not a multiple of β".into()));
        }
        Ok(c)
    };
    let omega = omega_chain(transform, j)?;
    let keep = |g: &ModularGraph| *g == theta;
    let mut per_nest = Vec::new();
    let mut coefficient = Q::zero();
    for (basis, x) in omega.terms() {
        for (nest, term) in transform.nest_terms(basis, DifferentialMode::Full, Some(&keep))? {
            let c = unit(&term.scale(x).project(transform, &theta, s))?;
            coefficient += &c;
            per_nest.push((nest, c));
        }
    }
    Ok(ThetaCoefficient {
        j,
        theta_dim,
        beta_nonzero,
        coefficient,
        per_nest,
    })
}

/// Legs at each vertex of the `X`-labelled `(2j+1)`-gons, before removing
/// duplicates. Vertex 0 carries one of `1, 2, 3` and one flag of every
/// loop; its two neighbours carry the other two of `1, 2, 3`; every other
/// vertex carries one remaining loop flag.
pub fn x_labeled_polygon_legs(j: usize) -> Vec<Vec<Vec<usize>>> {
    let l = 2 * j + 1;
    let loops = 2 * j - 2;
    let mut out = Vec::new();
    for a in [1, 2, 3] {
        let others: Vec<usize> = [1, 2, 3].into_iter().filter(|&b| b != a).collect();
        for (b, c) in [(others[0], others[1]), (others[1], others[0])] {
            for choice in 0..1usize << loops {
                let mut hub = vec![a];
                let mut rest = Vec::new();
                for i in 1..=loops {
                    let (mine, theirs) = if choice >> (i - 1) & 1 == 0 {
                        (2 * i + 2, 2 * i + 3)
                    } else {
                        (2 * i + 3, 2 * i + 2)
                    };
                    hub.push(mine);
                    rest.push(theirs);
                }
                for perm in rest.iter().copied().permutations(loops) {
                    let mut legs = vec![Vec::new(); l];
                    legs[0] = hub.clone();
                    legs[1] = vec![b];
                    legs[l - 1] = vec![c];
                    for (k, f) in perm.into_iter().enumerate() {
                        legs[2 + k] = vec![f];
                    }
                    out.push(legs);
                }
            }
        }
    }
    out
}

/// The distinct `X`-labelled polygons, as canonical graphs of type
/// `(1, 4j-1)`.
pub fn x_labeled_polygons(j: usize) -> Result<Vec<ModularGraph>> {
    let l = 2 * j + 1;
    let edges: Vec<(usize, usize)> = (0..l).map(|k| (k, (k + 1) % l)).collect();
    let mut seen = BTreeSet::new();
    for legs in x_labeled_polygon_legs(j) {
        let mut leg_vertex = vec![0; 4 * j - 1];
        for (v, fs) in legs.iter().enumerate() {
            for &f in fs {
                leg_vertex[f - 1] = v;
            }
        }
        let g = ModularGraph::from_edges(vec![0; l], &edges, &leg_vertex)?;
        seen.insert(canonical_form(&g)?.0);
    }
    Ok(seen.into_iter().collect())
}

/// `3! (2j-2)! 2^{2j-2} / 2`.
pub fn polygon_count_formula(j: usize) -> usize {
    let loops = 2 * j - 2;
    6 * (1..=loops).product::<usize>() * (1 << loops) / 2
}
