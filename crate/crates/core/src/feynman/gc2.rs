//! Kontsevich's graph complex `GC_2` in a fixed loop order, realised as the
//! loopless part of `B(Com)(g, 0)`. Degree is `2g - #edges`; the expansion
//! differential is the transpose of edge contraction.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::chain::BasisRef;
use super::differential::{DifferentialMode, FeynmanTransform};
use super::Operad;
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, GraphFilter, ModularGraph};
use crate::linalg::{ChainComplexSlice, RationalMatrix, SparseVec};

/// A window of `GC_2^g` with its graph bases.
pub struct Gc2Slice {
    pub genus: usize,
    pub slice: ChainComplexSlice,
    pub bases: BTreeMap<i64, Vec<ModularGraph>>,
}

impl Gc2Slice {
    pub fn basis(&self, degree: i64) -> &[ModularGraph] {
        self.bases.get(&degree).map_or(&[], |b| b.as_slice())
    }
}

/// Loopless trivalent-or-more genus zero graphs of loop order `genus` in
/// degree `degree` whose orientation survives their automorphisms.
pub fn gc2_graphs(transform: &FeynmanTransform, genus: usize, degree: i64) -> Result<Vec<ModularGraph>> {
    let edges = 2 * genus as i64 - degree;
    if edges < 0 {
        return Ok(Vec::new());
    }
    let filter = GraphFilter {
        max_vertex_genus: Some(0),
        no_loops: true,
        min_edges: Some(edges as usize),
        max_edges: Some(edges as usize),
        ..Default::default()
    };
    Ok(enumerate_graphs(genus, 0, &filter)?
        .into_iter()
        .filter(|g| transform.summand(g, 0).dim() == 1)
        .collect())
}

/// Degrees `degree - 1 ..= degree + 1` of `GC_2^genus` and the two
/// differentials needed for homology in degree `degree`.
pub fn gc2_slice(genus: usize, degree: i64) -> Result<Gc2Slice> {
    if genus < 2 {
        return Err(Error::InvalidParameter("loop order must be at least 2".into()));
    }
    let transform = FeynmanTransform::new(Operad::Com);
    let mut bases = BTreeMap::new();
    for d in degree - 1..=degree + 1 {
        bases.insert(d, gc2_graphs(&transform, genus, d)?);
    }
    let mut slice = ChainComplexSlice {
        dims: bases.iter().map(|(&d, b)| (d, b.len())).collect(),
        ..Default::default()
    };
    for d in [degree, degree + 1] {
        let contraction = contraction_matrix(&transform, &bases[&(d - 1)], &bases[&d])?;
        slice.boundaries.insert(d, contraction.transpose());
    }
    Ok(Gc2Slice { genus, slice, bases })
}

/// Edge contraction from `more` (one edge more) to `fewer`, loop terms
/// dropped.
fn contraction_matrix(
    transform: &FeynmanTransform,
    more: &[ModularGraph],
    fewer: &[ModularGraph],
) -> Result<RationalMatrix> {
    let position: BTreeMap<&ModularGraph, usize> = fewer.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let keep = |g: &ModularGraph| !g.has_loops();
    let cols: Vec<SparseVec> = more
        .par_iter()
        .map(|g| {
            let b = BasisRef {
                key: std::sync::Arc::new(transform.summand(g, 0).key.clone()),
                index: 0,
            };
            let image = transform.differential_of(&b, DifferentialMode::SingleEdges, Some(&keep))?;
            Ok(image
                .terms()
                .iter()
                .map(|(t, x)| (position[&t.key.graph], x.clone()))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(RationalMatrix::from_columns(fewer.len(), cols))
}
