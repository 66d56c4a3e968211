use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use super::chain::{BasisRef, LabeledChain};
use super::differential::{DifferentialMode, FeynmanTransform};
use super::Operad;
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, GraphFilter, ModularGraph};
use crate::linalg::{ChainComplexSlice, RationalMatrix, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexOptions {
    /// Quotient by graphs with loops: they are left out and terms landing
    /// on them are dropped.
    pub no_loops: bool,
    /// Subcomplex of graphs without a loop at a trivalent genus zero vertex.
    pub no_simple_loops: bool,
    pub mode: DifferentialMode,
}

impl Default for ComplexOptions {
    fn default() -> Self {
        ComplexOptions {
            no_loops: false,
            no_simple_loops: false,
            mode: DifferentialMode::Full,
        }
    }
}

impl ComplexOptions {
    pub fn accepts(&self, g: &ModularGraph) -> bool {
        !(self.no_loops && g.has_loops()) && !(self.no_simple_loops && g.has_simple_loops())
    }
}

/// `B(P)(g, n)` with explicit bases, graded by edge count plus internal
/// degree. The differential lowers this total degree by one.
pub struct FeynmanComplex {
    pub genus: usize,
    pub legs: usize,
    pub options: ComplexOptions,
    transform: Arc<FeynmanTransform>,
    bases: BTreeMap<i64, Vec<BasisRef>>,
    index: HashMap<BasisRef, usize>,
}

pub fn build_complex(operad: Operad, genus: usize, legs: usize, options: ComplexOptions) -> Result<FeynmanComplex> {
    build_with(Arc::new(FeynmanTransform::new(operad)), genus, legs, options)
}

impl FeynmanComplex {
    pub fn transform(&self) -> &Arc<FeynmanTransform> {
        &self.transform
    }

    pub fn operad(&self) -> Operad {
        self.transform.operad()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.bases.keys().copied()
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.bases.iter().map(|(&d, b)| (d, b.len())).collect()
    }

    /// Dimensions by (edge count, internal degree).
    pub fn bidegree_dims(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for b in self.bases.values().flatten() {
            *out.entry((b.key.graph.edge_count(), b.key.degree)).or_insert(0) += 1;
        }
        out
    }

    pub fn basis(&self, degree: i64) -> &[BasisRef] {
        self.bases.get(&degree).map_or(&[], |b| b.as_slice())
    }

    pub fn position(&self, b: &BasisRef) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Coordinates of a homogeneous chain of total degree `degree`.
    pub fn coordinates(&self, chain: &LabeledChain, degree: i64) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (b, x) in chain.terms() {
            let d = total_degree(b);
            let i = self
                .position(b)
                .filter(|_| d == degree)
                .ok_or_else(|| Error::InvalidParameter(format!("chain term outside degree {degree} of the complex")))?;
            v.insert(i, x.clone());
        }
        Ok(v)
    }

    /// Matrix of the differential from total degree `degree` to `degree - 1`.
    pub fn differential_matrix(&self, degree: i64) -> Result<RationalMatrix> {
        let src = self.basis(degree);
        let rows = self.basis(degree - 1).len();
        let opts = self.options;
        let keep = move |g: &ModularGraph| opts.accepts(g);
        let cols: Vec<SparseVec> = src
            .par_iter()
            .map(|b| {
                let image = self.transform.differential_of(b, opts.mode, Some(&keep))?;
                self.coordinates(&image, degree - 1)
            })
            .collect::<Result<_>>()?;
        Ok(RationalMatrix::from_columns(rows, cols))
    }

    /// All differentials of the complex.
    pub fn slice(&self) -> Result<ChainComplexSlice> {
        let mut slice = ChainComplexSlice {
            dims: self.dims(),
            ..Default::default()
        };
        for d in self.degrees().collect::<Vec<_>>() {
            if self.bases.contains_key(&(d - 1)) {
                slice.boundaries.insert(d, self.differential_matrix(d)?);
            }
        }
        Ok(slice)
    }

    /// Checks `d ∘ d = 0` in every degree; returns the degrees checked.
    pub fn check_square_zero(&self) -> Result<Vec<i64>> {
        let slice = self.slice()?;
        let mut checked = Vec::new();
        for &d in slice.boundaries.keys() {
            if slice.boundaries.contains_key(&(d + 1)) {
                slice.check_square_zero(d)?;
                checked.push(d + 1);
            }
        }
        Ok(checked)
    }

    pub fn homology(&self) -> Result<BTreeMap<i64, usize>> {
        let slice = self.slice()?;
        self.degrees().map(|d| Ok((d, slice.homology_rank(d)?))).collect()
    }
}

pub(crate) fn total_degree(b: &BasisRef) -> i64 {
    (b.key.graph.edge_count() + b.key.degree) as i64
}

pub(crate) fn build_with(
    transform: Arc<FeynmanTransform>,
    genus: usize,
    legs: usize,
    options: ComplexOptions,
) -> Result<FeynmanComplex> {
    let filter = GraphFilter {
        max_vertex_genus: Some(transform.operad().max_vertex_genus()),
        no_loops: options.no_loops,
        no_simple_loops: options.no_simple_loops,
        ..Default::default()
    };
    let graphs = enumerate_graphs(genus, legs, &filter)?;
    let per_graph: Vec<Vec<BasisRef>> = graphs
        .par_iter()
        .map(|g| {
            transform
                .summands_of(g)
                .into_iter()
                .flat_map(|s| {
                    let key = Arc::new(s.key.clone());
                    (0..s.dim()).map(move |index| BasisRef {
                        key: key.clone(),
                        index,
                    })
                })
                .collect()
        })
        .collect();
    let mut bases: BTreeMap<i64, Vec<BasisRef>> = BTreeMap::new();
    for b in per_graph.into_iter().flatten() {
        bases.entry(total_degree(&b)).or_default().push(b);
    }
    let mut index = HashMap::new();
    for basis in bases.values_mut() {
        basis.sort();
        for (i, b) in basis.iter().enumerate() {
            index.insert(b.clone(), i);
        }
    }
    Ok(FeynmanComplex {
        genus,
        legs,
        options,
        transform,
        bases,
        index,
    })
}
