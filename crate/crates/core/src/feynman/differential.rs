use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use super::chain::{BasisRef, LabeledChain};
use super::summand::{genus_one_vertices, push_labels, LabelTuple, Summand, SummandKey};
use super::Operad;
use crate::error::Result;
use crate::graph::{canonical_form, contract_nest, ModularGraph, Nest, VertexId};
use crate::hlie::{mu_on_nest, GenusOneClass, OperadElement};
use crate::orientation::{contraction_orientation, permutation_sign, Orientation};
use crate::rational::Q;

/// Predicate on canonical target graphs.
pub type GraphPredicate<'a> = &'a (dyn Fn(&ModularGraph) -> bool + Sync);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifferentialMode {
    /// Every nest with a nonzero operation.
    Full,
    /// Only nests consisting of one edge.
    SingleEdges,
}

/// Edge sets of the simple cycles of odd length at least three running
/// through genus zero vertices only.
pub fn odd_cycles(g: &ModularGraph) -> Vec<Vec<usize>> {
    let mut found = BTreeSet::new();
    let n = g.vertex_count();
    for s in 0..n {
        if g.genus_of(s) != 0 {
            continue;
        }
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let mut path = Vec::new();
        walk(g, s, s, &mut on_path, &mut path, &mut found);
    }
    found.into_iter().collect()
}

fn walk(
    g: &ModularGraph,
    start: VertexId,
    at: VertexId,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    found: &mut BTreeSet<Vec<usize>>,
) {
    for &f in g.flags_at(at) {
        let Some(e) = g.edge_of_flag(f) else { continue };
        if g.is_loop(e) || path.contains(&e) {
            continue;
        }
        let w = g.vertex_of(g.partner(f));
        if w == start {
            if path.len() >= 2 && path.len().is_multiple_of(2) {
                let mut c = path.clone();
                c.push(e);
                c.sort_unstable();
                found.insert(c);
            }
        } else if w > start && !on_path[w] && g.genus_of(w) == 0 {
            on_path[w] = true;
            path.push(e);
            walk(g, start, w, on_path, path, found);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// The Feynman transform of one operad, with a cache of summands.
pub struct FeynmanTransform {
    operad: Operad,
    cache: RwLock<HashMap<SummandKey, Arc<Summand>>>,
}

impl FeynmanTransform {
    pub fn new(operad: Operad) -> Self {
        FeynmanTransform {
            operad,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn operad(&self) -> Operad {
        self.operad
    }

    /// The summand of a canonical graph in internal degree `degree`.
    pub fn summand(&self, graph: &ModularGraph, degree: usize) -> Arc<Summand> {
        let key = SummandKey {
            graph: graph.clone(),
            degree,
        };
        if let Some(s) = self.cache.read().expect("cache lock").get(&key) {
            return s.clone();
        }
        let s = Arc::new(Summand::build(self.operad, key.clone()));
        self.cache.write().expect("cache lock").entry(key).or_insert(s).clone()
    }

    /// Largest internal degree a labelling of `graph` can have.
    pub fn max_degree(&self, graph: &ModularGraph) -> usize {
        match self.operad {
            Operad::Com => 0,
            Operad::HLie => genus_one_vertices(graph)
                .iter()
                .map(|&v| (graph.valence(v) - 1) / 2 * 2)
                .sum(),
        }
    }

    /// Nonzero summands of a canonical graph, by increasing internal degree.
    pub fn summands_of(&self, graph: &ModularGraph) -> Vec<Arc<Summand>> {
        (0..=self.max_degree(graph))
            .step_by(2)
            .map(|s| self.summand(graph, s))
            .filter(|s| s.dim() > 0)
            .collect()
    }

    /// The element of `B(P)` given by any stable graph, an edge order and
    /// a class at each genus one vertex; genus zero vertices carry the
    /// product. Returns zero if the canonical graph fails `filter`.
    pub fn element(
        &self,
        graph: &ModularGraph,
        edge_order: &[usize],
        classes: &[(VertexId, GenusOneClass)],
        coeff: &Q,
        filter: Option<GraphPredicate>,
    ) -> Result<LabeledChain> {
        let mut out = LabeledChain::zero(graph.total_genus(), graph.leg_count());
        if coeff.is_zero() {
            return Ok(out);
        }
        let (canon, w) = canonical_form(graph)?;
        if filter.is_some_and(|f| !f(&canon)) {
            return Ok(out);
        }
        if self.operad == Operad::Com && canon.max_vertex_genus() > 0 {
            return Ok(out);
        }
        let degree = classes.iter().map(|(_, c)| c.degree()).sum();
        let summand = self.summand(&canon, degree);
        if summand.dim() == 0 {
            return Ok(out);
        }
        let image = w.edge_permutation(graph, &canon);
        let pushed: Vec<usize> = edge_order.iter().map(|&e| image[e]).collect();
        let c = if permutation_sign(&pushed) > 0 {
            coeff.clone()
        } else {
            -coeff.clone()
        };
        let key = Arc::new(summand.key.clone());
        for (k, x) in summand.normalize(push_labels(classes, &w, &canon, &c)) {
            out.add_term(
                BasisRef {
                    key: key.clone(),
                    index: k,
                },
                x,
            );
        }
        Ok(out)
    }

    /// The nests whose operation can be nonzero on a labelled `graph`.
    pub fn nests(&self, graph: &ModularGraph, mode: DifferentialMode) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for e in 0..graph.edge_count() {
            if self.operad == Operad::Com {
                let (a, b) = graph.edge_endpoints(e);
                if a == b || graph.genus_of(a) > 0 || graph.genus_of(b) > 0 {
                    continue;
                }
            }
            out.push(vec![e]);
        }
        if self.operad == Operad::HLie && mode == DifferentialMode::Full {
            out.extend(odd_cycles(graph));
        }
        out
    }

    /// The contribution of each nest to the differential of one basis
    /// element.
    pub fn nest_terms(
        &self,
        basis: &BasisRef,
        mode: DifferentialMode,
        filter: Option<GraphPredicate>,
    ) -> Result<Vec<(Vec<usize>, LabeledChain)>> {
        let summand = self.summand(&basis.key.graph, basis.key.degree);
        self.tuple_nest_terms(&summand, summand.representative(basis.index), mode, filter)
    }

    /// As [`Self::nest_terms`] for an arbitrary label tuple of a summand,
    /// not necessarily one of its basis representatives.
    pub fn tuple_nest_terms(
        &self,
        summand: &Summand,
        tuple: &LabelTuple,
        mode: DifferentialMode,
        filter: Option<GraphPredicate>,
    ) -> Result<Vec<(Vec<usize>, LabeledChain)>> {
        let g = summand.graph();
        let classes = summand.classes_of(tuple);
        let class_at: HashMap<VertexId, GenusOneClass> = classes.iter().cloned().collect();
        let label = |v: VertexId| match class_at.get(&v) {
            Some(c) => OperadElement::Genus1(c.clone()),
            None => OperadElement::product(g.flags_at(v).to_vec()),
        };
        let standard = Orientation::standard(g.edge_count());
        let mut out = Vec::new();
        for nest_edges in self.nests(g, mode) {
            let Ok(nest) = Nest::from_edges(g, &nest_edges) else {
                continue;
            };
            let (shuffle, quotient_order, nest_order) = contraction_orientation(&standard, &nest.edges);
            let Some(op) = mu_on_nest(g, &nest.edges, &label, &nest_order)? else {
                continue;
            };
            if op.is_zero() {
                continue;
            }
            let c = contract_nest(g, &nest)?;
            let fmap = |f: usize| c.flag_map[f].expect("flag survives contraction");
            let mut coeff = Q::from_integer(shuffle.into());
            let mut q_classes = Vec::new();
            for (v, class) in &classes {
                if !nest.vertices.contains(v) {
                    q_classes.push((c.vertex_map[*v], class.relabel(fmap)));
                }
            }
            match op {
                OperadElement::Genus0 { coeff: x, .. } => coeff *= x,
                OperadElement::Genus1(class) => {
                    if self.operad == Operad::Com {
                        continue;
                    }
                    q_classes.push((c.new_vertex, class.relabel(fmap)));
                }
            }
            let q_order: Vec<usize> = quotient_order
                .iter()
                .map(|&e| {
                    let (a, _) = g.edges()[e];
                    c.quotient.edge_of_flag(fmap(a)).expect("edge survives")
                })
                .collect();
            let term = self.element(&c.quotient, &q_order, &q_classes, &coeff, filter)?;
            if !term.is_zero() {
                out.push((nest.edges, term));
            }
        }
        Ok(out)
    }

    /// The differential of a chain. `filter` restricts to target graphs it
    /// accepts; other components are dropped.
    pub fn differential(
        &self,
        chain: &LabeledChain,
        mode: DifferentialMode,
        filter: Option<GraphPredicate>,
    ) -> Result<LabeledChain> {
        let mut out = LabeledChain::zero(chain.genus, chain.legs);
        for (b, x) in chain.terms() {
            for (_, term) in self.nest_terms(b, mode, filter)? {
                out.add_scaled(&term, x);
            }
        }
        Ok(out)
    }

    /// Differential of a single basis element.
    pub fn differential_of(
        &self,
        basis: &BasisRef,
        mode: DifferentialMode,
        filter: Option<GraphPredicate>,
    ) -> Result<LabeledChain> {
        let mut out = LabeledChain::zero(basis.key.graph.total_genus(), basis.key.graph.leg_count());
        for (_, term) in self.nest_terms(basis, mode, filter)? {
            out.add_scaled(&term, &Q::one());
        }
        Ok(out)
    }

    /// The part of `d` that only contracts single edges.
    pub fn d1(&self, chain: &LabeledChain) -> Result<LabeledChain> {
        self.differential(chain, DifferentialMode::SingleEdges, None)
    }
}
