//! Stable graphs with genus-labelled vertices and numbered legs.
//!
//! Flags and vertices are dense indices starting at 0. A flag that is fixed
//! by the involution is a leg, every other flag pairs with its partner to
//! form an edge. Edges are indexed by increasing minimal flag.

mod canonical;
mod enumerate;
mod json;
mod nest;

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

pub use canonical::{automorphism_generators, automorphisms, canonical_form, is_canonical, GraphIsomorphism};
pub use enumerate::{enumerate_graphs, GraphFilter};
pub use json::GraphJson;
pub use nest::{contract_nest, enumerate_nests, Contraction, Nest};

pub type VertexId = usize;
pub type FlagId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbstractGraph {
    vertex_count: usize,
    adjacency: Vec<VertexId>,
    involution: Vec<FlagId>,
}

impl AbstractGraph {
    pub fn new(vertex_count: usize, adjacency: Vec<VertexId>, involution: Vec<FlagId>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("no vertices".into()));
        }
        if adjacency.len() != involution.len() {
            return Err(Error::InvalidGraph(
                "adjacency and involution have different lengths".into(),
            ));
        }
        for (f, (&v, &p)) in adjacency.iter().zip(&involution).enumerate() {
            if v >= vertex_count {
                return Err(Error::InvalidGraph(format!("flag {f} attached to missing vertex {v}")));
            }
            if p >= involution.len() || involution[p] != f {
                return Err(Error::InvalidGraph(format!(
                    "involution is not an involution at flag {f}"
                )));
            }
        }
        Ok(AbstractGraph {
            vertex_count,
            adjacency,
            involution,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn flag_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertex_of(&self, f: FlagId) -> VertexId {
        self.adjacency[f]
    }

    pub fn partner(&self, f: FlagId) -> FlagId {
        self.involution[f]
    }

    pub fn adjacency(&self) -> &[VertexId] {
        &self.adjacency
    }

    pub fn involution(&self) -> &[FlagId] {
        &self.involution
    }

    pub fn is_leg(&self, f: FlagId) -> bool {
        self.involution[f] == f
    }
}

/// A connected stable graph with vertex genera and a leg labelling.
#[derive(Clone, Debug)]
pub struct ModularGraph {
    graph: AbstractGraph,
    genus: Vec<u32>,
    legs: Vec<FlagId>,
    flags_at: Vec<Vec<FlagId>>,
    edges: Vec<(FlagId, FlagId)>,
    edge_of_flag: Vec<Option<usize>>,
}

impl PartialEq for ModularGraph {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.genus == other.genus && self.legs == other.legs
    }
}

impl Eq for ModularGraph {}

impl Hash for ModularGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.graph.hash(state);
        self.genus.hash(state);
        self.legs.hash(state);
    }
}

impl PartialOrd for ModularGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ModularGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        (
            self.edge_count(),
            self.vertex_count(),
            &self.genus,
            &self.graph,
            &self.legs,
        )
            .cmp(&(
                other.edge_count(),
                other.vertex_count(),
                &other.genus,
                &other.graph,
                &other.legs,
            ))
    }
}

impl ModularGraph {
    /// Validates connectivity, stability and the leg labelling.
    pub fn new(graph: AbstractGraph, genus: Vec<u32>, legs: Vec<FlagId>) -> Result<Self> {
        let g = Self::assemble(graph, genus, legs)?;
        g.check_stable()?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    fn assemble(graph: AbstractGraph, genus: Vec<u32>, legs: Vec<FlagId>) -> Result<Self> {
        if genus.len() != graph.vertex_count {
            return Err(Error::InvalidGraph("genus labels do not match vertex count".into()));
        }
        let nflags = graph.flag_count();
        let mut leg_seen = vec![false; nflags];
        for &f in &legs {
            if f >= nflags || !graph.is_leg(f) || leg_seen[f] {
                return Err(Error::InvalidGraph(format!("bad leg flag {f}")));
            }
            leg_seen[f] = true;
        }
        let leg_count = (0..nflags).filter(|&f| graph.is_leg(f)).count();
        if leg_count != legs.len() {
            return Err(Error::InvalidGraph("every leg must carry a label".into()));
        }
        let mut flags_at = vec![Vec::new(); graph.vertex_count];
        for f in 0..nflags {
            flags_at[graph.adjacency[f]].push(f);
        }
        let mut edges = Vec::new();
        let mut edge_of_flag = vec![None; nflags];
        for f in 0..nflags {
            let p = graph.involution[f];
            if f < p {
                edge_of_flag[f] = Some(edges.len());
                edge_of_flag[p] = Some(edges.len());
                edges.push((f, p));
            }
        }
        Ok(ModularGraph {
            graph,
            genus,
            legs,
            flags_at,
            edges,
            edge_of_flag,
        })
    }

    fn check_stable(&self) -> Result<()> {
        for v in 0..self.vertex_count() {
            if 2 * self.genus[v] as usize + self.valence(v) < 3 {
                return Err(Error::Unstable {
                    vertex: v,
                    genus: self.genus[v],
                    valence: self.valence(v),
                });
            }
        }
        Ok(())
    }

    /// Builds a graph from an edge list between vertices and a list of leg
    /// positions. Edge `k` gets flags `2k` (at the first endpoint) and
    /// `2k + 1`; leg `i` (label `i + 1`) gets flag `2E + i`.
    pub fn from_edges(genus: Vec<u32>, edges: &[(VertexId, VertexId)], legs: &[VertexId]) -> Result<Self> {
        let mut adjacency = Vec::with_capacity(2 * edges.len() + legs.len());
        let mut involution = Vec::with_capacity(adjacency.capacity());
        for (k, &(a, b)) in edges.iter().enumerate() {
            adjacency.push(a);
            adjacency.push(b);
            involution.push(2 * k + 1);
            involution.push(2 * k);
        }
        let mut leg_flags = Vec::with_capacity(legs.len());
        for &v in legs {
            let f = adjacency.len();
            adjacency.push(v);
            involution.push(f);
            leg_flags.push(f);
        }
        let graph = AbstractGraph::new(genus.len(), adjacency, involution)?;
        ModularGraph::new(graph, genus, leg_flags)
    }

    pub fn graph(&self) -> &AbstractGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count
    }

    pub fn flag_count(&self) -> usize {
        self.graph.flag_count()
    }

    pub fn genus_of(&self, v: VertexId) -> u32 {
        self.genus[v]
    }

    pub fn genera(&self) -> &[u32] {
        &self.genus
    }

    /// Flags carrying labels `1..=n`, in label order.
    pub fn legs(&self) -> &[FlagId] {
        &self.legs
    }

    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    /// Label (starting at 1) of a leg flag.
    pub fn leg_label(&self, f: FlagId) -> Option<usize> {
        self.legs.iter().position(|&l| l == f).map(|i| i + 1)
    }

    pub fn vertex_of(&self, f: FlagId) -> VertexId {
        self.graph.adjacency[f]
    }

    pub fn partner(&self, f: FlagId) -> FlagId {
        self.graph.involution[f]
    }

    pub fn is_leg(&self, f: FlagId) -> bool {
        self.graph.is_leg(f)
    }

    /// Flags at `v` in increasing order.
    pub fn flags_at(&self, v: VertexId) -> &[FlagId] {
        &self.flags_at[v]
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.flags_at[v].len()
    }

    pub fn edges(&self) -> &[(FlagId, FlagId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_of_flag(&self, f: FlagId) -> Option<usize> {
        self.edge_of_flag[f]
    }

    pub fn edge_endpoints(&self, e: usize) -> (VertexId, VertexId) {
        let (a, b) = self.edges[e];
        (self.vertex_of(a), self.vertex_of(b))
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.edge_endpoints(e);
        a == b
    }

    pub fn loops_at(&self, v: VertexId) -> usize {
        self.flags_at[v]
            .iter()
            .filter(|&&f| {
                let p = self.partner(f);
                p > f && self.vertex_of(p) == v
            })
            .count()
    }

    pub fn has_loops(&self) -> bool {
        (0..self.edge_count()).any(|e| self.is_loop(e))
    }

    /// A simple loop is a loop at a trivalent genus zero vertex.
    pub fn has_simple_loops(&self) -> bool {
        (0..self.vertex_count()).any(|v| self.genus[v] == 0 && self.valence(v) == 3 && self.loops_at(v) > 0)
    }

    /// Number of edges joining two distinct vertices.
    pub fn multiplicity(&self, u: VertexId, w: VertexId) -> usize {
        self.flags_at[u]
            .iter()
            .filter(|&&f| !self.is_leg(f) && self.vertex_of(self.partner(f)) == w)
            .count()
    }

    pub fn has_parallel_edges(&self) -> bool {
        (0..self.vertex_count()).any(|u| (u + 1..self.vertex_count()).any(|w| self.multiplicity(u, w) > 1))
    }

    pub fn first_betti(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }

    pub fn total_genus(&self) -> usize {
        self.first_betti() + self.genus.iter().map(|&g| g as usize).sum::<usize>()
    }

    pub fn max_vertex_genus(&self) -> u32 {
        self.genus.iter().copied().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &f in &self.flags_at[v] {
                let w = self.vertex_of(self.partner(f));
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Neighbouring vertex across edge `e` as seen from `v`.
    pub fn other_end(&self, e: usize, v: VertexId) -> VertexId {
        let (a, b) = self.edge_endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    /// Flag of edge `e` sitting at `v` (the smaller one for loops).
    pub fn flag_of_edge_at(&self, e: usize, v: VertexId) -> FlagId {
        let (a, b) = self.edges[e];
        if self.vertex_of(a) == v {
            a
        } else {
            debug_assert_eq!(self.vertex_of(b), v);
            b
        }
    }
}
