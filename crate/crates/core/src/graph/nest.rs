//! Nests and their contraction.

use std::collections::BTreeSet;

use super::{AbstractGraph, FlagId, ModularGraph, VertexId};
use crate::error::{Error, Result};

/// A connected leg-free subgraph, given by its vertices and edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nest {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
}

impl Nest {
    /// The nest spanned by a set of edges.
    pub fn from_edges(g: &ModularGraph, edges: &[usize]) -> Result<Nest> {
        if edges.is_empty() {
            return Err(Error::InvalidNest("edge set is empty".into()));
        }
        let mut es: Vec<usize> = edges.to_vec();
        es.sort_unstable();
        es.dedup();
        if es.iter().any(|&e| e >= g.edge_count()) {
            return Err(Error::InvalidNest("edge out of range".into()));
        }
        let vertices: BTreeSet<VertexId> = es
            .iter()
            .flat_map(|&e| {
                let (a, b) = g.edge_endpoints(e);
                [a, b]
            })
            .collect();
        let nest = Nest {
            vertices: vertices.into_iter().collect(),
            edges: es,
        };
        if !nest.is_connected(g) {
            return Err(Error::InvalidNest("not connected".into()));
        }
        if nest.vertices.len() == g.vertex_count() && nest.edges.len() == g.edge_count() && g.leg_count() == 0 {
            return Err(Error::InvalidNest("not proper".into()));
        }
        Ok(nest)
    }

    pub fn single_vertex(v: VertexId) -> Nest {
        Nest {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    fn is_connected(&self, g: &ModularGraph) -> bool {
        let mut reached = vec![self.vertices[0]];
        let mut changed = true;
        while changed {
            changed = false;
            for &e in &self.edges {
                let (a, b) = g.edge_endpoints(e);
                let (ra, rb) = (reached.contains(&a), reached.contains(&b));
                if ra != rb {
                    reached.push(if ra { b } else { a });
                    changed = true;
                }
            }
        }
        reached.len() == self.vertices.len()
    }

    pub fn first_betti(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    /// Flags of the host that belong to the nest's edges.
    pub fn flags(&self, g: &ModularGraph) -> Vec<FlagId> {
        let mut fs: Vec<FlagId> = self
            .edges
            .iter()
            .flat_map(|&e| {
                let (a, b) = g.edges()[e];
                [a, b]
            })
            .collect();
        fs.sort_unstable();
        fs
    }
}

/// All nests with at least one edge. Single vertex nests would only carry
/// the internal differential of the labelling operad, which vanishes for
/// every operad considered here, so they are left out.
pub fn enumerate_nests(g: &ModularGraph) -> Vec<Nest> {
    let m = g.edge_count();
    assert!(m < 64, "too many edges to enumerate nests");
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << m) {
        let edges: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        if let Ok(n) = Nest::from_edges(g, &edges) {
            out.push(n);
        }
    }
    out
}

/// Result of collapsing a nest to a single vertex.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub quotient: ModularGraph,
    /// The vertex the nest collapsed to.
    pub new_vertex: VertexId,
    /// Old vertex to quotient vertex.
    pub vertex_map: Vec<VertexId>,
    /// Old flag to quotient flag; `None` for flags of contracted edges.
    pub flag_map: Vec<Option<FlagId>>,
    /// The nest as a graph in its own right. Its legs are the flags of the
    /// host adjacent to the nest but not in it, in increasing host order.
    pub nhat: ModularGraph,
    /// Host flag carrying each leg of `nhat`, in label order.
    pub nhat_legs: Vec<FlagId>,
    /// Host vertex for each vertex of `nhat`.
    pub nhat_vertices: Vec<VertexId>,
}

/// Contracts `nest` inside `g`. The quotient keeps the relative order of
/// surviving vertices and flags; the collapsed vertex sits at the position
/// of the smallest nest vertex.
pub fn contract_nest(g: &ModularGraph, nest: &Nest) -> Result<Contraction> {
    let in_nest: Vec<bool> = (0..g.vertex_count()).map(|v| nest.vertices.contains(&v)).collect();
    let rep = nest.vertices[0];
    let mut vertex_map = vec![0; g.vertex_count()];
    let mut next = 0;
    for v in 0..g.vertex_count() {
        if in_nest[v] && v != rep {
            continue;
        }
        vertex_map[v] = next;
        next += 1;
    }
    let new_vertex = vertex_map[rep];
    for &v in &nest.vertices {
        vertex_map[v] = new_vertex;
    }
    let nest_flags = nest.flags(g);
    let mut flag_map = vec![None; g.flag_count()];
    let mut kept = Vec::new();
    for f in 0..g.flag_count() {
        if nest_flags.binary_search(&f).is_err() {
            flag_map[f] = Some(kept.len());
            kept.push(f);
        }
    }
    let adjacency = kept.iter().map(|&f| vertex_map[g.vertex_of(f)]).collect();
    let involution = kept
        .iter()
        .map(|&f| flag_map[g.partner(f)].expect("partner survives"))
        .collect();
    let mut genus = vec![0; next];
    for v in 0..g.vertex_count() {
        if !in_nest[v] {
            genus[vertex_map[v]] = g.genus_of(v);
        }
    }
    genus[new_vertex] = nest.first_betti() as u32 + nest.vertices.iter().map(|&v| g.genus_of(v)).sum::<u32>();
    let legs = g.legs().iter().map(|&f| flag_map[f].expect("legs survive")).collect();
    let quotient = ModularGraph::new(AbstractGraph::new(next, adjacency, involution)?, genus, legs)?;

    // the nest itself, with fresh legs for every adjacent flag
    let nhat_vertices = nest.vertices.clone();
    let local = |v: VertexId| nhat_vertices.iter().position(|&w| w == v).expect("nest vertex");
    let mut edges_local = Vec::new();
    for &e in &nest.edges {
        let (a, b) = g.edge_endpoints(e);
        edges_local.push((local(a), local(b)));
    }
    let mut nhat_legs = Vec::new();
    let mut leg_vertices = Vec::new();
    for &v in &nest.vertices {
        for &f in g.flags_at(v) {
            if nest_flags.binary_search(&f).is_err() {
                nhat_legs.push(f);
            }
        }
    }
    nhat_legs.sort_unstable();
    for &f in &nhat_legs {
        leg_vertices.push(local(g.vertex_of(f)));
    }
    let nhat = ModularGraph::from_edges(
        nest.vertices.iter().map(|&v| g.genus_of(v)).collect(),
        &edges_local,
        &leg_vertices,
    )?;
    Ok(Contraction {
        quotient,
        new_vertex,
        vertex_map,
        flag_map,
        nhat,
        nhat_legs,
        nhat_vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nest_counts() {
        let corolla = ModularGraph::from_edges(vec![0], &[], &[0, 0, 0]).unwrap();
        assert!(enumerate_nests(&corolla).is_empty());
        let triangle = ModularGraph::from_edges(vec![0; 3], &[(0, 1), (1, 2), (2, 0)], &[0, 1, 2]).unwrap();
        assert_eq!(enumerate_nests(&triangle).len(), 7);
        let theta = ModularGraph::from_edges(vec![0, 1], &[(0, 1); 3], &[]).unwrap();
        assert_eq!(enumerate_nests(&theta).len(), 6);
    }

    #[test]
    fn contraction_preserves_genus() {
        let theta = ModularGraph::from_edges(vec![0, 1], &[(0, 1); 3], &[]).unwrap();
        let c = contract_nest(&theta, &Nest::from_edges(&theta, &[0]).unwrap()).unwrap();
        assert_eq!(c.quotient.vertex_count(), 1);
        assert_eq!(c.quotient.edge_count(), 2);
        assert_eq!(c.quotient.genus_of(0), 1);
        assert_eq!(c.quotient.total_genus(), 3);
        assert_eq!(c.nhat.leg_count(), 4);
    }
}
