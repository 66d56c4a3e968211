use super::compose::{compose_edge, self_glue, OperadElement};
use super::massey::{massey_polygon, traverse_cycle, BlowUpOrder, LabeledPolygon};
use crate::error::Result;
use crate::graph::{ModularGraph, VertexId};
use crate::orientation::Orientation;
use crate::rational::Q;

/// The operation attached to the subgraph of `g` spanned by `edges` with
/// vertices labelled by `label` (over the flags of `g`) and edge order
/// `order`. Nonzero only for a single edge or an odd polygon of genus zero
/// vertices. The result lives on the flags adjacent to the subgraph.
pub fn mu_on_nest(
    g: &ModularGraph,
    edges: &[usize],
    label: &dyn Fn(VertexId) -> OperadElement,
    order: &[usize],
) -> Result<Option<OperadElement>> {
    if edges.len() == 1 {
        let (fa, fb) = g.edges()[edges[0]];
        let (va, vb) = (g.vertex_of(fa), g.vertex_of(fb));
        return if va == vb {
            self_glue(&label(va), fa, fb)
        } else {
            compose_edge(&label(va), fa, &label(vb), fb)
        };
    }
    if edges.len() < 3 || edges.len().is_multiple_of(2) {
        return Ok(None);
    }
    let Some((vertices, _)) = traverse_cycle(g, edges) else {
        return Ok(None);
    };
    let mut coeff = Q::from_integer(1.into());
    for &v in &vertices {
        match label(v) {
            OperadElement::Genus0 { coeff: c, .. } => coeff *= c,
            OperadElement::Genus1(_) => return Ok(None),
        }
    }
    let polygon = LabeledPolygon::from_cycle(g, edges, order).expect("cycle was traversed");
    let class = massey_polygon(&polygon, BlowUpOrder::FirstVertex);
    Ok(Some(OperadElement::Genus1(class.scale(&coeff))))
}

/// The operation of the whole graph `g`.
pub fn mu(g: &ModularGraph, labels: &[OperadElement], o: &Orientation) -> Result<Option<OperadElement>> {
    let edges: Vec<usize> = (0..g.edge_count()).collect();
    if edges.is_empty() {
        return Ok(None);
    }
    mu_on_nest(g, &edges, &|v| labels[v].clone(), &o.edge_order)
}
