//! Canonical forms by colour refinement plus exhaustive individualisation.
//!
//! Vertices are coloured by (genus, loops, valence, leg labels) and refined
//! by neighbour multiplicities. Every remaining tie is broken in all possible
//! ways and the lexicographically least encoding wins. All orderings that
//! reach the least encoding differ by a vertex automorphism, which is how the
//! automorphism group is obtained. Flags are laid out deterministically from
//! the vertex order, so the canonical graph is a function of the encoding.

use std::collections::{HashSet, VecDeque};

use super::{AbstractGraph, FlagId, ModularGraph, VertexId};
use crate::error::{Error, Result};
use crate::orientation::permutation_sign;

/// A pair of bijections on vertices and flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphIsomorphism {
    pub vertex_map: Vec<VertexId>,
    pub flag_map: Vec<FlagId>,
}

impl GraphIsomorphism {
    pub fn identity(g: &ModularGraph) -> Self {
        GraphIsomorphism {
            vertex_map: (0..g.vertex_count()).collect(),
            flag_map: (0..g.flag_count()).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GraphIsomorphism) -> GraphIsomorphism {
        GraphIsomorphism {
            vertex_map: self.vertex_map.iter().map(|&v| next.vertex_map[v]).collect(),
            flag_map: self.flag_map.iter().map(|&f| next.flag_map[f]).collect(),
        }
    }

    pub fn inverse(&self) -> GraphIsomorphism {
        let mut vertex_map = vec![0; self.vertex_map.len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            vertex_map[w] = v;
        }
        let mut flag_map = vec![0; self.flag_map.len()];
        for (f, &h) in self.flag_map.iter().enumerate() {
            flag_map[h] = f;
        }
        GraphIsomorphism { vertex_map, flag_map }
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &v)| i == v)
            && self.flag_map.iter().enumerate().all(|(i, &f)| i == f)
    }

    /// Checks that this maps `src` onto `tgt` respecting adjacency,
    /// involution, genera and leg labels.
    pub fn is_isomorphism(&self, src: &ModularGraph, tgt: &ModularGraph) -> bool {
        if src.vertex_count() != tgt.vertex_count()
            || src.flag_count() != tgt.flag_count()
            || self.vertex_map.len() != src.vertex_count()
            || self.flag_map.len() != src.flag_count()
        {
            return false;
        }
        let mut seen_v = vec![false; tgt.vertex_count()];
        for &w in &self.vertex_map {
            if w >= seen_v.len() || seen_v[w] {
                return false;
            }
            seen_v[w] = true;
        }
        let mut seen_f = vec![false; tgt.flag_count()];
        for &h in &self.flag_map {
            if h >= seen_f.len() || seen_f[h] {
                return false;
            }
            seen_f[h] = true;
        }
        for v in 0..src.vertex_count() {
            if src.genus_of(v) != tgt.genus_of(self.vertex_map[v]) {
                return false;
            }
        }
        for f in 0..src.flag_count() {
            let h = self.flag_map[f];
            if tgt.vertex_of(h) != self.vertex_map[src.vertex_of(f)] || tgt.partner(h) != self.flag_map[src.partner(f)]
            {
                return false;
            }
        }
        src.legs().iter().zip(tgt.legs()).all(|(&a, &b)| self.flag_map[a] == b)
    }

    /// Image of each source edge index among target edge indices.
    pub fn edge_permutation(&self, src: &ModularGraph, tgt: &ModularGraph) -> Vec<usize> {
        src.edges()
            .iter()
            .map(|&(a, _)| tgt.edge_of_flag(self.flag_map[a]).expect("edge maps to edge"))
            .collect()
    }

    /// Sign of the induced edge permutation, with both edge sets in their
    /// standard order.
    pub fn edge_sign(&self, src: &ModularGraph, tgt: &ModularGraph) -> i32 {
        permutation_sign(&self.edge_permutation(src, tgt))
    }
}

struct Structure {
    n: usize,
    mult: Vec<Vec<u32>>,
    base: Vec<Vec<u32>>,
}

impl Structure {
    fn new(g: &ModularGraph) -> Self {
        let n = g.vertex_count();
        let mut mult = vec![vec![0u32; n]; n];
        for &(a, b) in g.edges() {
            let (u, w) = (g.vertex_of(a), g.vertex_of(b));
            if u != w {
                mult[u][w] += 1;
                mult[w][u] += 1;
            }
        }
        let base = (0..n)
            .map(|v| {
                let mut labels: Vec<u32> = g
                    .flags_at(v)
                    .iter()
                    .filter_map(|&f| g.leg_label(f).map(|l| l as u32))
                    .collect();
                labels.sort_unstable();
                let mut key = vec![
                    g.genus_of(v),
                    g.loops_at(v) as u32,
                    g.valence(v) as u32,
                    labels.len() as u32,
                ];
                key.extend(labels);
                key
            })
            .collect();
        Structure { n, mult, base }
    }

    fn initial_cells(&self) -> Vec<Vec<VertexId>> {
        let mut order: Vec<VertexId> = (0..self.n).collect();
        order.sort_by(|&a, &b| self.base[a].cmp(&self.base[b]));
        split_sorted(&order, |v| self.base[v].clone())
    }

    fn refine(&self, mut cells: Vec<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
        loop {
            let mut cell_of = vec![0; self.n];
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let signature = |v: VertexId| {
                let mut s = vec![0u32; cells.len()];
                for w in 0..self.n {
                    s[cell_of[w]] += self.mult[v][w];
                }
                s
            };
            let mut next = Vec::with_capacity(cells.len());
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, VertexId)> = c.iter().map(|&v| (signature(v), v)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|x| x.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn encode(&self, order: &[VertexId]) -> Vec<u32> {
        let mut code = Vec::new();
        for &v in order {
            code.extend_from_slice(&self.base[v]);
        }
        for p in 0..order.len() {
            for q in p + 1..order.len() {
                code.push(self.mult[order[p]][order[q]]);
            }
        }
        code
    }

    fn search(&self, cells: Vec<Vec<VertexId>>, best: &mut Option<(Vec<u32>, Vec<Vec<VertexId>>)>) {
        let cells = self.refine(cells);
        match cells.iter().position(|c| c.len() > 1) {
            None => {
                let order: Vec<VertexId> = cells.into_iter().map(|c| c[0]).collect();
                let code = self.encode(&order);
                match best {
                    Some((b, orders)) => match code.cmp(b) {
                        std::cmp::Ordering::Less => *best = Some((code, vec![order])),
                        std::cmp::Ordering::Equal => orders.push(order),
                        std::cmp::Ordering::Greater => {}
                    },
                    None => *best = Some((code, vec![order])),
                }
            }
            Some(i) => {
                for &v in &cells[i] {
                    let mut next = Vec::with_capacity(cells.len() + 1);
                    next.extend_from_slice(&cells[..i]);
                    next.push(vec![v]);
                    next.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                    next.extend_from_slice(&cells[i + 1..]);
                    self.search(next, best);
                }
            }
        }
    }
}

fn split_sorted<K: PartialEq>(sorted: &[VertexId], key: impl Fn(VertexId) -> K) -> Vec<Vec<VertexId>> {
    let mut cells = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || key(sorted[i]) != key(sorted[start]) {
            cells.push(sorted[start..i].to_vec());
            start = i;
        }
    }
    cells
}

/// Lays out the graph with vertices in `order` and returns it together with
/// the isomorphism from `g`.
fn relabel(g: &ModularGraph, order: &[VertexId]) -> (ModularGraph, GraphIsomorphism) {
    let n = order.len();
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    // blocks[p][q]: flags at order[p] pointing to order[q], paired by index
    let mut blocks: Vec<Vec<Vec<FlagId>>> = vec![vec![Vec::new(); n]; n];
    for p in 0..n {
        for &f in g.flags_at(order[p]) {
            if g.is_leg(f) {
                continue;
            }
            let q = pos[g.vertex_of(g.partner(f))];
            if p < q {
                blocks[p][q].push(f);
            }
        }
    }
    for p in 0..n {
        for q in p + 1..n {
            let back: Vec<FlagId> = blocks[p][q].iter().map(|&f| g.partner(f)).collect();
            blocks[q][p] = back;
        }
    }
    let mut flag_map = vec![usize::MAX; g.flag_count()];
    let mut adjacency = Vec::with_capacity(g.flag_count());
    for p in 0..n {
        let v = order[p];
        let mut legs: Vec<(usize, FlagId)> = g
            .flags_at(v)
            .iter()
            .filter_map(|&f| g.leg_label(f).map(|l| (l, f)))
            .collect();
        legs.sort_unstable();
        for (_, f) in legs {
            flag_map[f] = adjacency.len();
            adjacency.push(p);
        }
        for &f in g.flags_at(v) {
            let h = g.partner(f);
            if h > f && g.vertex_of(h) == v {
                flag_map[f] = adjacency.len();
                adjacency.push(p);
                flag_map[h] = adjacency.len();
                adjacency.push(p);
            }
        }
        for q in 0..n {
            if q == p {
                continue;
            }
            for &f in &blocks[p][q] {
                flag_map[f] = adjacency.len();
                adjacency.push(p);
            }
        }
    }
    let mut involution = vec![0; g.flag_count()];
    for f in 0..g.flag_count() {
        involution[flag_map[f]] = flag_map[g.partner(f)];
    }
    let genus = order.iter().map(|&v| g.genus_of(v)).collect();
    let legs = g.legs().iter().map(|&f| flag_map[f]).collect();
    let graph = AbstractGraph::new(n, adjacency, involution).expect("relabelled graph is valid");
    let canonical = ModularGraph::assemble(graph, genus, legs).expect("relabelled graph is valid");
    (
        canonical,
        GraphIsomorphism {
            vertex_map: pos,
            flag_map,
        },
    )
}

struct Canonical {
    graph: ModularGraph,
    witness: GraphIsomorphism,
    vertex_automorphisms: Vec<GraphIsomorphism>,
}

fn canonicalize(g: &ModularGraph) -> Canonical {
    let st = Structure::new(g);
    let mut best = None;
    st.search(st.initial_cells(), &mut best);
    let (_, orders) = best.expect("at least one vertex");
    let (graph, witness) = relabel(g, &orders[0]);
    let back = witness.inverse();
    let vertex_automorphisms = orders[1..]
        .iter()
        .map(|o| {
            let (other, w) = relabel(g, o);
            debug_assert_eq!(other, graph);
            back.then(&w)
        })
        .collect();
    Canonical {
        graph,
        witness,
        vertex_automorphisms,
    }
}

/// Returns the canonical representative of the isomorphism class of `g`
/// together with an isomorphism from `g` onto it.
pub fn canonical_form(g: &ModularGraph) -> Result<(ModularGraph, GraphIsomorphism)> {
    g.check_stable()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let c = canonicalize(g);
    Ok((c.graph, c.witness))
}

pub fn is_canonical(g: &ModularGraph) -> bool {
    canonicalize(g).graph == *g
}

/// Automorphisms that only permute parallel edges and loops at a vertex
/// and flip loops. Together with the vertex automorphisms they generate
/// the whole group.
fn local_generators(g: &ModularGraph) -> Vec<GraphIsomorphism> {
    let id = GraphIsomorphism::identity(g);
    let mut gens = Vec::new();
    let swap = |pairs: &[(FlagId, FlagId)]| {
        let mut iso = id.clone();
        for &(a, b) in pairs {
            iso.flag_map[a] = b;
            iso.flag_map[b] = a;
        }
        iso
    };
    for v in 0..g.vertex_count() {
        let loops: Vec<(FlagId, FlagId)> = g
            .flags_at(v)
            .iter()
            .filter_map(|&f| {
                let h = g.partner(f);
                (h > f && g.vertex_of(h) == v).then_some((f, h))
            })
            .collect();
        for &(a, b) in &loops {
            gens.push(swap(&[(a, b)]));
        }
        for w in loops.windows(2) {
            gens.push(swap(&[(w[0].0, w[1].0), (w[0].1, w[1].1)]));
        }
        for u in v + 1..g.vertex_count() {
            let parallel: Vec<(FlagId, FlagId)> = g
                .flags_at(v)
                .iter()
                .filter(|&&f| !g.is_leg(f) && g.vertex_of(g.partner(f)) == u)
                .map(|&f| (f, g.partner(f)))
                .collect();
            for w in parallel.windows(2) {
                gens.push(swap(&[(w[0].0, w[1].0), (w[0].1, w[1].1)]));
            }
        }
    }
    gens
}

/// A generating set of `Aut(g)`. The identity is never included.
pub fn automorphism_generators(g: &ModularGraph) -> Vec<GraphIsomorphism> {
    let c = canonicalize(g);
    // conjugate automorphisms of the canonical graph back to g
    let back = c.witness.inverse();
    let mut gens: Vec<GraphIsomorphism> = c
        .vertex_automorphisms
        .iter()
        .map(|a| c.witness.then(a).then(&back))
        .collect();
    gens.extend(local_generators(g));
    let mut seen = HashSet::new();
    gens.retain(|a| !a.is_identity() && seen.insert(a.clone()));
    gens
}

/// The full automorphism group as an explicit list, identity first.
pub fn automorphisms(g: &ModularGraph) -> Vec<GraphIsomorphism> {
    let gens = automorphism_generators(g);
    let id = GraphIsomorphism::identity(g);
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut all = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(a) = queue.pop_front() {
        for s in &gens {
            let b = a.then(s);
            if seen.insert(b.clone()) {
                all.push(b.clone());
                queue.push_back(b);
            }
        }
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(loops: usize) -> ModularGraph {
        let mut edges = vec![(0, 1); 3];
        edges.extend(std::iter::repeat_n((1, 1), loops));
        ModularGraph::from_edges(vec![0, 1], &edges, &[]).unwrap()
    }

    #[test]
    fn corolla_is_rigid() {
        let g = ModularGraph::from_edges(vec![0], &[], &[0, 0, 0]).unwrap();
        let (c, w) = canonical_form(&g).unwrap();
        assert!(w.is_isomorphism(&g, &c));
        assert_eq!(automorphisms(&c).len(), 1);
    }

    #[test]
    fn theta_groups() {
        assert_eq!(automorphisms(&theta(0)).len(), 6);
        assert_eq!(automorphisms(&theta(2)).len(), 48);
    }

    #[test]
    fn wheel_presentations_agree() {
        let a = ModularGraph::from_edges(vec![0; 4], &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)], &[]).unwrap();
        let b = ModularGraph::from_edges(vec![0; 4], &[(2, 3), (1, 0), (3, 1), (0, 2), (1, 2), (3, 0)], &[]).unwrap();
        let (ca, wa) = canonical_form(&a).unwrap();
        let (cb, wb) = canonical_form(&b).unwrap();
        assert_eq!(ca, cb);
        assert!(wa.is_isomorphism(&a, &ca));
        assert!(wb.is_isomorphism(&b, &cb));
        assert_eq!(automorphisms(&a).len(), 24);
        assert!(automorphisms(&a).iter().all(|s| s.is_isomorphism(&a, &a)));
    }

    #[test]
    fn canonical_is_idempotent() {
        let g = theta(2);
        let (c, _) = canonical_form(&g).unwrap();
        let (cc, w) = canonical_form(&c).unwrap();
        assert_eq!(c, cc);
        assert!(w.is_isomorphism(&c, &cc));
        assert!(is_canonical(&c));
    }
}
