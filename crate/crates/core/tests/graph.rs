use std::collections::HashMap;

use itertools::Itertools;
use proptest::prelude::*;

use graphcx::graph::{
    automorphisms, canonical_form, contract_nest, enumerate_graphs, enumerate_nests, is_canonical, GraphFilter,
    ModularGraph,
};
use graphcx::linalg::RationalMatrix;
use graphcx::orientation::{
    contraction_orientation, iso_sign, permutation_sign, vanishes_under_automorphisms, Orientation,
};
use graphcx::Q;

type Shape = (Vec<u32>, Vec<(usize, usize)>, Vec<usize>);

fn shape(g: &ModularGraph) -> Shape {
    let edges = (0..g.edge_count())
        .map(|e| {
            let (a, b) = g.edge_endpoints(e);
            (a.min(b), a.max(b))
        })
        .collect();
    let legs = g.legs().iter().map(|&f| g.vertex_of(f)).collect();
    (g.genera().to_vec(), edges, legs)
}

/// Isomorphism by trying every vertex bijection.
fn brute_isomorphic(a: &Shape, b: &Shape) -> bool {
    let (ga, ea, la) = a;
    let (gb, eb, lb) = b;
    if ga.len() != gb.len() || ea.len() != eb.len() || la.len() != lb.len() {
        return false;
    }
    let mut target = eb.clone();
    target.sort_unstable();
    (0..ga.len()).permutations(ga.len()).any(|p| {
        if (0..ga.len()).any(|v| ga[v] != gb[p[v]]) || la.iter().zip(lb).any(|(&x, &y)| p[x] != y) {
            return false;
        }
        let mut mapped: Vec<(usize, usize)> = ea.iter().map(|&(x, y)| (p[x].min(p[y]), p[x].max(p[y]))).collect();
        mapped.sort_unstable();
        mapped == target
    })
}

fn invariant(s: &Shape) -> (Vec<u32>, Vec<usize>, usize) {
    let mut genera = s.0.clone();
    genera.sort_unstable();
    let mut degrees = vec![0; s.0.len()];
    for &(a, b) in &s.1 {
        degrees[a] += 1;
        degrees[b] += 1;
    }
    for &v in &s.2 {
        degrees[v] += 1;
    }
    degrees.sort_unstable();
    (genera, degrees, s.1.iter().filter(|(a, b)| a == b).count())
}

/// Isomorphism classes of stable graphs of type (g, n) by exhaustive search
/// over genus vectors, edge multisets and leg positions.
fn brute_force_classes(genus: u32, legs: usize) -> usize {
    let mut classes: HashMap<(Vec<u32>, Vec<usize>, usize), Vec<Shape>> = HashMap::new();
    let max_v = (2 * genus as usize + legs).saturating_sub(2).max(1);
    for v in 1..=max_v {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a..v).map(move |b| (a, b))).collect();
        for genera in (0..v).map(|_| 0..=genus).multi_cartesian_product() {
            let vertex_genus: u32 = genera.iter().sum();
            if vertex_genus > genus || (genus - vertex_genus) as usize + v < 1 {
                continue;
            }
            let e = (genus - vertex_genus) as usize + v - 1;
            for edges in pairs.iter().copied().combinations_with_replacement(e) {
                for leg_at in (0..legs).map(|_| 0..v).multi_cartesian_product() {
                    let Ok(g) = ModularGraph::from_edges(genera.clone(), &edges, &leg_at) else {
                        continue;
                    };
                    if !g.is_connected() {
                        continue;
                    }
                    let s = shape(&g);
                    let bucket = classes.entry(invariant(&s)).or_default();
                    if !bucket.iter().any(|t| brute_isomorphic(&s, t)) {
                        bucket.push(s);
                    }
                }
            }
        }
    }
    classes.values().map(Vec::len).sum()
}

#[test]
fn enumeration_matches_brute_force() {
    for (g, n) in [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0)] {
        let fast = enumerate_graphs(g as usize, n, &GraphFilter::default()).unwrap();
        assert_eq!(fast.len(), brute_force_classes(g, n), "({g},{n})");
    }
}

#[test]
fn known_counts() {
    // rooted phylogenetic trees, and the 42 stable graphs of genus three
    for (n, count) in [(4, 4), (5, 26), (6, 236), (7, 2752)] {
        assert_eq!(enumerate_graphs(0, n, &GraphFilter::default()).unwrap().len(), count);
    }
    assert_eq!(enumerate_graphs(3, 0, &GraphFilter::default()).unwrap().len(), 42);
}

#[test]
fn enumerated_graphs_are_pairwise_distinct() {
    for (g, n) in [(1, 3), (2, 1), (3, 0), (0, 6)] {
        let graphs = enumerate_graphs(g, n, &GraphFilter::default()).unwrap();
        let shapes: Vec<Shape> = graphs.iter().map(shape).collect();
        for (i, a) in shapes.iter().enumerate() {
            assert!(is_canonical(&graphs[i]));
            for b in &shapes[i + 1..] {
                assert!(!brute_isomorphic(a, b), "({g},{n}): {a:?} ~ {b:?}");
            }
        }
    }
}

#[test]
fn theta_automorphism_counts() {
    for j in 1..=3usize {
        let loops = 2 * j - 2;
        let mut edges = vec![(0, 1); 3];
        edges.extend(std::iter::repeat_n((1, 1), loops));
        let theta = ModularGraph::from_edges(vec![0, 1], &edges, &[]).unwrap();
        let fact: usize = (1..=loops).product();
        assert_eq!(automorphisms(&theta).len(), 6 * (1 << loops) * fact);
    }
}

#[test]
fn euler_relation_for_loopless_graphs() {
    let filter = GraphFilter {
        max_vertex_genus: Some(0),
        no_loops: true,
        ..Default::default()
    };
    for g in 2..=4 {
        for x in enumerate_graphs(g, 0, &filter).unwrap() {
            let (e, v) = (x.edge_count() as i64, x.vertex_count() as i64);
            assert_eq!(2 * g as i64 - e, e - 2 * v + 2);
        }
    }
}

fn random_graph() -> impl Strategy<Value = ModularGraph> {
    (1usize..=4, 0usize..=3)
        .prop_flat_map(|(v, legs)| {
            (
                proptest::collection::vec(0u32..=1, v),
                proptest::collection::vec((0..v, 0..v), 0..=5),
                proptest::collection::vec(0..v, legs),
            )
        })
        .prop_filter_map("unstable or disconnected", |(genus, edges, legs)| {
            let g = ModularGraph::from_edges(genus, &edges, &legs).ok()?;
            g.is_connected().then_some(g)
        })
}

/// The same graph with vertices renamed by `perm` and edges listed in a
/// rotated order.
fn relabel(g: &ModularGraph, perm: &[usize], rotate: usize) -> ModularGraph {
    let (genera, edges, legs) = shape(g);
    let n = genera.len();
    let mut new_genus = vec![0; n];
    for v in 0..n {
        new_genus[perm[v]] = genera[v];
    }
    let mut edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (perm[b], perm[a])).collect();
    if !edges.is_empty() {
        let k = rotate % edges.len();
        edges.rotate_left(k);
    }
    let legs: Vec<usize> = legs.iter().map(|&v| perm[v]).collect();
    ModularGraph::from_edges(new_genus, &edges, &legs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_is_a_class_invariant(g in random_graph(), seed in any::<u64>(), rotate in 0usize..8) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = relabel(&g, &perm, rotate);
        let (cg, wg) = canonical_form(&g).unwrap();
        let (ch, _) = canonical_form(&h).unwrap();
        prop_assert!(wg.is_isomorphism(&g, &cg));
        prop_assert_eq!(&cg, &ch);
        prop_assert_eq!(&canonical_form(&cg).unwrap().0, &cg);
        prop_assert!(brute_isomorphic(&shape(&g), &shape(&h)));
    }

    #[test]
    fn automorphisms_form_a_group(g in random_graph()) {
        let auts = automorphisms(&g);
        prop_assert!(auts.iter().any(|a| a.is_identity()));
        for a in &auts {
            prop_assert!(a.is_isomorphism(&g, &g));
            prop_assert!(auts.contains(&a.inverse()));
        }
        for a in auts.iter().take(6) {
            for b in auts.iter().take(6) {
                let ab = a.then(b);
                prop_assert!(auts.contains(&ab));
                // edge signs are multiplicative
                prop_assert_eq!(ab.edge_sign(&g, &g), a.edge_sign(&g, &g) * b.edge_sign(&g, &g));
                let o = Orientation::standard(g.edge_count());
                prop_assert_eq!(iso_sign(&ab, &g, &o, &g, &o), a.edge_sign(&g, &g) * b.edge_sign(&g, &g));
            }
        }
    }

    #[test]
    fn contraction_preserves_total_genus(g in random_graph()) {
        for nest in enumerate_nests(&g) {
            let c = contract_nest(&g, &nest).unwrap();
            prop_assert_eq!(c.quotient.total_genus(), g.total_genus());
            prop_assert_eq!(c.quotient.leg_count(), g.leg_count());
            prop_assert_eq!(c.quotient.edge_count() + nest.edges.len(), g.edge_count());
        }
    }

    /// One contraction of `A ∪ B` against contracting `A`, then `B`.
    #[test]
    fn two_step_contraction_signs(order in Just((0..7usize).collect::<Vec<_>>()).prop_shuffle(), mask_a in 1u8..127, mask_b in 1u8..127) {
        let mask_b = mask_b & !mask_a;
        prop_assume!(mask_b != 0);
        let a: Vec<usize> = (0..7).filter(|e| mask_a >> e & 1 == 1).collect();
        let b: Vec<usize> = (0..7).filter(|e| mask_b >> e & 1 == 1).collect();
        let ab: Vec<usize> = a.iter().chain(&b).copied().collect();
        let o = Orientation::new(order);
        let (s1, q1, n1) = contraction_orientation(&o, &a);
        let (s2, q2, n2) = contraction_orientation(&Orientation::new(q1), &b);
        let (s, q, n) = contraction_orientation(&o, &ab);
        prop_assert_eq!(&q, &q2);
        // two-step factorization reads q ∧ n2 ∧ n1; one-step reads q ∧ n
        let two: Vec<usize> = n2.iter().chain(&n1).copied().collect();
        let pos = |e: &usize| n.iter().position(|x| x == e).unwrap();
        let reorder = permutation_sign(&two.iter().map(pos).collect::<Vec<_>>());
        prop_assert_eq!(s, s1 * s2 * reorder);
    }

    /// With a trivial one dimensional label the class dies exactly when the
    /// averaging operator has rank zero.
    #[test]
    fn vanishing_matches_averaging_rank(g in random_graph()) {
        let auts = automorphisms(&g);
        let one = || RationalMatrix::identity(1);
        let vanishes = vanishes_under_automorphisms(&g, &auts, |_| one(), &[Q::from_integer(1.into())]);
        let total: i32 = auts.iter().map(|a| a.edge_sign(&g, &g)).sum();
        let averaging = RationalMatrix::from_dense(&[vec![Q::from_integer(total.into())]]);
        prop_assert_eq!(vanishes, graphcx::linalg::rank(&averaging) == 0);
    }
}
