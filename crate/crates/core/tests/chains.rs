//! Structural properties of the Feynman transform differential.

use num_traits::One;

use graphcx::feynman::{
    build_complex, omega_chain, BasisRef, ChainJson, ComplexOptions, DifferentialMode, FeynmanTransform, LabeledChain,
    Operad,
};
use graphcx::Q;

fn all_basis(
    operad: Operad,
    g: usize,
    n: usize,
    options: ComplexOptions,
) -> (std::sync::Arc<FeynmanTransform>, Vec<BasisRef>) {
    let c = build_complex(operad, g, n, options).unwrap();
    let basis = c.degrees().flat_map(|d| c.basis(d).to_vec()).collect();
    (c.transform().clone(), basis)
}

#[test]
fn chain_json_round_trip() {
    let (t, basis) = all_basis(Operad::HLie, 1, 4, ComplexOptions::default());
    let mut chain = LabeledChain::zero(1, 4);
    for (k, b) in basis.iter().enumerate() {
        chain.add_term(b.clone(), Q::new(((k % 5) as i64 - 2).into(), 3.into()));
    }
    let text = serde_json::to_string(&chain.to_json(&t)).unwrap();
    let parsed: ChainJson = serde_json::from_str(&text).unwrap();
    assert_eq!(LabeledChain::from_json(&t, &parsed).unwrap(), chain);

    let com = FeynmanTransform::new(Operad::Com);
    let omega = omega_chain(&com, 2).unwrap();
    let j = omega.to_json(&com);
    assert_eq!(j.terms.len(), 1);
    assert_eq!(LabeledChain::from_json(&com, &j).unwrap(), omega);
}

/// A nest with `e` edges sends bidegree `(E, s)` to `(E - e, s + e - 1)`.
#[test]
fn bigrading_of_every_term() {
    for (g, n) in [(1, 5), (3, 0)] {
        let (t, basis) = all_basis(Operad::HLie, g, n, ComplexOptions::default());
        let mut polygons = 0;
        for b in &basis {
            let (e, s) = (b.key.graph.edge_count(), b.key.degree);
            for (nest, chain) in t.nest_terms(b, DifferentialMode::Full, None).unwrap() {
                polygons += usize::from(nest.len() > 1);
                for target in chain.terms().keys() {
                    assert_eq!(target.key.graph.edge_count(), e - nest.len());
                    assert_eq!(target.key.degree, s + nest.len() - 1);
                }
            }
        }
        assert!(polygons > 0, "({g},{n}) exercised no Massey terms");
    }
}

#[test]
fn simple_loop_free_graphs_are_closed() {
    for (g, n) in [(1, 5), (3, 0), (2, 2)] {
        let (t, basis) = all_basis(Operad::HLie, g, n, ComplexOptions::default());
        for b in basis.iter().filter(|b| !b.key.graph.has_simple_loops()) {
            let d = t.differential_of(b, DifferentialMode::Full, None).unwrap();
            for target in d.terms().keys() {
                assert!(!target.key.graph.has_simple_loops(), "{:?}", b.key.graph);
            }
        }
    }
}

#[test]
fn single_edge_part_squares_to_zero() {
    for (operad, g, n) in [(Operad::HLie, 3, 0), (Operad::HLie, 1, 5), (Operad::Com, 4, 0)] {
        let (t, basis) = all_basis(operad, g, n, ComplexOptions::default());
        for b in &basis {
            let once = t.d1(&LabeledChain::basis(b.clone())).unwrap();
            assert!(t.d1(&once).unwrap().is_zero(), "{operad} ({g},{n})");
        }
    }
}

/// A genus one vertex of valence `m` with label degree `i` and at least
/// `m - i` loops carries nothing.
#[test]
fn too_many_loops_kill_the_label() {
    let t = FeynmanTransform::new(Operad::HLie);
    let mut checked = 0;
    for genus in 2..=4 {
        let graphs = graphcx::graph::enumerate_graphs(
            genus,
            0,
            &graphcx::graph::GraphFilter {
                max_vertex_genus: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        for g in graphs {
            let ones: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.genus_of(v) == 1).collect();
            let [v] = ones[..] else { continue };
            let m = g.valence(v);
            for i in (2..m).step_by(2) {
                if g.loops_at(v) >= m - i {
                    assert_eq!(t.summand(&g, i).dim(), 0, "{g:?} degree {i}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn differential_is_linear() {
    let (t, basis) = all_basis(Operad::HLie, 1, 4, ComplexOptions::default());
    let (a, b) = (&basis[basis.len() / 3], &basis[2 * basis.len() / 3]);
    let mut sum = LabeledChain::basis(a.clone());
    sum.add_term(b.clone(), Q::new(3.into(), 2.into()));
    let lhs = t.differential(&sum, DifferentialMode::Full, None).unwrap();
    let mut rhs = t.differential_of(a, DifferentialMode::Full, None).unwrap();
    rhs.add_scaled(
        &t.differential_of(b, DifferentialMode::Full, None).unwrap(),
        &Q::new(3.into(), 2.into()),
    );
    assert_eq!(lhs, rhs);
    let mut cancel = lhs.clone();
    cancel.add_scaled(&rhs, &-Q::one());
    assert!(cancel.is_zero());
}
