use graphcx::graph::ModularGraph;
use graphcx::hlie::{
    alpha, compose_edge, kernel_identity, m_t, massey_closed_form, massey_polygon, model_dimension, mu, x_class,
    BlowUpOrder, GenusOneClass, LabeledPolygon, OperadElement,
};
use graphcx::orientation::Orientation;
use graphcx::rational::q;
use graphcx::symrep::wedge::WedgeVec;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |a, j| a * (n - j) / (j + 1))
}

#[test]
fn model_dimensions_are_hook_dimensions() {
    for n in 1..=9 {
        for i in (0..n).step_by(2) {
            assert_eq!(model_dimension(n, i), binomial(n - 1, i), "n={n} i={i}");
        }
    }
}

#[test]
fn top_degree_is_one_dimensional_and_alternating() {
    for j in 1..=3 {
        let a = alpha(j);
        assert!(!a.is_zero());
        assert_eq!(model_dimension(2 * j + 1, 2 * j), 1);
        // a transposition of two flags negates alpha
        let swapped = a.relabel(|f| match f {
            1 => 2 * j + 1,
            x if x == 2 * j + 1 => 1,
            x => x,
        });
        assert_eq!(swapped, a.scale(&-q(1)));
    }
}

#[test]
fn product_composed_with_alpha_is_nonzero_and_z_vanishes() {
    for (t, j) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)] {
        // alpha on flags t+1..=t+2j+1, glued at its last flag to m_t's flag t+1
        let a = OperadElement::Genus1(alpha(j).relabel(|f| f + t));
        let m = OperadElement::product((1..=t).chain([60]).collect());
        let c = compose_edge(&m, 60, &a, t + 2 * j + 1).unwrap().unwrap();
        let OperadElement::Genus1(c) = c else {
            panic!("genus one expected")
        };
        assert!(!c.is_zero());
        let mut z = c.clone();
        for k in 1..=t {
            z = z.add(&c.relabel(|f| {
                if f == k {
                    t + 1
                } else if f == t + 1 {
                    k
                } else {
                    f
                }
            }));
        }
        assert!(z.is_zero(), "t={t} j={j}");
    }
}

#[test]
fn x_class_symmetries() {
    assert_eq!(x_class(1), alpha(1));
    for j in 2..=3 {
        let x = x_class(j);
        assert_eq!(x.arity(), 4 * j - 1);
        assert_eq!(x.degree(), 2 * j);
        assert!(!x.is_zero());
        for i in 1..=2 * j - 2 {
            let (a, b) = (2 * i + 2, 2 * i + 3);
            let flip = x.relabel(|f| {
                if f == a {
                    b
                } else if f == b {
                    a
                } else {
                    f
                }
            });
            assert_eq!(flip, x, "flipping loop {i}");
        }
        for i in 2..=2 * j - 2 {
            let (a, b) = (2 * i + 2, 2 * i + 3);
            let swap = x.relabel(|f| match f {
                4 => a,
                5 => b,
                f if f == a => 4,
                f if f == b => 5,
                f => f,
            });
            assert_eq!(swap, x.scale(&-q(1)), "swapping loops 1 and {i}");
        }
        let sign = x.relabel(|f| match f {
            1 => 2,
            2 => 1,
            f => f,
        });
        assert_eq!(sign, x.scale(&-q(1)));
    }
}

#[test]
fn kernel_identity_holds() {
    for j in 2..=3 {
        let k = kernel_identity(j);
        assert!(k.combination.is_zero(), "j={j}");
        assert!(!k.v.is_zero());
        assert!(k.claim_one && k.claim_two);
        assert!(k.v_over_x.is_some());
    }
}

#[test]
fn standard_polygon_gives_alpha() {
    for j in 1..=3 {
        let p = LabeledPolygon::standard(2 * j + 1);
        assert_eq!(massey_polygon(&p, BlowUpOrder::FirstVertex), alpha(j));
        let mut swapped = p.clone();
        swapped.orientation.swap(0, 1);
        assert_eq!(
            massey_polygon(&swapped, BlowUpOrder::FirstVertex),
            alpha(j).scale(&-q(1))
        );
    }
}

#[test]
fn even_polygons_and_genus_two_vanish() {
    let square = ModularGraph::from_edges(vec![0; 4], &[(0, 1), (1, 2), (2, 3), (3, 0)], &[0, 1, 2, 3]).unwrap();
    let labels: Vec<OperadElement> = (0..4)
        .map(|v| OperadElement::product(square.flags_at(v).to_vec()))
        .collect();
    assert!(mu(&square, &labels, &Orientation::standard(4)).unwrap().is_none());
    let two_loops = ModularGraph::from_edges(vec![0, 1], &[(0, 1), (1, 1)], &[0, 0]).unwrap();
    let l0 = OperadElement::product(two_loops.flags_at(0).to_vec());
    let l1 = OperadElement::Genus1(GenusOneClass::new(
        two_loops.flags_at(1).to_vec(),
        0,
        WedgeVec::from([(0, q(1))]),
    ));
    assert!(mu(&two_loops, &[l0, l1], &Orientation::standard(2)).unwrap().is_none());
}

#[test]
fn binary_products_compose() {
    let a = OperadElement::product(vec![1, 2, 3]);
    let b = OperadElement::product(vec![4, 5, 6]);
    let c = compose_edge(&a, 3, &b, 4).unwrap().unwrap();
    assert_eq!(c, OperadElement::product(vec![1, 2, 5, 6]));
    assert!(compose_edge(&a, 9, &b, 4).is_err());
    let _ = m_t(2);
}

fn polygon_strategy() -> impl Strategy<Value = LabeledPolygon> {
    (1usize..=3)
        .prop_flat_map(|j| {
            let l = 2 * j + 1;
            (
                Just(l),
                proptest::collection::vec(1usize..=3, l),
                Just((0..l).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(l, sizes, orientation)| {
            let mut next = 1;
            let legs = sizes
                .iter()
                .map(|&s| {
                    let v: Vec<usize> = (next..next + s).collect();
                    next += s;
                    v
                })
                .collect();
            let _ = l;
            LabeledPolygon {
                legs,
                edges: (0..l).collect(),
                orientation,
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn massey_matches_closed_form_and_order(p in polygon_strategy()) {
        let first = massey_polygon(&p, BlowUpOrder::FirstVertex);
        let last = massey_polygon(&p, BlowUpOrder::LastVertex);
        prop_assert_eq!(&first, &last);
        prop_assert_eq!(&first, &massey_closed_form(&p));
        prop_assert!(!first.is_zero());
    }

    #[test]
    fn massey_is_dihedrally_invariant(p in polygon_strategy(), shift in 0usize..7) {
        let l = p.sides();
        let s = shift % l;
        let mut rotated = p.clone();
        rotated.legs.rotate_left(s);
        rotated.edges.rotate_left(s);
        prop_assert_eq!(massey_polygon(&rotated, BlowUpOrder::FirstVertex), massey_polygon(&p, BlowUpOrder::FirstVertex));
        // reverse traversal: vertex k -> l-1-k, edge (k,k+1) -> (l-2-k, l-1-k)
        let mut reflected = p.clone();
        reflected.legs.reverse();
        let mut edges = p.edges.clone();
        edges.reverse();
        edges.rotate_left(1);
        reflected.edges = edges;
        prop_assert_eq!(massey_polygon(&reflected, BlowUpOrder::FirstVertex), massey_polygon(&p, BlowUpOrder::FirstVertex));
    }

    #[test]
    fn composition_is_equivariant(perm in Just((1usize..=7).collect::<Vec<_>>()).prop_shuffle(), glue in 1usize..=4) {
        // genus one class on flags 1..=4 (degree 2), product on 5..=7 plus flag 8
        let c = GenusOneClass::monomial(vec![1, 2, 3, 4], &[1, 3], q(1))
            .add(&GenusOneClass::monomial(vec![1, 2, 3, 4], &[2, 3], q(2)));
        let a = OperadElement::Genus1(c.clone());
        let b = OperadElement::product(vec![5, 6, 7, 8]);
        let composed = compose_edge(&a, glue, &b, 8).unwrap().unwrap();
        let sigma = |f: usize| if f == glue || f == 8 { f } else if f < 8 { let r: Vec<usize> = (1..=7).filter(|&x| x != glue).collect(); let i = r.iter().position(|&x| x == f).unwrap(); let img: Vec<usize> = perm.iter().copied().filter(|&x| x != glue).collect(); img[i] } else { f };
        let a2 = OperadElement::Genus1(c.relabel(sigma));
        let b2 = OperadElement::product(vec![5, 6, 7, 8].into_iter().map(sigma).collect());
        let composed2 = compose_edge(&a2, glue, &b2, 8).unwrap().unwrap();
        let OperadElement::Genus1(x) = composed else { unreachable!() };
        let OperadElement::Genus1(y) = composed2 else { unreachable!() };
        prop_assert_eq!(x.relabel(sigma), y);
    }
}

#[test]
fn loop_contraction_is_the_one_gon() {
    let g = ModularGraph::from_edges(vec![0], &[(0, 0)], &[0]).unwrap();
    let label = OperadElement::product(g.flags_at(0).to_vec());
    let r = mu(&g, &[label], &Orientation::standard(1)).unwrap().unwrap();
    let OperadElement::Genus1(c) = r else { panic!() };
    assert_eq!(c.degree(), 0);
    assert_eq!(c.coords().get(&0).cloned().unwrap_or_else(Zero::zero), One::one());
}
