//! Genus five: the smallest genus where the simple loop filter matters.

use std::collections::BTreeMap;

use graphcx::feynman::{build_complex, gc2_slice, ComplexOptions, Operad};

#[test]
fn hlie_genus_five_square_zero() {
    for no_simple_loops in [false, true] {
        let options = ComplexOptions {
            no_simple_loops,
            ..Default::default()
        };
        let c = build_complex(Operad::HLie, 5, 0, options).unwrap();
        assert!(!c.check_square_zero().unwrap().is_empty());
        let h: BTreeMap<i64, usize> = c.homology().unwrap();
        let nonzero: Vec<(i64, usize)> = h.into_iter().filter(|&(_, r)| r > 0).collect();
        if no_simple_loops {
            assert_eq!(nonzero, vec![(6, 1), (9, 1)]);
            assert_eq!(c.dims().get(&5), Some(&16));
        } else {
            assert!(nonzero.is_empty(), "{nonzero:?}");
        }
    }
}

#[test]
fn gc2_genus_five_has_one_class_in_degree_zero() {
    let s = gc2_slice(5, 0).unwrap();
    assert_eq!(s.slice.dims.get(&0), Some(&2));
    assert_eq!(s.slice.homology_rank(0).unwrap(), 1);
}
