use num_traits::{One, Zero};
use proptest::prelude::*;

use graphcx::linalg::{in_span, kernel_basis, rank, ChainComplexSlice, RationalMatrix};
use graphcx::Q;

fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

fn matrix(rows: &[Vec<i64>]) -> RationalMatrix {
    let dense: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    RationalMatrix::from_dense(&dense)
}

/// Textbook dense elimination, kept deliberately naive.
fn dense_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for k in 0..cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        // sparse-ish entries so that rank deficiency is common
        proptest::collection::vec(
            proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], c),
            r,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matches_dense_elimination(rows in small_matrix()) {
        prop_assert_eq!(rank(&matrix(&rows)), dense_rank(&rows));
    }

    #[test]
    fn rank_of_transpose(rows in small_matrix()) {
        let m = matrix(&rows);
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn kernel_is_annihilated_and_complementary(rows in small_matrix()) {
        let m = matrix(&rows);
        let k = kernel_basis(&m);
        prop_assert_eq!(k.len(), m.cols() - rank(&m));
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        // and the kernel vectors are independent
        if !k.is_empty() {
            let kt: Vec<Vec<Q>> = k.clone();
            prop_assert_eq!(rank(&RationalMatrix::from_dense(&kt)), k.len());
        }
    }

    #[test]
    fn rank_ignores_permutations(rows in small_matrix(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut permuted = rows.clone();
        permuted.shuffle(&mut rng);
        let mut order: Vec<usize> = (0..rows[0].len()).collect();
        order.shuffle(&mut rng);
        let permuted: Vec<Vec<i64>> = permuted.iter().map(|r| order.iter().map(|&c| r[c]).collect()).collect();
        prop_assert_eq!(rank(&matrix(&rows)), rank(&matrix(&permuted)));
    }

    #[test]
    fn span_membership(rows in small_matrix(), coeffs in proptest::collection::vec(-2i64..=2, 7)) {
        let m = matrix(&rows);
        // a combination of the columns is in the span
        let mut v = vec![Q::zero(); m.rows()];
        for c in 0..m.cols() {
            for (r, x) in v.iter_mut().enumerate() {
                *x += m.get(r, c) * q(coeffs[c]);
            }
        }
        prop_assert!(in_span(&v, &m).unwrap());
        // a vector raises the rank exactly when it is outside the span
        let mut e = vec![Q::zero(); m.rows()];
        e[0] = Q::one();
        let mut with: Vec<Vec<i64>> = rows.clone();
        with[0].push(1);
        for r in with.iter_mut().skip(1) {
            r.push(0);
        }
        let grows = dense_rank(&with) > dense_rank(&rows);
        prop_assert_eq!(in_span(&e, &m).unwrap(), !grows);
    }
}

#[test]
fn coordinate_text_is_sorted() {
    let m = matrix(&[vec![0, 2], vec![-1, 0]]);
    let half = RationalMatrix::from_dense(&[vec![Q::new(1.into(), 2.into())]]);
    assert_eq!(m.to_coordinate_text(), "0 1 2\n1 0 -1\n");
    assert_eq!(half.to_coordinate_text(), "0 0 1/2\n");
}

/// The boundary of a triangle (a circle) and of a filled triangle.
#[test]
fn simplicial_homology() {
    // vertices a b c, edges ab bc ca
    let d1 = matrix(&[vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]]);
    let mut circle = ChainComplexSlice::default();
    circle.dims.insert(0, 3);
    circle.dims.insert(1, 3);
    circle.boundaries.insert(1, d1.clone());
    assert_eq!(circle.homology_rank(0).unwrap(), 1);
    assert_eq!(circle.homology_rank(1).unwrap(), 1);

    let mut disc = circle.clone();
    disc.dims.insert(2, 1);
    disc.boundaries.insert(2, matrix(&[vec![1], vec![1], vec![1]]));
    assert_eq!(disc.homology_rank(1).unwrap(), 0);
    assert_eq!(disc.homology_rank(2).unwrap(), 0);

    let mut broken = circle;
    broken.dims.insert(2, 1);
    broken.boundaries.insert(2, matrix(&[vec![1], vec![0], vec![0]]));
    assert!(broken.homology_rank(1).is_err());
}
