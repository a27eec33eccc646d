use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use torus_bundles::bundle::TorusBundle;
use torus_bundles::covers::{
    fiber_covers, geom_sum, lift_matrix, sakuma_geom_sum_from_f, sakuma_power_from_f,
};
use torus_bundles::intlat::{snf, sublattices, IntMatrix, Mat2};

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(proptest::collection::vec(-12i64..=12, cols), rows)
        .prop_map(|r| IntMatrix::from_rows(&r))
}

fn sl2(range: i64) -> impl Strategy<Value = Mat2> {
    (
        -range..=range,
        -range..=range,
        -range..=range,
        -range..=range,
    )
        .prop_map(|(a, b, c, d)| Mat2::from_i64(a, b, c, d))
        .prop_filter("det 1", |m| m.is_sl2())
}

fn gcd_of_entries(m: &IntMatrix) -> BigInt {
    let mut g = BigInt::zero();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            g = g.gcd(&m[(i, j)]);
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_reconstructs(m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| int_matrix(r, c))) {
        let s = snf(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.diagonal_matrix());
        prop_assert_eq!(s.u.det().abs(), BigInt::from(1));
        prop_assert_eq!(s.v.det().abs(), BigInt::from(1));
        for w in s.diagonal.windows(2) {
            prop_assert!(!w[0].is_negative());
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
        prop_assert_eq!(s.diagonal[0].clone(), gcd_of_entries(&m));
    }

    #[test]
    fn smith_form_preserves_determinant(m in (1usize..=4).prop_flat_map(|n| int_matrix(n, n))) {
        let s = snf(&m);
        let prod: BigInt = s.diagonal.iter().product();
        prop_assert_eq!(prod, m.det().abs());
    }

    #[test]
    fn powers_add(a in sl2(4), i in -6i64..6, j in -6i64..6) {
        prop_assert_eq!(&a.pow(i).unwrap() * &a.pow(j).unwrap(), a.pow(i + j).unwrap());
    }

    #[test]
    fn bundle_invariants_are_conjugation_invariant(a in sl2(5), g in sl2(3)) {
        let m = TorusBundle::new(a.clone()).unwrap();
        let c = TorusBundle::new(a.conjugated_by(&g).unwrap()).unwrap();
        prop_assert_eq!(m.homology(), c.homology());
        prop_assert_eq!(m.genus(), c.genus());
        prop_assert_eq!(m.sakuma_pairs(), c.sakuma_pairs());
        prop_assert!(m.homeomorphic(&c) && m.homeomorphic(&m.inverse()));
    }

    #[test]
    fn f_formulas_match_products(a in -8i64..=8, b in -8i64..=8, n in 1i64..=20) {
        let m = TorusBundle::sakuma(a, b);
        prop_assert_eq!(sakuma_power_from_f(a, b, n).unwrap(), m.monodromy().pow(n).unwrap());
        prop_assert_eq!(sakuma_geom_sum_from_f(a, b, n).unwrap(), geom_sum(m.monodromy(), n).unwrap());
    }

    #[test]
    fn lifted_monodromy_is_a_change_of_basis(a in sl2(5), n in 1i64..=8) {
        let m = TorusBundle::new(a.clone()).unwrap();
        for c in fiber_covers(&m, n).unwrap() {
            let [[p, q], [s, r]] = c.lattice.basis();
            let b = Mat2::from_i64(p, s, q, r);
            prop_assert_eq!(&a * &b, &b * c.lifted.monodromy());
            prop_assert_eq!(lift_matrix(&a, &c.lattice).unwrap(), c.lifted.monodromy().clone());
        }
    }
}

#[test]
fn sublattices_are_distinct_with_the_right_index() {
    for n in 1..=60 {
        let ls = sublattices(n).unwrap();
        let mut keys: Vec<_> = ls.iter().map(|l| l.sort_key()).collect();
        keys.dedup();
        assert_eq!(keys.len(), ls.len());
        assert!(ls
            .iter()
            .all(|l| l.index() == n && l.contains_i64([n, 0]) && l.contains_i64([0, n])));
        assert!(ls.windows(2).all(|w| w[0] < w[1]));
    }
}
