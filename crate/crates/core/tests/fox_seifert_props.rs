use num_integer::Integer;
use proptest::prelude::*;
use torus_bundles::fox::{fox_derivative, FormalSum, GroupWord, GENERATORS};
use torus_bundles::seifert::{cyclic_cover, SeifertSymbol};

fn word() -> impl Strategy<Value = GroupWord> {
    proptest::collection::vec(
        (proptest::sample::select(GENERATORS.to_vec()), -3i64..=3),
        0..6,
    )
    .prop_map(|p| GroupWord::from_powers(&p).unwrap())
}

fn d(w: &GroupWord, g: char) -> FormalSum {
    fox_derivative(w, g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn product_rule(u in word(), v in word()) {
        for g in GENERATORS {
            prop_assert_eq!(d(&(&u * &v), g), &d(&u, g) + &d(&v, g).left_mul(&u));
        }
    }

    #[test]
    fn inverse_rule(u in word()) {
        for g in GENERATORS {
            prop_assert_eq!(d(&u.inverse(), g), -&d(&u, g).left_mul(&u.inverse()));
        }
    }

    #[test]
    fn fundamental_formula(u in word()) {
        let mut total = FormalSum::zero();
        for g in GENERATORS {
            let dg = d(&u, g);
            total = &(&total + &dg.right_mul(&GroupWord::generator(g).unwrap())) - &dg;
        }
        let expected = &FormalSum::from_word(u.clone()) - &FormalSum::one();
        prop_assert_eq!(total, expected);
    }

    #[test]
    fn words_print_and_parse(u in word()) {
        prop_assert_eq!(GroupWord::parse(&u.to_string()).unwrap(), u);
    }

    #[test]
    fn prescribed_residues_give_the_expected_cover(
        g in 0i64..=3,
        n in 1i64..=6,
        fibers in proptest::collection::vec((1i64..=7, -4i64..=4, -3i64..=3), 1..4),
    ) {
        let mut rs: Vec<i64> = fibers.iter().map(|f| f.2).collect();
        let total: i64 = rs.iter().sum();
        *rs.last_mut().unwrap() -= total;
        let base: Vec<(i64, i64)> = fibers
            .iter()
            .zip(&rs)
            .map(|(&(a, big_b, _), &r)| (a, n * big_b - a * r))
            .collect();
        prop_assume!(base.iter().all(|&(a, b)| a.gcd(&b) == 1));
        let sym = SeifertSymbol::new(g, base).unwrap();
        prop_assert_eq!(sym.to_string().parse::<SeifertSymbol>().unwrap(), sym.clone());
        let c = cyclic_cover(&sym, n, Some(&rs)).unwrap();
        let expected: Vec<(i64, i64)> = fibers.iter().map(|&(a, big_b, _)| (a, big_b)).collect();
        prop_assert_eq!(c.total.fibers(), expected.as_slice());
        prop_assert!(c.reconstructs());
    }
}
