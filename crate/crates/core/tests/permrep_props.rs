use num_integer::Integer;
use proptest::prelude::*;
use proptest::sample::subsequence;
use torus_bundles::permrep::{classify_rep, covering_lattice, omega_rep, Perm, TorusRep};

fn omega_params() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    let mut all = Vec::new();
    for m in 1..=8usize {
        for n in (m..=64 / m).filter(|n| n % m == 0) {
            for d in (1..=n / m).filter(|d| n % (d * m) == 0) {
                for i0 in (0..d).filter(|i0| d.gcd(i0) == 1) {
                    all.push((m, n, d, i0));
                }
            }
        }
    }
    proptest::sample::select(all)
}

fn relabelling(k: usize) -> impl Strategy<Value = Perm> {
    Just((0..k).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classify_recovers_relabelled_omega(
        (p, v) in omega_params().prop_flat_map(|p| (Just(p), relabelling(p.0 * p.1)))
    ) {
        let (m, n, d, i0) = p;
        let w = omega_rep(m, n, d, i0).unwrap();
        let r = w.conjugate_by(&v);
        let c = classify_rep(&r).unwrap();
        prop_assert_eq!((c.m, c.n, c.d, c.i0, c.rho), (m, n, d, i0, i0 * n / d));
        prop_assert!(!c.swapped);
        prop_assert_eq!(r.conjugate_by(&c.conjugator), w);
    }

    #[test]
    fn covering_lattice_is_the_stabilizer((m, n, d, i0) in omega_params()) {
        let w = omega_rep(m, n, d, i0).unwrap();
        let l = covering_lattice(m as i64, n as i64, (i0 * n / d) as i64).unwrap();
        prop_assert_eq!(l.index(), (m * n) as i64);
        for u in 0..2 * n as i64 {
            for v in 0..2 * m as i64 {
                let fixes = (&w.sigma.pow(u) * &w.tau.pow(v)).apply(0) == 0;
                prop_assert_eq!(fixes, l.contains_i64([u, v]), "({}, {})", u, v);
            }
        }
    }

    #[test]
    fn perm_group_laws(
        a in relabelling(9), b in relabelling(9), c in relabelling(9), k in -20i64..20
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert_eq!(&a.pow(k) * &a.pow(-k), Perm::identity(9));
        prop_assert_eq!(a.pow(a.order() as i64), Perm::identity(9));
        prop_assert_eq!(Perm::parse(&a.to_string(), 9).unwrap(), a.clone());
        for i in 0..9 {
            prop_assert_eq!((&a * &b).apply(i), a.apply(b.apply(i)));
        }
    }

    #[test]
    fn restriction_to_an_invariant_subset(
        a in relabelling(8), keep in subsequence((0..8usize).collect::<Vec<_>>(), 1..8)
    ) {
        let orbit_union: Vec<usize> = {
            let mut s: Vec<usize> = keep.iter().flat_map(|&p| {
                let mut orbit = vec![p];
                let mut q = a.apply(p);
                while q != p {
                    orbit.push(q);
                    q = a.apply(q);
                }
                orbit
            }).collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        let r = a.restrict(&orbit_union).unwrap();
        prop_assert_eq!(a.order() % r.order(), 0);
        for (i, &p) in orbit_union.iter().enumerate() {
            prop_assert_eq!(orbit_union[r.apply(i)], a.apply(p));
        }
    }
}

#[test]
fn non_abelian_pairs_are_rejected() {
    let s = Perm::parse("(1,2,3)", 3).unwrap();
    let t = Perm::parse("(1,2)", 3).unwrap();
    assert!(TorusRep::new(s, t).is_err());
}
