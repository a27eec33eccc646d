//! Conjugacy of unimodular 2x2 integer matrices in `GL(2, Z)`.
//!
//! Every unimodular matrix is brought to a normal form together with a
//! conjugator `g` such that `g A g^-1` is the normal form. Two matrices are
//! conjugate iff their normal forms agree, and the conjugator between them
//! is `g_b^-1 g_a`.
//!
//! Hyperbolic matrices are classified by the continued fraction of their
//! attracting fixed point `z -> (az + b) / (cz + d)`: the minimal period of
//! that expansion, up to rotation, is a complete `GL(2, Z)` invariant of the
//! fixed point, and a hyperbolic element is fixed by trace, determinant and
//! attracting fixed point. The period of the expansion is the cyclic word
//! in the two elementary generators read off the reduced matrix.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Mat2;
use crate::error::{Error, Result};

/// Complete conjugacy invariant of a unimodular matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ConjugacyClass {
    /// `sign * I`.
    Scalar(i8),
    /// `sign * [[1, k], [0, 1]]`, `k >= 1`.
    Parabolic { sign: i8, k: BigInt },
    /// Finite order, determinant 1, trace in {-1, 0, 1}.
    Elliptic { trace: i8 },
    /// Determinant -1, trace 0: `[[1, m], [0, -1]]` with `m` in {0, 1}.
    Reflection { m: u8 },
    /// `|trace| > 2` (det 1) or trace != 0 (det -1).
    Hyperbolic {
        trace: BigInt,
        det: i8,
        period: Vec<BigInt>,
    },
}

/// A normal form representative together with the conjugator reaching it.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub class: ConjugacyClass,
    /// `g` with `g A g^-1` equal to the class representative.
    pub conjugator: Mat2,
}

fn elem_r(k: &BigInt) -> Mat2 {
    Mat2::new(BigInt::one(), k.clone(), BigInt::zero(), BigInt::one())
}

fn swap_s() -> Mat2 {
    Mat2::from_i64(0, 1, 1, 0)
}

fn flip_j() -> Mat2 {
    Mat2::from_i64(1, 0, 0, -1)
}

/// Conjugate `cur` by `h` and accumulate `h` into `g`.
fn step(cur: &mut Mat2, g: &mut Mat2, h: &Mat2) {
    *cur = cur
        .conjugated_by(h)
        .expect("elementary conjugator is unimodular");
    *g = h * &*g;
}

/// Primitive vector spanning the kernel of a rank-one matrix.
fn primitive_kernel(n: &Mat2) -> [BigInt; 2] {
    let (x, y) = if !n.e11.is_zero() || !n.e12.is_zero() {
        (-&n.e12, n.e11.clone())
    } else {
        (-&n.e22, n.e21.clone())
    };
    let g = x.gcd(&y);
    [x / &g, y / g]
}

/// Unimodular `P` whose first column is the primitive vector `v`.
fn complete_basis(v: &[BigInt; 2]) -> Mat2 {
    let eg = v[0].extended_gcd(&v[1]);
    let (x, y) = if eg.gcd.is_negative() {
        (-eg.x, -eg.y)
    } else {
        (eg.x, eg.y)
    };
    // det [[p, -y], [q, x]] = p x + q y = 1
    Mat2::new(v[0].clone(), -y, v[1].clone(), x)
}

/// Normal form of a unimodular matrix.
pub fn normal_form(a: &Mat2) -> Result<NormalForm> {
    let det = a.det();
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    let tr = a.trace();
    let two = BigInt::from(2);
    if det.is_one() {
        if a == &Mat2::identity() {
            return Ok(NormalForm {
                class: ConjugacyClass::Scalar(1),
                conjugator: Mat2::identity(),
            });
        }
        if a == &-Mat2::identity() {
            return Ok(NormalForm {
                class: ConjugacyClass::Scalar(-1),
                conjugator: Mat2::identity(),
            });
        }
        if tr.abs() == two {
            return Ok(parabolic(a, if tr.is_positive() { 1 } else { -1 }));
        }
        if tr.abs() < two {
            return Ok(elliptic(a));
        }
        return Ok(hyperbolic(a, 1));
    }
    if tr.is_zero() {
        return Ok(reflection(a));
    }
    Ok(hyperbolic(a, -1))
}

fn parabolic(a: &Mat2, sign: i8) -> NormalForm {
    let unsigned = if sign < 0 { -a.clone() } else { a.clone() };
    let nil = &unsigned - &Mat2::identity();
    let p = complete_basis(&primitive_kernel(&nil));
    let mut g = p.inverse().expect("unimodular basis");
    let mut cur = unsigned.conjugated_by(&g).expect("unimodular");
    if cur.e12.is_negative() {
        step(&mut cur, &mut g, &flip_j());
    }
    debug_assert!(cur.e11.is_one() && cur.e21.is_zero() && cur.e22.is_one());
    NormalForm {
        class: ConjugacyClass::Parabolic {
            sign,
            k: cur.e12.clone(),
        },
        conjugator: g,
    }
}

fn reflection(a: &Mat2) -> NormalForm {
    let nil = a - &Mat2::identity();
    let p = complete_basis(&primitive_kernel(&nil));
    let mut g = p.inverse().expect("unimodular basis");
    let mut cur = a.conjugated_by(&g).expect("unimodular");
    // cur = [[1, m], [0, -1]]; conjugating by R^j shifts m by -2j
    let j = cur.e12.div_floor(&BigInt::from(2));
    step(&mut cur, &mut g, &elem_r(&j));
    let m = cur.e12.to_u8().expect("reduced mod 2");
    NormalForm {
        class: ConjugacyClass::Reflection { m },
        conjugator: g,
    }
}

/// Gauss reduction of the invariant definite form `(c, d - a, -b)`.
fn elliptic(a: &Mat2) -> NormalForm {
    let mut cur = a.clone();
    let mut g = Mat2::identity();
    loop {
        // translate: conjugation by R^k changes d - a by -2kc
        let c = cur.e21.clone();
        let b_mid = &cur.e22 - &cur.e11;
        let two_c = &c * 2;
        let k = nearest_quotient(&b_mid, &two_c);
        if !k.is_zero() {
            step(&mut cur, &mut g, &elem_r(&k));
        }
        if cur.e21.abs() > cur.e12.abs() {
            step(&mut cur, &mut g, &swap_s());
        } else {
            break;
        }
    }
    if cur.e21.is_negative() {
        step(&mut cur, &mut g, &flip_j());
    }
    if (&cur.e22 - &cur.e11).is_negative() {
        step(&mut cur, &mut g, &swap_s());
        step(&mut cur, &mut g, &flip_j());
    }
    let trace = cur.trace().to_i8().expect("elliptic trace");
    debug_assert!(cur.e21.is_one() && (-&cur.e12).is_one());
    NormalForm {
        class: ConjugacyClass::Elliptic { trace },
        conjugator: g,
    }
}

/// Integer nearest to `num / den` (den != 0), ties toward negative infinity.
fn nearest_quotient(num: &BigInt, den: &BigInt) -> BigInt {
    let (n, d) = if den.is_negative() {
        (-num, -den)
    } else {
        (num.clone(), den.clone())
    };
    let two = BigInt::from(2);
    Integer::div_floor(&(&n * &two + &d), &(&d * &two))
}

/// Quadratic irrational `(p + sqrt(disc)) / q` with `q | disc - p^2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Surd {
    p: BigInt,
    q: BigInt,
}

fn cf_step(s: &Surd, disc: &BigInt, root: &BigInt) -> (BigInt, Surd) {
    let a = if s.q.is_positive() {
        Integer::div_floor(&(&s.p + root), &s.q)
    } else {
        Integer::div_floor(&(-&s.p - root - BigInt::one()), &(-&s.q))
    };
    let p = &a * &s.q - &s.p;
    let q = (disc - &p * &p) / &s.q;
    (a, Surd { p, q })
}

fn cf_matrix(a: &BigInt) -> Mat2 {
    Mat2::new(a.clone(), BigInt::one(), BigInt::one(), BigInt::zero())
}

/// Continued fraction of the attracting fixed point: (pre-period, period).
///
/// Only meaningful for hyperbolic matrices.
pub fn attracting_fixed_point_cf(a: &Mat2) -> (Vec<BigInt>, Vec<BigInt>) {
    let tr = a.trace();
    let disc: BigInt = &tr * &tr - a.det() * 4;
    let sign = BigInt::from(if tr.is_negative() { -1 } else { 1 });
    let amd = &a.e11 - &a.e22;
    let two_c: BigInt = &a.e21 * 2;
    let mut state = Surd {
        p: amd * &sign,
        q: two_c * &sign,
    };
    let root = disc.sqrt();
    let mut seen: HashMap<Surd, usize> = HashMap::new();
    let mut quotients = Vec::new();
    loop {
        if let Some(&start) = seen.get(&state) {
            let period = quotients.split_off(start);
            return (quotients, period);
        }
        seen.insert(state.clone(), quotients.len());
        let (q, next) = cf_step(&state, &disc, &root);
        quotients.push(q);
        state = next;
    }
}

fn hyperbolic(a: &Mat2, det: i8) -> NormalForm {
    debug_assert!(!a.e21.is_zero());
    let (pre, period) = attracting_fixed_point_cf(a);
    let n = period.len();
    let best = (0..n)
        .min_by(|&i, &j| {
            let ri = period[i..].iter().chain(&period[..i]);
            let rj = period[j..].iter().chain(&period[..j]);
            ri.cmp(rj)
        })
        .unwrap_or(0);
    let mut t = Mat2::identity();
    for q in pre.iter().chain(&period[..best]) {
        t = &t * &cf_matrix(q);
    }
    let canonical: Vec<BigInt> = period[best..]
        .iter()
        .chain(&period[..best])
        .cloned()
        .collect();
    NormalForm {
        class: ConjugacyClass::Hyperbolic {
            trace: a.trace(),
            det,
            period: canonical,
        },
        conjugator: t.inverse().expect("product of unimodular matrices"),
    }
}

/// A conjugator `g` with `g A g^-1 = B` in `GL(2, Z)`, or `None` if the
/// matrices are not conjugate.
pub fn conjugate_gl2z(a: &Mat2, b: &Mat2) -> Result<Option<Mat2>> {
    let na = normal_form(a)?;
    let nb = normal_form(b)?;
    if na.class != nb.class {
        return Ok(None);
    }
    let g = &nb.conjugator.inverse()? * &na.conjugator;
    debug_assert_eq!(&a.conjugated_by(&g)?, b);
    Ok(Some(g))
}

/// Whether two unimodular matrices are `GL(2, Z)`-conjugate.
pub fn are_conjugate(a: &Mat2, b: &Mat2) -> Result<bool> {
    Ok(normal_form(a)?.class == normal_form(b)?.class)
}

/// Exhaustive search over unimodular `g` with all entries in
/// `[-bound, bound]` for `g A = B g`. Sound, complete only inside the box.
///
/// Returns `None` when entries do not fit machine integers.
pub fn conjugate_bounded_oracle(a: &Mat2, b: &Mat2, bound: i64) -> Option<Mat2> {
    let to = |m: &Mat2| -> Option<[i128; 4]> {
        Some([
            m.e11.to_i128()?,
            m.e12.to_i128()?,
            m.e21.to_i128()?,
            m.e22.to_i128()?,
        ])
    };
    let [a11, a12, a21, a22] = to(a)?;
    let [b11, b12, b21, b22] = to(b)?;
    if a == b {
        return Some(Mat2::identity());
    }
    let bound = i128::from(bound);
    let row2_ok = |p: i128, q: i128, r: i128, s: i128| {
        let det = p * s - q * r;
        (det == 1 || det == -1)
            && r * a11 + s * a21 == b21 * p + b22 * r
            && r * a12 + s * a22 == b21 * q + b22 * s
    };
    let found =
        |p: i128, q: i128, r: i128, s: i128| Mat2::new(p.into(), q.into(), r.into(), s.into());
    for p in -bound..=bound {
        for q in -bound..=bound {
            // first row of g A = B g
            let lhs0 = p * a11 + q * a21 - b11 * p;
            let lhs1 = p * a12 + q * a22 - b11 * q;
            if b12 != 0 {
                if lhs0 % b12 != 0 || lhs1 % b12 != 0 {
                    continue;
                }
                let (r, s) = (lhs0 / b12, lhs1 / b12);
                if r.abs() <= bound && s.abs() <= bound && row2_ok(p, q, r, s) {
                    return Some(found(p, q, r, s));
                }
            } else if lhs0 == 0 && lhs1 == 0 {
                for r in -bound..=bound {
                    for s in -bound..=bound {
                        if row2_ok(p, q, r, s) {
                            return Some(found(p, q, r, s));
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::from_i64(a, b, c, d)
    }

    fn assert_conj(a: &Mat2, b: &Mat2) {
        let g = conjugate_gl2z(a, b).unwrap().expect("should be conjugate");
        assert!(g.is_unimodular());
        assert_eq!(&a.conjugated_by(&g).unwrap(), b);
    }

    #[test]
    fn self_conjugacy_is_identity() {
        for a in [m(2, 1, 1, 1), m(0, -1, 1, 0), m(1, 3, 0, 1), m(1, 0, 0, 1)] {
            let g = conjugate_gl2z(&a, &a).unwrap().unwrap();
            assert_eq!(a.conjugated_by(&g).unwrap(), a);
        }
        assert_eq!(
            conjugate_gl2z(&m(1, 0, 0, 1), &m(1, 0, 0, 1)).unwrap(),
            Some(Mat2::identity())
        );
    }

    #[test]
    fn parabolic_sign_is_absorbed() {
        let g = conjugate_gl2z(&m(1, 1, 0, 1), &m(1, -1, 0, 1))
            .unwrap()
            .unwrap();
        assert_eq!(m(1, 1, 0, 1).conjugated_by(&g).unwrap(), m(1, -1, 0, 1));
    }

    #[test]
    fn parabolic_content_separates() {
        assert_eq!(
            conjugate_gl2z(&m(1, 1, 0, 1), &m(1, 2, 0, 1)).unwrap(),
            None
        );
        assert_eq!(
            conjugate_bounded_oracle(&m(1, 1, 0, 1), &m(1, 2, 0, 1), 20),
            None
        );
    }

    #[test]
    fn elliptic_classes() {
        assert_conj(&m(0, -1, 1, 0), &m(0, 1, -1, 0));
        assert_conj(&m(0, -1, 1, 1), &m(1, -1, 1, 0));
        assert_conj(&m(2, -5, 1, -2), &m(0, -1, 1, 0));
        assert_conj(&m(-1, -1, 1, 0), &m(-3, -7, 1, 2));
        assert_eq!(
            conjugate_gl2z(&m(0, -1, 1, 1), &m(-1, -1, 1, 0)).unwrap(),
            None
        );
    }

    #[test]
    fn reflections() {
        assert_conj(&m(1, 0, 0, -1), &m(1, 2, 0, -1));
        assert_conj(&m(0, 1, 1, 0), &m(1, 1, 0, -1));
        assert_eq!(
            conjugate_gl2z(&m(0, 1, 1, 0), &m(1, 0, 0, -1)).unwrap(),
            None
        );
    }

    #[test]
    fn hyperbolic_pairs() {
        assert_conj(&m(2, 1, 1, 1), &m(1, 1, 1, 2));
        assert_conj(&m(-1, -1, 6, 5), &m(-1, -2, 3, 5));
        assert_conj(&m(-2, -1, -1, -1), &m(-1, -1, -1, -2));
        assert_eq!(
            conjugate_gl2z(&m(2, 1, 1, 1), &m(3, 1, 2, 1)).unwrap(),
            None
        );
        // det -1
        assert_conj(&m(1, 1, 1, 0), &m(0, 1, 1, 1));
    }

    #[test]
    fn trace_mismatch_is_not_conjugate() {
        assert_eq!(
            conjugate_gl2z(&m(1, 1, 0, 1), &m(2, 1, 1, 1)).unwrap(),
            None
        );
        assert_eq!(
            conjugate_bounded_oracle(&m(1, 1, 0, 1), &m(2, 1, 1, 1), 50),
            None
        );
    }

    #[test]
    fn oracle_agrees_on_sakuma_exception() {
        let a = m(-1, -1, 6, 5);
        let b = m(-1, -2, 3, 5);
        let oracle = conjugate_bounded_oracle(&a, &b, 20);
        let exact = conjugate_gl2z(&a, &b).unwrap();
        assert!(oracle.is_some());
        assert!(exact.is_some());
        let g = oracle.unwrap();
        assert_eq!(a.conjugated_by(&g).unwrap(), b);
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(
            conjugate_gl2z(&m(2, 0, 0, 1), &m(1, 0, 0, 1)),
            Err(Error::NotUnimodular(_))
        ));
    }
}
