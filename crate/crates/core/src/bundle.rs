//! Orientable torus bundles over the circle and their invariants.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlat::{are_conjugate, snf, AbelianGroupDecomp, IntMatrix, Mat2};

/// Mapping torus of `A` in `SL(2, Z)`. `[[a, b], [c, d]]` acts on the fiber
/// group by `x -> x^a y^c`, `y -> x^b y^d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusBundle {
    monodromy: Mat2,
}

/// The pairs `{a, b}` for which the monodromy is conjugate to
/// `[[-1, -a], [b, ab - 1]]`, each stored as `(min, max)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SakumaPairs {
    pairs: BTreeSet<(BigInt, BigInt)>,
}

/// Which of `A`, `A^-1` matched the genus-two family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenusDetail {
    pub genus: u8,
    pub direct: bool,
    pub via_inverse: bool,
}

/// `[[-1, -a], [b, ab - 1]]`.
pub fn sakuma_matrix(a: &BigInt, b: &BigInt) -> Mat2 {
    Mat2::new(-BigInt::one(), -a, b.clone(), a * b - 1)
}

impl TorusBundle {
    pub fn new(monodromy: Mat2) -> Result<Self> {
        let det = monodromy.det();
        if !det.is_one() {
            return Err(Error::NotOrientable(det.to_string()));
        }
        Ok(TorusBundle { monodromy })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        TorusBundle::new(Mat2::from_i64(a, b, c, d))
    }

    /// `M_{a,b}`, the bundle with monodromy `[[-1, -a], [b, ab - 1]]`.
    pub fn sakuma(a: i64, b: i64) -> Self {
        TorusBundle {
            monodromy: sakuma_matrix(&a.into(), &b.into()),
        }
    }

    pub fn monodromy(&self) -> &Mat2 {
        &self.monodromy
    }

    /// Same manifold with the opposite orientation of the base circle.
    pub fn inverse(&self) -> TorusBundle {
        TorusBundle {
            monodromy: self.monodromy.inverse().expect("det 1"),
        }
    }

    fn snf_of_a_minus_i(&self) -> Vec<BigInt> {
        let m = &self.monodromy - &Mat2::identity();
        snf(&IntMatrix::from(&m)).diagonal
    }

    /// `H_1 = Z + coker(A - I)`.
    pub fn homology(&self) -> AbelianGroupDecomp {
        let m = &self.monodromy - &Mat2::identity();
        AbelianGroupDecomp::cokernel(&IntMatrix::from(&m)).plus_free(1)
    }

    /// First elementary divisor `n1` of `A - I`.
    pub fn first_divisor(&self) -> BigInt {
        self.snf_of_a_minus_i()[0].clone()
    }

    /// Whether the bundle double branched covers the 3-sphere (`n1` is 1 or 2).
    pub fn is_double_branched(&self) -> bool {
        let n1 = self.first_divisor();
        n1.is_one() || n1 == BigInt::from(2)
    }

    pub fn sakuma_pairs(&self) -> SakumaPairs {
        let a = &self.monodromy;
        let n: BigInt = a.trace() + 2;
        let mut candidates = Vec::new();
        if n.is_zero() {
            let k = (a + &Mat2::identity()).content();
            candidates.push((k.clone(), BigInt::zero()));
            candidates.push((-&k, BigInt::zero()));
            candidates.push((BigInt::zero(), k.clone()));
            candidates.push((BigInt::zero(), -k));
        } else {
            for d in positive_divisors(&n.abs()) {
                for a_val in [d.clone(), -d] {
                    let b_val = &n / &a_val;
                    candidates.push((a_val, b_val));
                }
            }
        }
        let mut pairs = BTreeSet::new();
        for (x, y) in candidates {
            if are_conjugate(a, &sakuma_matrix(&x, &y)).expect("det 1") {
                pairs.insert(if x <= y { (x, y) } else { (y, x) });
            }
        }
        SakumaPairs { pairs }
    }

    /// Heegaard genus with the record of which test matched.
    pub fn genus_detail(&self) -> GenusDetail {
        let b: BigInt = self.monodromy.trace() + 2;
        let family = sakuma_matrix(&BigInt::one(), &b);
        let direct = are_conjugate(&self.monodromy, &family).expect("det 1");
        let via_inverse = are_conjugate(self.inverse().monodromy(), &family).expect("det 1");
        GenusDetail {
            genus: if direct || via_inverse { 2 } else { 3 },
            direct,
            via_inverse,
        }
    }

    /// Heegaard genus, 2 or 3.
    pub fn genus(&self) -> u8 {
        self.genus_detail().genus
    }

    /// Whether the two bundles are homeomorphic: `A1 ~ A2` or `A1 ~ A2^-1`.
    pub fn homeomorphic(&self, other: &TorusBundle) -> bool {
        are_conjugate(&self.monodromy, &other.monodromy).expect("det 1")
            || are_conjugate(&self.monodromy, other.inverse().monodromy()).expect("det 1")
    }
}

impl fmt::Display for TorusBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_A, A = {}", self.monodromy)
    }
}

/// Positive divisors of `n > 0` by trial division, ascending.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            let q = n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl SakumaPairs {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// Membership of the unordered pair `{a, b}`.
    pub fn contains(&self, a: i64, b: i64) -> bool {
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        self.pairs.contains(&(x.into(), y.into()))
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &(BigInt, BigInt)> {
        self.pairs.iter()
    }
}

impl fmt::Display for SakumaPairs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("{{{a},{b}}}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(a: i64, b: i64, c: i64, d: i64) -> TorusBundle {
        TorusBundle::from_i64(a, b, c, d).unwrap()
    }

    #[test]
    fn rejects_orientation_reversing() {
        assert!(matches!(
            TorusBundle::from_i64(0, 1, 1, 0),
            Err(Error::NotOrientable(_))
        ));
    }

    #[test]
    fn homology_examples() {
        assert_eq!(bundle(1, 0, 0, 1).homology().free_rank, 3);
        for m in [bundle(-1, -1, 2, 1), bundle(0, -1, 1, 0)] {
            let h = m.homology();
            assert_eq!(h.free_rank, 1);
            assert_eq!(h.torsion, vec![BigInt::from(2)]);
        }
    }

    #[test]
    fn double_branched_examples() {
        assert!(bundle(-1, -1, 2, 1).is_double_branched());
        assert!(!bundle(1, 0, 0, 1).is_double_branched());
        let m = bundle(1, 3, 3, 10);
        assert_eq!(m.first_divisor(), BigInt::from(3));
        assert!(!m.is_double_branched());
    }

    #[test]
    fn sakuma_pair_examples() {
        assert!(bundle(-1, -1, 2, 1).sakuma_pairs().contains(1, 2));
        assert!(bundle(1, 3, 3, 10).sakuma_pairs().is_empty());
        let p = TorusBundle::sakuma(1, 6).sakuma_pairs();
        assert!(p.contains(1, 6));
        assert!(p.contains(2, 3));
    }

    #[test]
    fn trace_minus_two_families() {
        let p = bundle(-1, 0, 0, -1).sakuma_pairs();
        assert_eq!(p.len(), 1);
        assert!(p.contains(0, 0));
        let p = bundle(-1, -3, 0, -1).sakuma_pairs();
        assert!(p.contains(0, 3) && p.contains(0, -3));
        assert!(!p.contains(0, 1));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(bundle(-1, -1, 2, 1).genus(), 2);
        assert_eq!(bundle(-1, -2, 2, 3).genus(), 3);
        assert_eq!(bundle(1, 0, 0, 1).genus(), 3);
    }

    #[test]
    fn homeomorphism_examples() {
        let m = TorusBundle::sakuma(2, 5);
        assert!(m.homeomorphic(&m));
        assert!(TorusBundle::sakuma(1, 6).homeomorphic(&TorusBundle::sakuma(2, 3)));
        assert!(!TorusBundle::sakuma(1, 2).homeomorphic(&TorusBundle::sakuma(2, 2)));
    }

    #[test]
    fn divisors() {
        let got: Vec<i64> = positive_divisors(&BigInt::from(12))
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(got, vec![1, 2, 3, 4, 6, 12]);
    }
}
