use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Finite-index sublattice of `Z^2` spanned by `(d1, 0)` and `(c, d2)`,
/// with `d1, d2 >= 1` and `0 <= c < d1`.
///
/// Vectors are exponent pairs: `(u, v)` stands for `x^u y^v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    d1: i64,
    d2: i64,
    c: i64,
}

impl Lattice {
    /// Builds a lattice from canonical data, rejecting non-canonical triples.
    pub fn new(d1: i64, d2: i64, c: i64) -> Result<Self> {
        if d1 < 1 || d2 < 1 || c < 0 || c >= d1 {
            return Err(Error::InvalidParameters(format!(
                "non-canonical lattice data d1={d1}, d2={d2}, c={c}"
            )));
        }
        Ok(Lattice { d1, d2, c })
    }

    pub fn full() -> Self {
        Lattice { d1: 1, d2: 1, c: 0 }
    }

    /// Canonical form of the lattice spanned by two integer vectors.
    pub fn from_basis(v1: [i64; 2], v2: [i64; 2]) -> Result<Self> {
        let det = i128::from(v1[0]) * i128::from(v2[1]) - i128::from(v1[1]) * i128::from(v2[0]);
        if det == 0 {
            return Err(Error::DegenerateBasis);
        }
        // combination s*v1 + t*v2 realising gcd of the second coordinates
        let eg = v1[1].extended_gcd(&v2[1]);
        let d2 = eg.gcd;
        let (s, t) = if d2 < 0 { (-eg.x, -eg.y) } else { (eg.x, eg.y) };
        let d2 = d2.abs();
        let x = i128::from(s) * i128::from(v1[0]) + i128::from(t) * i128::from(v2[0]);
        let d1 = det.abs() / i128::from(d2);
        let c = x.rem_euclid(d1);
        let d1 = i64::try_from(d1).map_err(|_| Error::DegenerateBasis)?;
        let c = i64::try_from(c).map_err(|_| Error::DegenerateBasis)?;
        Lattice::new(d1, d2, c)
    }

    pub fn d1(&self) -> i64 {
        self.d1
    }

    pub fn d2(&self) -> i64 {
        self.d2
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn index(&self) -> i64 {
        self.d1 * self.d2
    }

    /// The canonical basis `[(d1, 0), (c, d2)]`.
    pub fn basis(&self) -> [[i64; 2]; 2] {
        [[self.d1, 0], [self.c, self.d2]]
    }

    pub fn contains(&self, v: &[BigInt; 2]) -> bool {
        let d2 = BigInt::from(self.d2);
        if !v[1].is_multiple_of(&d2) {
            return false;
        }
        let k = &v[1] / &d2;
        let rest = &v[0] - k * self.c;
        rest.is_multiple_of(&BigInt::from(self.d1))
    }

    pub fn contains_i64(&self, v: [i64; 2]) -> bool {
        self.contains(&[v[0].into(), v[1].into()])
    }

    /// Sort key `(d1, c, d2)`.
    pub fn sort_key(&self) -> (i64, i64, i64) {
        (self.d1, self.c, self.d2)
    }
}

impl PartialOrd for Lattice {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Lattice {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<({},0), ({},{})>", self.d1, self.c, self.d2)
    }
}

/// Every sublattice of `Z^2` of index `n`, sorted by `(d1, c, d2)`.
pub fn sublattices(n: i64) -> Result<Vec<Lattice>> {
    if n < 1 {
        return Err(Error::InvalidIndex(n));
    }
    let mut out = Vec::new();
    for d1 in (1..=n).filter(|d| n % d == 0) {
        for c in 0..d1 {
            out.push(Lattice { d1, d2: n / d1, c });
        }
    }
    out.sort();
    Ok(out)
}
