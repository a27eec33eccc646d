use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A 2x2 matrix with arbitrary-precision integer entries, row major.
///
/// Acting on column vectors of exponents, the first column is the image of
/// the first torus generator: `[[a, b], [c, d]]` sends `x` to `x^a y^c` and
/// `y` to `x^b y^d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    pub e11: BigInt,
    pub e12: BigInt,
    pub e21: BigInt,
    pub e22: BigInt,
}

impl Mat2 {
    pub fn new(e11: BigInt, e12: BigInt, e21: BigInt, e22: BigInt) -> Self {
        Mat2 { e11, e12, e21, e22 }
    }

    pub fn from_i64(e11: i64, e12: i64, e21: i64, e22: i64) -> Self {
        Mat2::new(e11.into(), e12.into(), e21.into(), e22.into())
    }

    pub fn identity() -> Self {
        Mat2::from_i64(1, 0, 0, 1)
    }

    pub fn zero() -> Self {
        Mat2::from_i64(0, 0, 0, 0)
    }

    pub fn scalar(k: BigInt) -> Self {
        Mat2::new(k.clone(), BigInt::zero(), BigInt::zero(), k)
    }

    pub fn det(&self) -> BigInt {
        &self.e11 * &self.e22 - &self.e12 * &self.e21
    }

    pub fn trace(&self) -> BigInt {
        &self.e11 + &self.e22
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    /// Greatest common divisor of the four entries (0 for the zero matrix).
    pub fn content(&self) -> BigInt {
        self.e11.gcd(&self.e12).gcd(&self.e21).gcd(&self.e22)
    }

    pub fn adjugate(&self) -> Mat2 {
        Mat2::new(self.e22.clone(), -&self.e12, -&self.e21, self.e11.clone())
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        let adj = self.adjugate();
        Ok(if det.is_negative() { -adj } else { adj })
    }

    /// `self^k`; negative `k` requires a unimodular matrix.
    pub fn pow(&self, k: i64) -> Result<Mat2> {
        let base = if k < 0 {
            self.inverse().map_err(|_| Error::NegativePowerOfSingular)?
        } else {
            self.clone()
        };
        let mut exp = k.unsigned_abs();
        let mut acc = Mat2::identity();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Image of the exponent vector `(u, v)` (column vector).
    pub fn apply(&self, v: &[BigInt; 2]) -> [BigInt; 2] {
        [
            &self.e11 * &v[0] + &self.e12 * &v[1],
            &self.e21 * &v[0] + &self.e22 * &v[1],
        ]
    }

    /// Conjugate `g * self * g^-1`.
    pub fn conjugated_by(&self, g: &Mat2) -> Result<Mat2> {
        Ok(&(g * self) * &g.inverse()?)
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    /// Canonical text form `a,b;c,d`.
    pub fn to_compact(&self) -> String {
        format!("{},{};{},{}", self.e11, self.e12, self.e21, self.e22)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e11, self.e12, self.e21, self.e22
        )
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.e11 * &o.e11 + &self.e12 * &o.e21,
            &self.e11 * &o.e12 + &self.e12 * &o.e22,
            &self.e21 * &o.e11 + &self.e22 * &o.e21,
            &self.e21 * &o.e12 + &self.e22 * &o.e22,
        )
    }
}

impl Add for &Mat2 {
    type Output = Mat2;
    fn add(self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.e11 + &o.e11,
            &self.e12 + &o.e12,
            &self.e21 + &o.e21,
            &self.e22 + &o.e22,
        )
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;
    fn sub(self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.e11 - &o.e11,
            &self.e12 - &o.e12,
            &self.e21 - &o.e21,
            &self.e22 - &o.e22,
        )
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(-self.e11, -self.e12, -self.e21, -self.e22)
    }
}

impl Mul<&Mat2> for &BigInt {
    type Output = Mat2;
    fn mul(self, m: &Mat2) -> Mat2 {
        Mat2::new(self * &m.e11, self * &m.e12, self * &m.e21, self * &m.e22)
    }
}

/// `A^k` for `k >= 0`, or `k < 0` when `A` is unimodular.
pub fn mat_pow(a: &Mat2, k: i64) -> Result<Mat2> {
    a.pow(k)
}
