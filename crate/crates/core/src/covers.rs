//! Power coverings and coverings of fibers of torus bundles.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::bundle::{sakuma_matrix, TorusBundle};
use crate::error::{Error, Result};
use crate::fox::{rank3_certificate, Rank3Certificate};
use crate::intlat::{are_conjugate, sublattices, Lattice, Mat2};

/// `M_{A^n} -> M_A`, pulled back along the `n`-fold cover of the circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerCover {
    pub base: TorusBundle,
    pub sheets: i64,
    pub total: TorusBundle,
}

pub fn power_cover(base: &TorusBundle, n: i64) -> Result<PowerCover> {
    if n < 1 {
        return Err(Error::InvalidIndex(n));
    }
    let total = TorusBundle::new(base.monodromy().pow(n)?)?;
    Ok(PowerCover {
        base: base.clone(),
        sheets: n,
        total,
    })
}

/// `f(-1), f(0), ..., f(n)` for the given product `ab`.
pub fn f_table(ab: &BigInt, n: i64) -> Result<Vec<BigInt>> {
    if n < -1 {
        return Err(Error::InvalidParameters(format!(
            "f is defined from -1, got {n}"
        )));
    }
    let mut v = vec![BigInt::zero(), BigInt::from(1), BigInt::from(1)];
    for i in 2..=n {
        let k = (i + 1) as usize;
        let next = if i % 2 == 1 {
            &v[k - 1] - &v[k - 2]
        } else {
            ab * &v[k - 1] - &v[k - 2]
        };
        v.push(next);
    }
    v.truncate((n + 2) as usize);
    Ok(v)
}

/// `f(n)`: `f(-1) = 0`, `f(0) = f(1) = 1`, `f(n) = f(n-1) - f(n-2)` for odd
/// `n` and `ab f(n-1) - f(n-2)` for even `n`.
pub fn f_seq(ab: &BigInt, n: i64) -> Result<BigInt> {
    Ok(f_table(ab, n)?.pop().expect("nonempty"))
}

/// `I + A + ... + A^n`.
pub fn geom_sum(a: &Mat2, n: i64) -> Result<Mat2> {
    if n < 0 {
        return Err(Error::InvalidParameters(format!("negative length {n}")));
    }
    let mut term = Mat2::identity();
    let mut acc = Mat2::identity();
    for _ in 0..n {
        term = &term * a;
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `A^n` for `A = [[-1, -a], [b, ab - 1]]` read off the `f` sequence.
pub fn sakuma_power_from_f(a: i64, b: i64, n: i64) -> Result<Mat2> {
    if n < 1 {
        return Err(Error::InvalidIndex(n));
    }
    let ab = BigInt::from(a * b);
    let f = f_table(&ab, 2 * n)?;
    let at = |k: i64| f[(k + 1) as usize].clone();
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    Ok(Mat2::new(
        -at(2 * n - 2),
        -a * at(2 * n - 1),
        b * at(2 * n - 1),
        at(2 * n),
    ))
}

/// `I + A + ... + A^n` for `A = [[-1, -a], [b, ab - 1]]` read off the `f`
/// sequence; `n >= 1`.
pub fn sakuma_geom_sum_from_f(a: i64, b: i64, n: i64) -> Result<Mat2> {
    if n < 1 {
        return Err(Error::InvalidIndex(n));
    }
    let ab = BigInt::from(a * b);
    let f = f_table(&ab, n)?;
    let at = |k: i64| f[(k + 1) as usize].clone();
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    let inner = if n % 2 == 1 {
        Mat2::new(-&ab * at(n - 2), -a * at(n - 1), b * at(n - 1), &ab * at(n))
    } else {
        Mat2::new(-at(n - 2), -a * at(n - 1), b * at(n - 1), at(n))
    };
    Ok(&at(n) * &inner)
}

/// Floating point closed form of `f` through the roots of
/// `1 + (2 - ab) t + t^2`.
#[derive(Clone, Copy, Debug)]
pub struct FClosedForm {
    pub ab: i64,
    pub phi: f64,
    pub phihat: f64,
}

impl FClosedForm {
    /// Requires `|ab| >= 6`, which keeps the roots real and distinct.
    pub fn new(ab: i64) -> Result<Self> {
        if ab.abs() < 6 {
            return Err(Error::InvalidParameters(format!(
                "needs |ab| >= 6, got {ab}"
            )));
        }
        let p = (2 - ab) as f64;
        let root = (p * p - 4.0).sqrt();
        Ok(FClosedForm {
            ab,
            phi: (-p + root) / 2.0,
            phihat: (-p - root) / 2.0,
        })
    }

    fn q(&self, k: i32) -> f64 {
        (self.phihat.powi(k) - self.phi.powi(k)) / (self.phihat - self.phi)
    }

    /// Approximation of `f(n)`, `n >= 0`.
    pub fn value(&self, n: u32) -> f64 {
        let k = (n / 2) as i32;
        if n % 2 == 1 {
            self.q(k + 1)
        } else {
            self.q(k) + self.q(k + 1)
        }
    }
}

/// Whether the closed form matches the exact `f(n)` within relative `tol`.
pub fn closed_form_check(ab: i64, n: u32, tol: f64) -> Result<bool> {
    let cf = FClosedForm::new(ab)?;
    let exact = f_seq(&BigInt::from(ab), i64::from(n))?
        .to_f64()
        .expect("finite");
    let approx = cf.value(n);
    Ok((approx - exact).abs() <= tol * exact.abs().max(1.0))
}

/// How the paper-style case split certifies genus three for `M_{A^n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerGenusCase {
    /// `n1` of `A - I` is neither 1 nor 2.
    NotDoubleBranched,
    /// Both Sakuma parameters vanish, so `A = -I`.
    BothParametersZero,
    /// One Sakuma parameter vanishes and `n` is even.
    ZeroParameterEvenPower,
    /// One Sakuma parameter `c` vanishes, `n` is odd: `A^n ~ [[-1, -nc], [0, -1]]`.
    ZeroParameterOddPower { alpha: i64 },
    /// Sakuma parameters with `|a|, |b| >= 2`.
    LargeParameters,
}

#[derive(Clone, Debug)]
pub struct PowerGenusCertificate {
    pub case: PowerGenusCase,
    /// Rank of `H_1(M_{A^n})`.
    pub homology_rank: usize,
    pub fox: Option<Rank3Certificate>,
    /// The lower bound three is established by the certificate for the case.
    pub holds: bool,
}

/// Certifies that the `n`-fold power cover of a genus-three bundle has rank
/// (hence genus) at least three.
pub fn certify_power_genus(base: &TorusBundle, n: i64) -> Result<PowerGenusCertificate> {
    if n < 2 {
        return Err(Error::InvalidIndex(n));
    }
    if base.genus() != 3 {
        return Err(Error::InvalidParameters("base bundle has genus two".into()));
    }
    let total = power_cover(base, n)?.total;
    let homology_rank = total.homology().rank();
    let rank_ok = homology_rank == 3;
    let homology_cert = |case| PowerGenusCertificate {
        case,
        homology_rank,
        fox: None,
        holds: rank_ok,
    };
    if !base.is_double_branched() {
        return Ok(homology_cert(PowerGenusCase::NotDoubleBranched));
    }
    let pairs = base.sakuma_pairs();
    let zero_pair = pairs
        .iter()
        .rev()
        .find(|(a, b)| a.is_zero() || b.is_zero())
        .cloned();
    let Some((a, b)) = zero_pair else {
        return Ok(homology_cert(PowerGenusCase::LargeParameters));
    };
    let c = if a.is_zero() { b } else { a };
    if c.is_zero() {
        return Ok(homology_cert(PowerGenusCase::BothParametersZero));
    }
    if n % 2 == 0 {
        return Ok(homology_cert(PowerGenusCase::ZeroParameterEvenPower));
    }
    let alpha = c
        .to_i64()
        .and_then(|c| c.checked_mul(n))
        .ok_or_else(|| Error::InvalidParameters("parameter too large".into()))?;
    let model = sakuma_matrix(&alpha.into(), &BigInt::zero());
    let matches_model = are_conjugate(total.monodromy(), &model)?;
    let fox = rank3_certificate(alpha)?;
    let holds = matches_model && fox.holds();
    Ok(PowerGenusCertificate {
        case: PowerGenusCase::ZeroParameterOddPower { alpha },
        homology_rank,
        fox: Some(fox),
        holds,
    })
}

/// A covering of fibers: the lattice `L` is invariant under the base
/// monodromy `A`, and the lifted monodromy is `A` written in a basis of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCover {
    pub base: TorusBundle,
    pub lattice: Lattice,
    pub lifted: TorusBundle,
}

impl FiberCover {
    pub fn sheets(&self) -> i64 {
        self.lattice.index()
    }

    pub fn lowers_genus(&self) -> bool {
        self.lifted.genus() < self.base.genus()
    }
}

impl fmt::Display for FiberCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} sheets, lattice {}, lifted {}",
            self.sheets(),
            self.lattice,
            self.lifted.monodromy()
        )
    }
}

fn basis_images(a: &Mat2, l: &Lattice) -> [[BigInt; 2]; 2] {
    l.basis().map(|v| a.apply(&[v[0].into(), v[1].into()]))
}

/// Whether `A L` is contained in `L`.
pub fn lattice_invariant(a: &Mat2, l: &Lattice) -> bool {
    basis_images(a, l).iter().all(|w| l.contains(w))
}

/// Whether the fiber covering given by `L` extends over the bundle.
pub fn extends(m: &TorusBundle, l: &Lattice) -> bool {
    lattice_invariant(m.monodromy(), l)
}

fn det2(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    a * d - b * c
}

/// Matrix of `A` restricted to `L`, in the basis `(p, q) = (d1, 0)`,
/// `(s, r) = (c, d2)`, via the determinant quotients over the index.
pub fn lift_matrix(a: &Mat2, l: &Lattice) -> Result<Mat2> {
    if !lattice_invariant(a, l) {
        return Err(Error::LatticeNotInvariant);
    }
    let [[p, q], [s, r]] = l.basis().map(|v| v.map(BigInt::from));
    let n = det2(&p, &s, &q, &r);
    // images of the basis vectors, as columns
    let [[u1, u2], [w1, w2]] = basis_images(a, l);
    let quotient = |x: BigInt| -> Result<BigInt> {
        if (&x % &n).is_zero() {
            Ok(x / &n)
        } else {
            Err(Error::LatticeNotInvariant)
        }
    };
    Ok(Mat2::new(
        quotient(det2(&u1, &s, &u2, &r))?,
        quotient(det2(&w1, &s, &w2, &r))?,
        quotient(det2(&p, &u1, &q, &u2))?,
        quotient(det2(&p, &w1, &q, &w2))?,
    ))
}

/// Monodromy of the covering bundle determined by `L`.
pub fn restrict_monodromy(m: &TorusBundle, l: &Lattice) -> Result<TorusBundle> {
    TorusBundle::new(lift_matrix(m.monodromy(), l)?)
}

pub fn fiber_cover(m: &TorusBundle, l: &Lattice) -> Result<FiberCover> {
    Ok(FiberCover {
        base: m.clone(),
        lattice: *l,
        lifted: restrict_monodromy(m, l)?,
    })
}

/// Every covering of fibers with at most `max_sheets` sheets, ordered by
/// index and then by lattice.
pub fn fiber_covers(m: &TorusBundle, max_sheets: i64) -> Result<Vec<FiberCover>> {
    if max_sheets < 1 {
        return Err(Error::InvalidIndex(max_sheets));
    }
    let mut out = Vec::new();
    for n in 1..=max_sheets {
        for l in sublattices(n)? {
            if extends(m, &l) {
                out.push(fiber_cover(m, &l)?);
            }
        }
    }
    Ok(out)
}

/// Coverings of fibers with at most `max_sheets` sheets whose total space
/// has smaller genus than the base.
pub fn find_genus_lowering(m: &TorusBundle, max_sheets: i64) -> Result<Vec<FiberCover>> {
    if max_sheets < 1 {
        return Err(Error::InvalidIndex(max_sheets));
    }
    if m.genus() == 2 {
        return Ok(Vec::new());
    }
    Ok(fiber_covers(m, max_sheets)?
        .into_iter()
        .filter(|c| c.lifted.genus() == 2)
        .collect())
}

/// The `k m^2`-sheeted covering of fibers of `[[-1, -k], [a, ak - 1]]` by the
/// lattice `<(n, 0), (-rho mod n, m)>` with `n = k m` and the least admissible
/// `rho` in `[0, n)` divisible by `m`.
pub fn construct_lowering_cover(a: i64, k: i64, m: i64) -> Result<FiberCover> {
    if a.abs() < 2 || k < 2 || m < 1 {
        return Err(Error::InvalidParameters(format!(
            "need |a| >= 2, k >= 2, m >= 1; got a={a}, k={k}, m={m}"
        )));
    }
    let base = TorusBundle::sakuma(k, a);
    let n = k * m;
    for rho in (0..n).step_by(m as usize) {
        let l = Lattice::from_basis([n, 0], [(-rho).rem_euclid(n), m])?;
        if extends(&base, &l) {
            return fiber_cover(&base, &l);
        }
    }
    Err(Error::NoAdmissibleCover(format!(
        "no invariant lattice for a={a}, k={k}, m={m}"
    )))
}
