//! Seifert fibered spaces with orientable orbit surface: cyclic coverings
//! along the fibers and the one-exceptional-fiber genus formula.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// `(Oo, g; b1/a1, ..., bt/at)` with `g >= 0`, `ai >= 1`, `gcd(ai, bi) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeifertSymbol {
    g: i64,
    fibers: Vec<(i64, i64)>,
}

impl SeifertSymbol {
    /// Fibers are given as `(alpha, beta)` pairs.
    pub fn new(g: i64, fibers: Vec<(i64, i64)>) -> Result<Self> {
        if g < 0 {
            return Err(Error::InvalidParameters(format!(
                "orbit surface genus must be non-negative, got {g}"
            )));
        }
        for &(a, b) in &fibers {
            if a < 1 || a.gcd(&b) != 1 {
                return Err(Error::InvalidParameters(format!(
                    "fiber {b}/{a} needs alpha >= 1 and gcd(alpha, beta) = 1"
                )));
            }
        }
        Ok(SeifertSymbol { g, fibers })
    }

    pub fn genus_of_base(&self) -> i64 {
        self.g
    }

    pub fn fibers(&self) -> &[(i64, i64)] {
        &self.fibers
    }
}

impl fmt::Display for SeifertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Oo,{}", self.g)?;
        if !self.fibers.is_empty() {
            let parts: Vec<String> = self
                .fibers
                .iter()
                .map(|(a, b)| format!("{b}/{a}"))
                .collect();
            write!(f, ";{}", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SeifertSymbol {
    type Err = Error;

    /// `Oo,g;b1/a1,b2/a2,...`; the fiber list may be empty.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("malformed Seifert symbol {s:?}"));
        let rest = compact.strip_prefix("Oo,").ok_or_else(bad)?;
        let (g_str, fib_str) = rest.split_once(';').unwrap_or((rest, ""));
        let g: i64 = g_str.parse().map_err(|_| bad())?;
        let mut fibers = Vec::new();
        for tok in fib_str.split(',').filter(|t| !t.is_empty()) {
            let (b, a) = tok.split_once('/').ok_or_else(bad)?;
            fibers.push((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
        }
        SeifertSymbol::new(g, fibers)
    }
}

/// An `n`-fold cyclic covering along the fibers, with the residues `r_i`
/// that determine it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertCover {
    pub base: SeifertSymbol,
    pub sheets: i64,
    pub residues: Vec<i64>,
    pub total: SeifertSymbol,
}

impl SeifertCover {
    /// `n B_i - alpha_i r_i = beta_i` for every fiber.
    pub fn reconstructs(&self) -> bool {
        self.base
            .fibers
            .iter()
            .zip(&self.total.fibers)
            .zip(&self.residues)
            .all(|(((a, b), (a2, big_b)), r)| a == a2 && self.sheets * big_b - a * r == *b)
    }
}

/// The `n`-fold cyclic cover with `B_i = (alpha_i r_i + beta_i) / n`.
///
/// Without explicit residues, each `r_i` is the least non-negative solution
/// of `alpha_i r_i = -beta_i (mod n)` and the last one absorbs the multiple
/// of `n` needed to make the residues sum to zero.
pub fn cyclic_cover(sym: &SeifertSymbol, n: i64, r: Option<&[i64]>) -> Result<SeifertCover> {
    if n < 1 {
        return Err(Error::InvalidIndex(n));
    }
    let residues = match r {
        Some(r) => {
            if r.len() != sym.fibers.len() {
                return Err(Error::NoAdmissibleCover(format!(
                    "{} residues for {} fibers",
                    r.len(),
                    sym.fibers.len()
                )));
            }
            r.to_vec()
        }
        None => search_residues(sym, n)?,
    };
    if residues.iter().sum::<i64>() != 0 {
        return Err(Error::NoAdmissibleCover("residues must sum to zero".into()));
    }
    let mut fibers = Vec::with_capacity(residues.len());
    for (&(a, b), &ri) in sym.fibers.iter().zip(&residues) {
        let num = a * ri + b;
        if num % n != 0 {
            return Err(Error::NoAdmissibleCover(format!(
                "{a}*{ri} + {b} is not divisible by {n}"
            )));
        }
        fibers.push((a, num / n));
    }
    Ok(SeifertCover {
        base: sym.clone(),
        sheets: n,
        residues,
        total: SeifertSymbol::new(sym.g, fibers)?,
    })
}

fn search_residues(sym: &SeifertSymbol, n: i64) -> Result<Vec<i64>> {
    let mut residues = Vec::with_capacity(sym.fibers.len());
    for &(a, b) in &sym.fibers {
        let eg = a.rem_euclid(n).extended_gcd(&n);
        if (-b).rem_euclid(eg.gcd) != 0 {
            return Err(Error::NoAdmissibleCover(format!(
                "{a} r = {} (mod {n}) has no solution",
                -b
            )));
        }
        let modulus = n / eg.gcd;
        let r = (eg.x * ((-b) / eg.gcd)).rem_euclid(modulus);
        residues.push(r);
    }
    let total: i64 = residues.iter().sum();
    if total.rem_euclid(n) != 0 {
        return Err(Error::NoAdmissibleCover(format!(
            "residue sum {total} is not divisible by {n}"
        )));
    }
    if let Some(last) = residues.last_mut() {
        *last -= total;
    }
    Ok(residues)
}

/// Heegaard genus for exactly one exceptional fiber: `2g` if `beta = +-1`,
/// otherwise `2g + 1`.
pub fn seifert_genus(sym: &SeifertSymbol) -> Result<i64> {
    match sym.fibers.as_slice() {
        [(_, b)] => Ok(if b.abs() == 1 {
            2 * sym.g
        } else {
            2 * sym.g + 1
        }),
        other => Err(Error::FiberCount(other.len())),
    }
}

/// A genus-lowering cyclic cover of a one-fiber symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertLowering {
    pub cover: SeifertCover,
    pub genus_before: i64,
    pub genus_after: i64,
}

/// The `|beta|`-fold cover with residue 0, when `|beta| >= 2`.
pub fn find_lowering(sym: &SeifertSymbol) -> Result<Option<SeifertLowering>> {
    let genus_before = seifert_genus(sym)?;
    let beta = sym.fibers[0].1;
    if beta.abs() < 2 {
        return Ok(None);
    }
    let cover = cyclic_cover(sym, beta.abs(), Some(&[0]))?;
    let genus_after = seifert_genus(&cover.total)?;
    Ok(Some(SeifertLowering {
        cover,
        genus_before,
        genus_after,
    }))
}
