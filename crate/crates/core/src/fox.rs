//! Fox free differential calculus and the rank-three certificate for the
//! bundle with monodromy `[[-1, -alpha], [0, -1]]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Freely reduced word in generators named by ASCII lowercase letters,
/// with every letter carrying exponent `+1` or `-1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GroupWord {
    letters: Vec<(char, i8)>,
}

fn check_generator(g: char) -> Result<()> {
    if g.is_ascii_lowercase() {
        Ok(())
    } else {
        Err(Error::UnknownGenerator(g))
    }
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn generator(g: char) -> Result<Self> {
        GroupWord::from_powers(&[(g, 1)])
    }

    /// Product `g1^e1 g2^e2 ...`, expanded into unit letters and reduced.
    pub fn from_powers(powers: &[(char, i64)]) -> Result<Self> {
        let mut w = GroupWord::identity();
        for &(g, e) in powers {
            check_generator(g)?;
            let sign = if e < 0 { -1 } else { 1 };
            for _ in 0..e.unsigned_abs() {
                w.push(g, sign);
            }
        }
        Ok(w)
    }

    /// Parses space-separated tokens like `t x t^-1 y^3`; `1` is the identity.
    pub fn parse(s: &str) -> Result<Self> {
        let mut powers = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let mut chars = tok.chars();
            let g = chars.next().expect("nonempty token");
            let rest: String = chars.collect();
            let e = match rest.strip_prefix('^') {
                None if rest.is_empty() => 1,
                Some(num) => num
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?,
                None => return Err(Error::Parse(format!("bad token {tok:?}"))),
            };
            powers.push((g, e));
        }
        GroupWord::from_powers(&powers)
    }

    fn push(&mut self, g: char, e: i8) {
        if self.letters.last() == Some(&(g, -e)) {
            self.letters.pop();
        } else {
            self.letters.push((g, e));
        }
    }

    pub fn letters(&self) -> &[(char, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }
}

impl Mul for &GroupWord {
    type Output = GroupWord;
    fn mul(self, o: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        for &(g, e) in &o.letters {
            w.push(g, e);
        }
        w
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut runs: Vec<(char, i64)> = Vec::new();
        for &(g, e) in &self.letters {
            match runs.last_mut() {
                Some((h, k)) if *h == g && (*k > 0) == (e > 0) => *k += i64::from(e),
                _ => runs.push((g, i64::from(e))),
            }
        }
        let parts: Vec<String> = runs
            .iter()
            .map(|&(g, k)| {
                if k == 1 {
                    g.to_string()
                } else {
                    format!("{g}^{k}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Element of the integral group ring of a free group.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalSum {
    terms: BTreeMap<GroupWord, i64>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    pub fn one() -> Self {
        FormalSum::from_word(GroupWord::identity())
    }

    pub fn from_word(w: GroupWord) -> Self {
        FormalSum::from_terms([(w, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupWord, i64)>) -> Self {
        let mut s = FormalSum::zero();
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
    }

    fn add_term(&mut self, w: GroupWord, c: i64) {
        let total = self.terms.get(&w).copied().unwrap_or(0) + c;
        if total == 0 {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, total);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &i64)> {
        self.terms.iter()
    }

    /// `u * self`.
    pub fn left_mul(&self, u: &GroupWord) -> Self {
        FormalSum::from_terms(self.terms.iter().map(|(w, &c)| (u * w, c)))
    }

    /// `self * u`.
    pub fn right_mul(&self, u: &GroupWord) -> Self {
        FormalSum::from_terms(self.terms.iter().map(|(w, &c)| (w * u, c)))
    }
}

impl Add for &FormalSum {
    type Output = FormalSum;
    fn add(self, o: &FormalSum) -> FormalSum {
        let mut s = self.clone();
        for (w, &c) in &o.terms {
            s.add_term(w.clone(), c);
        }
        s
    }
}

impl Neg for &FormalSum {
    type Output = FormalSum;
    fn neg(self) -> FormalSum {
        FormalSum::from_terms(self.terms.iter().map(|(w, &c)| (w.clone(), -c)))
    }
}

impl Sub for &FormalSum {
    type Output = FormalSum;
    fn sub(self, o: &FormalSum) -> FormalSum {
        self + &(-o)
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Fox derivative of `w` with respect to the generator `g`.
pub fn fox_derivative(w: &GroupWord, g: char) -> Result<FormalSum> {
    check_generator(g)?;
    let mut out = FormalSum::zero();
    let mut prefix = GroupWord::identity();
    for &(h, e) in &w.letters {
        if h == g {
            if e > 0 {
                out.add_term(prefix.clone(), 1);
            } else {
                let mut p = prefix.clone();
                p.push(h, -1);
                out.add_term(p, -1);
            }
        }
        prefix.push(h, e);
    }
    Ok(out)
}

/// Ring homomorphism to `Z/|modulus|` given by unit images of generators.
#[derive(Clone, Debug)]
pub struct EvalSpec {
    modulus: i64,
    assignment: BTreeMap<char, i64>,
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    use num_integer::Integer;
    let eg = a.rem_euclid(m).extended_gcd(&m);
    (eg.gcd == 1).then(|| eg.x.rem_euclid(m))
}

impl EvalSpec {
    pub fn new(modulus: i64, assignment: &[(char, i64)]) -> Result<Self> {
        let m = modulus.abs();
        if m < 2 {
            return Err(Error::TrivialModulus(modulus));
        }
        let mut map = BTreeMap::new();
        for &(g, v) in assignment {
            check_generator(g)?;
            if mod_inverse(v, m).is_none() {
                return Err(Error::InvalidParameters(format!(
                    "{v} is not a unit modulo {m}"
                )));
            }
            map.insert(g, v.rem_euclid(m));
        }
        Ok(EvalSpec {
            modulus: m,
            assignment: map,
        })
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    fn image(&self, g: char, e: i8) -> Result<i64> {
        let v = *self.assignment.get(&g).ok_or(Error::UnknownGenerator(g))?;
        Ok(if e > 0 {
            v
        } else {
            mod_inverse(v, self.modulus).expect("checked unit")
        })
    }

    /// Image of a group element, in `[0, modulus)`.
    pub fn evaluate_word(&self, w: &GroupWord) -> Result<i64> {
        let m = i128::from(self.modulus);
        let mut acc: i128 = 1 % m;
        for &(g, e) in &w.letters {
            acc = acc * i128::from(self.image(g, e)?) % m;
        }
        Ok(acc as i64)
    }

    /// Image of a group ring element, in `[0, modulus)`.
    pub fn evaluate(&self, fs: &FormalSum) -> Result<i64> {
        let m = i128::from(self.modulus);
        let mut acc: i128 = 0;
        for (w, &c) in &fs.terms {
            acc = (acc + i128::from(c) * i128::from(self.evaluate_word(w)?)).rem_euclid(m);
        }
        Ok(acc as i64)
    }
}

/// The evaluated Fox Jacobian of the presentation
/// `<x, y, t | t x t^-1 x, t y t^-1 y x^alpha, x y x^-1 y^-1>`
/// under `x, y -> 1`, `t -> -1` in `Z/|alpha|`.
#[derive(Clone, Debug)]
pub struct Rank3Certificate {
    pub alpha: i64,
    pub relators: [GroupWord; 3],
    /// `derivatives[i][j]` is the derivative of relator `i` by generator `j`
    /// in the order `x, y, t`.
    pub derivatives: [[FormalSum; 3]; 3],
    pub relator_values: [i64; 3],
    pub jacobian_values: [[i64; 3]; 3],
}

impl Rank3Certificate {
    /// All relators map to 1 and the whole Jacobian maps to 0.
    pub fn holds(&self) -> bool {
        let one = 1 % self.alpha.abs();
        self.relator_values.iter().all(|&v| v == one)
            && self.jacobian_values.iter().flatten().all(|&v| v == 0)
    }
}

pub const GENERATORS: [char; 3] = ['x', 'y', 't'];

/// Relators of the fundamental group of the bundle with monodromy
/// `[[-1, -alpha], [0, -1]]`.
pub fn bundle_relators(alpha: i64) -> [GroupWord; 3] {
    let w = |p: &[(char, i64)]| GroupWord::from_powers(p).expect("fixed alphabet");
    [
        w(&[('t', 1), ('x', 1), ('t', -1), ('x', 1)]),
        w(&[('t', 1), ('y', 1), ('t', -1), ('y', 1), ('x', alpha)]),
        w(&[('x', 1), ('y', 1), ('x', -1), ('y', -1)]),
    ]
}

/// Builds and evaluates the rank-three certificate; `|alpha| >= 2`.
pub fn rank3_certificate(alpha: i64) -> Result<Rank3Certificate> {
    let spec = EvalSpec::new(alpha, &[('x', 1), ('y', 1), ('t', -1)])?;
    let relators = bundle_relators(alpha);
    let derivatives = relators
        .clone()
        .map(|r| GENERATORS.map(|g| fox_derivative(&r, g).expect("fixed alphabet")));
    let mut relator_values = [0; 3];
    let mut jacobian_values = [[0; 3]; 3];
    for i in 0..3 {
        relator_values[i] = spec.evaluate_word(&relators[i])?;
        for j in 0..3 {
            jacobian_values[i][j] = spec.evaluate(&derivatives[i][j])?;
        }
    }
    Ok(Rank3Certificate {
        alpha,
        relators,
        derivatives,
        relator_values,
        jacobian_values,
    })
}
