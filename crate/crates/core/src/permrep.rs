//! Permutation representations of the torus group `<a, b | [a, b]>` and of
//! torus bundle groups `<x, y, t>`.
//!
//! Points are 0-based internally and 1-based in cycle notation.
//! Composition is right to left: `(p * q)(i) = p(q(i))`.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::intlat::Lattice;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(k: usize) -> Self {
        Perm {
            images: (0..k).collect(),
        }
    }

    /// Product of the given 0-based cycles on `k` points.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut used = vec![false; k];
        for c in cycles {
            for (idx, &p) in c.iter().enumerate() {
                if p >= k {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} exceeds degree {k}",
                        p + 1
                    )));
                }
                if used[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated",
                        p + 1
                    )));
                }
                used[p] = true;
                images[p] = c[(idx + 1) % c.len()];
            }
        }
        Ok(Perm { images })
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`; `""` and `"()"`
    /// give the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("malformed cycle notation {s:?}")))?;
            let (inner, tail) = body;
            rest = tail;
            if inner.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for tok in inner.split(',') {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?} in {s:?}")))?;
                if p == 0 {
                    return Err(Error::Parse(format!("points are 1-based in {s:?}")));
                }
                cycle.push(p - 1);
            }
            cycles.push(cycle);
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, k: i64) -> Perm {
        let ord = self.order() as i64;
        let e = k.rem_euclid(ord);
        let mut acc = Perm::identity(self.degree());
        for _ in 0..e {
            acc = self * &acc;
        }
        acc
    }

    /// `v self v^-1`.
    pub fn conjugate_by(&self, v: &Perm) -> Perm {
        &(v * self) * &v.inverse()
    }

    /// Nontrivial cycles, each starting at its least point, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                c.push(p);
                p = self.images[p];
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }

    /// Restriction to an invariant subset, relabelled by the sorted order of
    /// its points.
    pub fn restrict(&self, subset: &[usize]) -> Result<Perm> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        let images = sorted
            .iter()
            .map(|&p| {
                sorted
                    .binary_search(&self.images[p])
                    .map_err(|_| Error::InvalidPermutation("subset is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::new(images)
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, o: &Perm) -> Perm {
        assert_eq!(self.degree(), o.degree(), "degree mismatch");
        Perm {
            images: o.images.iter().map(|&i| self.images[i]).collect(),
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

/// Orbits of the group generated by `gens`, each sorted, ordered by least
/// point.
pub fn orbits(k: usize, gens: &[&Perm]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for g in gens {
        for i in 0..k {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index_of_root = vec![usize::MAX; k];
    for i in 0..k {
        let r = find(&mut parent, i);
        if index_of_root[r] == usize::MAX {
            index_of_root[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[index_of_root[r]].push(i);
    }
    groups
}

pub fn is_transitive(k: usize, gens: &[&Perm]) -> bool {
    k == 0 || orbits(k, gens).len() == 1
}

/// Images `sigma = rep(a)`, `tau = rep(b)` of commuting generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusRep {
    pub sigma: Perm,
    pub tau: Perm,
}

impl TorusRep {
    pub fn new(sigma: Perm, tau: Perm) -> Result<Self> {
        if sigma.degree() != tau.degree() {
            return Err(Error::InvalidPermutation("degrees differ".into()));
        }
        if &sigma * &tau != &tau * &sigma {
            return Err(Error::NotAbelian);
        }
        Ok(TorusRep { sigma, tau })
    }

    pub fn degree(&self) -> usize {
        self.sigma.degree()
    }

    pub fn is_transitive(&self) -> bool {
        is_transitive(self.degree(), &[&self.sigma, &self.tau])
    }

    pub fn conjugate_by(&self, v: &Perm) -> TorusRep {
        TorusRep {
            sigma: self.sigma.conjugate_by(v),
            tau: self.tau.conjugate_by(v),
        }
    }
}

/// The transitive representation with image `Z_m + Z_n` of degree `m n`:
/// `sigma` is the product of the `m` consecutive `n`-cycles and `tau` moves
/// each block to the next, returning to the first block shifted by
/// `rho = i0 n / d`.
pub fn omega_rep(m: usize, n: usize, d: usize, i0: usize) -> Result<TorusRep> {
    let bad = |why: &str| {
        Err(Error::InvalidParameters(format!(
            "omega(m={m}, n={n}, d={d}, i0={i0}): {why}"
        )))
    };
    if m == 0 || n == 0 || d == 0 {
        return bad("parameters must be positive");
    }
    if !n.is_multiple_of(m) || !n.is_multiple_of(d * m) {
        return bad("need m | n and d m | n");
    }
    if i0 >= d || d.gcd(&i0) != 1 {
        return bad("need 0 <= i0 < d with gcd(d, i0) = 1");
    }
    let k = m * n;
    let sigma_cycles: Vec<Vec<usize>> = (0..m).map(|j| (j * n..(j + 1) * n).collect()).collect();
    let rho = i0 * n / d;
    let mut tau_cycles = Vec::new();
    for shift in 0..n / d {
        let mut cycle = Vec::with_capacity(d * m);
        for step in 0..d {
            let r = (step * rho) % n + shift;
            for j in 0..m {
                cycle.push(r + j * n);
            }
        }
        tau_cycles.push(cycle);
    }
    TorusRep::new(
        Perm::from_cycles(k, &sigma_cycles)?,
        Perm::from_cycles(k, &tau_cycles)?,
    )
}

/// Parameters of a transitive abelian representation together with the
/// relabelling that takes it to the standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub rho: usize,
    pub i0: usize,
    /// `v` with `v r v^-1 = omega_rep(m, n, d, i0)` (after the swap, if any).
    pub conjugator: Perm,
    /// The roles of `sigma` and `tau` were exchanged so that `sigma` has
    /// order `n`.
    pub swapped: bool,
}

/// Classifies a transitive representation with abelian image `Z_m + Z_n`,
/// `m | n`.
pub fn classify_rep(r: &TorusRep) -> Result<Classification> {
    let k = r.degree();
    if !r.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let (os, ot) = (r.sigma.order(), r.tau.order());
    let n = os.lcm(&ot);
    let (sigma, tau, swapped) = if os == n {
        (&r.sigma, &r.tau, false)
    } else if ot == n {
        (&r.tau, &r.sigma, true)
    } else {
        return Err(Error::NoGeneratorOfFullOrder(n));
    };
    if !k.is_multiple_of(n) {
        return Err(Error::InvalidParameters(format!(
            "degree {k} is not a multiple of the exponent {n}"
        )));
    }
    let m = k / n;
    // tau^m lies in <sigma>
    let tm = tau.pow(m as i64);
    let start = 0;
    let target = tm.apply(start);
    let mut rho = 0;
    let mut p = start;
    while p != target {
        p = sigma.apply(p);
        rho += 1;
    }
    if sigma.pow(rho as i64) != tm {
        return Err(Error::InvalidParameters(format!(
            "image is not Z_{m} + Z_{n}"
        )));
    }
    let g = n.gcd(&rho);
    let d = n / g;
    let i0 = rho / g;
    // v(sigma^i tau^j (0)) = j n + i
    let mut v = vec![usize::MAX; k];
    let mut col = start;
    for j in 0..m {
        let mut p = col;
        for i in 0..n {
            v[p] = j * n + i;
            p = sigma.apply(p);
        }
        col = tau.apply(col);
    }
    let conjugator = Perm::new(v)?;
    let standard = omega_rep(m, n, d, i0)?;
    let ordered = TorusRep {
        sigma: sigma.clone(),
        tau: tau.clone(),
    };
    if ordered.conjugate_by(&conjugator) != standard {
        return Err(Error::InvalidParameters(format!(
            "image is not Z_{m} + Z_{n}"
        )));
    }
    Ok(Classification {
        m,
        n,
        d,
        rho,
        i0,
        conjugator,
        swapped,
    })
}

/// `<(n, 0), (-rho mod n, m)>`, the subgroup of exponent vectors `(u, v)`
/// with `a^u b^v` fixing the first point of `omega(m, n, d, rho)`.
pub fn covering_lattice(m: i64, n: i64, rho: i64) -> Result<Lattice> {
    if m < 1 || n < 1 || n % m != 0 || rho % m != 0 {
        return Err(Error::InvalidParameters(format!(
            "need m | n and m | rho; got m={m}, n={n}, rho={rho}"
        )));
    }
    Lattice::from_basis([n, 0], [(-rho).rem_euclid(n), m])
}

/// Images of the bundle group generators `x, y` (fiber) and `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BundleRep {
    pub sx: Perm,
    pub sy: Perm,
    pub st: Perm,
}

impl BundleRep {
    pub fn new(sx: Perm, sy: Perm, st: Perm) -> Result<Self> {
        let k = sx.degree();
        if sy.degree() != k || st.degree() != k {
            return Err(Error::InvalidPermutation("degrees differ".into()));
        }
        if &sx * &sy != &sy * &sx {
            return Err(Error::NotAbelian);
        }
        if !is_transitive(k, &[&sx, &sy, &st]) {
            return Err(Error::NotTransitive);
        }
        Ok(BundleRep { sx, sy, st })
    }

    pub fn degree(&self) -> usize {
        self.sx.degree()
    }

    /// Generators `t^j x t^-j`, `t^j y t^-j` of the normal closure of the
    /// fiber image.
    pub fn fiber_generators(&self) -> Vec<Perm> {
        let ord = self.st.order();
        let mut out = Vec::with_capacity(2 * ord);
        let mut c = Perm::identity(self.degree());
        for _ in 0..ord {
            out.push(self.sx.conjugate_by(&c));
            out.push(self.sy.conjugate_by(&c));
            c = &self.st * &c;
        }
        out
    }

    pub fn conjugate_by(&self, v: &Perm) -> BundleRep {
        BundleRep {
            sx: self.sx.conjugate_by(v),
            sy: self.sy.conjugate_by(v),
            st: self.st.conjugate_by(v),
        }
    }
}

/// Splitting of a bundle representation into a power part (action on the
/// blocks) and a fiber part (action inside the first block).
#[derive(Clone, Debug)]
pub struct Factorization {
    /// Number of blocks, the degree of the power covering.
    pub m: usize,
    /// Orbits of the fiber subgroup, ordered by least point.
    pub blocks: Vec<Vec<usize>>,
    /// Block index of every point.
    pub block_assignment: Vec<usize>,
    /// Induced permutations of the blocks for `sx`, `sy`, `st`.
    pub q_images: [Perm; 3],
    /// `(sx, sy, st^m)` restricted to the first block.
    pub gamma: BundleRep,
    fiber_gens: Vec<Perm>,
}

pub fn factor_bundle_rep(r: &BundleRep) -> Result<Factorization> {
    let k = r.degree();
    if !is_transitive(k, &[&r.sx, &r.sy, &r.st]) {
        return Err(Error::NotTransitive);
    }
    let fiber_gens = r.fiber_generators();
    let refs: Vec<&Perm> = fiber_gens.iter().collect();
    let blocks = orbits(k, &refs);
    let m = blocks.len();
    let mut block_assignment = vec![0; k];
    for (b, pts) in blocks.iter().enumerate() {
        for &p in pts {
            block_assignment[p] = b;
        }
    }
    let induced = |g: &Perm| -> Result<Perm> {
        let images = blocks
            .iter()
            .map(|b| block_assignment[g.apply(b[0])])
            .collect();
        Perm::new(images)
    };
    let q_images = [induced(&r.sx)?, induced(&r.sy)?, induced(&r.st)?];
    let first = &blocks[0];
    let gamma = BundleRep {
        sx: r.sx.restrict(first)?,
        sy: r.sy.restrict(first)?,
        st: r.st.pow(m as i64).restrict(first)?,
    };
    Ok(Factorization {
        m,
        blocks,
        block_assignment,
        q_images,
        gamma,
        fiber_gens,
    })
}

impl Factorization {
    pub fn blocks_equal_size(&self) -> bool {
        let s = self.blocks[0].len();
        self.blocks.iter().all(|b| b.len() == s)
    }

    /// Every fiber generator fixes every block.
    pub fn q_kills_fiber(&self) -> bool {
        self.fiber_gens.iter().all(|g| {
            self.blocks.iter().all(|b| {
                b.iter()
                    .all(|&p| self.block_assignment[g.apply(p)] == self.block_assignment[p])
            })
        })
    }

    /// The fiber subgroup acts transitively on the first block.
    pub fn gamma_fiber_transitive(&self) -> bool {
        let first = &self.blocks[0];
        let restricted: Result<Vec<Perm>> =
            self.fiber_gens.iter().map(|g| g.restrict(first)).collect();
        match restricted {
            Ok(gs) => is_transitive(first.len(), &gs.iter().collect::<Vec<_>>()),
            Err(_) => false,
        }
    }

    /// `block(g p) = q(g) block(p)` for the three generators.
    pub fn is_equivariant(&self, r: &BundleRep) -> bool {
        [&r.sx, &r.sy, &r.st]
            .iter()
            .zip(&self.q_images)
            .all(|(g, q)| {
                (0..r.degree())
                    .all(|p| self.block_assignment[g.apply(p)] == q.apply(self.block_assignment[p]))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, k: usize) -> Perm {
        Perm::parse(s, k).unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("(1,2)", 3).images(), &[1, 0, 2]);
        assert!(p("", 4).is_identity());
        assert!(p("()", 4).is_identity());
        assert!(Perm::parse("(1,1)", 3).is_err());
        assert!(Perm::parse("(1,5)", 3).is_err());
        assert!(Perm::parse("(1,2", 3).is_err());
        assert_eq!(p("(3,1,2)(5,4)", 5).to_string(), "(1,2,3)(4,5)");
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        // apply b first: 1 -> 1 -> 2
        assert_eq!((&a * &b).apply(0), 1);
        assert_eq!((&a * &b).to_string(), "(1,2,3)");
    }

    #[test]
    fn worked_omega_example() {
        let r = omega_rep(2, 8, 4, 1).unwrap();
        assert_eq!(
            r.sigma.to_string(),
            "(1,2,3,4,5,6,7,8)(9,10,11,12,13,14,15,16)"
        );
        assert_eq!(
            r.tau.to_string(),
            "(1,9,3,11,5,13,7,15)(2,10,4,12,6,14,8,16)"
        );
    }

    #[test]
    fn small_omegas() {
        let r = omega_rep(1, 5, 1, 0).unwrap();
        assert_eq!(r.sigma.to_string(), "(1,2,3,4,5)");
        assert!(r.tau.is_identity());
        let r = omega_rep(2, 2, 1, 0).unwrap();
        assert_eq!(r.sigma.to_string(), "(1,2)(3,4)");
        assert_eq!(r.tau.to_string(), "(1,3)(2,4)");
        assert!(omega_rep(2, 3, 1, 0).is_err());
        assert!(omega_rep(1, 4, 2, 0).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = classify_rep(&omega_rep(2, 8, 4, 1).unwrap()).unwrap();
        assert_eq!((c.m, c.n, c.d, c.rho), (2, 8, 4, 2));
        let eps = p("(1,2,3,4,5,6)", 6);
        let r = TorusRep::new(eps.clone(), eps.pow(4)).unwrap();
        let c = classify_rep(&r).unwrap();
        assert_eq!((c.m, c.n, c.d, c.rho), (1, 6, 3, 4));
        let triv = TorusRep::new(Perm::identity(1), Perm::identity(1)).unwrap();
        let c = classify_rep(&triv).unwrap();
        assert_eq!((c.m, c.n, c.d, c.rho), (1, 1, 1, 0));
    }

    #[test]
    fn classify_errors() {
        let r = TorusRep::new(p("(1,2)", 4), p("(3,4)", 4)).unwrap();
        assert_eq!(classify_rep(&r), Err(Error::NotTransitive));
        assert_eq!(
            TorusRep::new(p("(1,2)", 3), p("(2,3)", 3)),
            Err(Error::NotAbelian)
        );
        // Z_2 + Z_2 acting regularly, both generators of order 2 = exponent
        let r = TorusRep::new(p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)).unwrap();
        assert_eq!(classify_rep(&r).unwrap().m, 2);
    }

    #[test]
    fn classify_swaps_generators() {
        let base = omega_rep(1, 6, 1, 0).unwrap();
        let r = TorusRep::new(base.tau.clone(), base.sigma.clone()).unwrap();
        let c = classify_rep(&r).unwrap();
        assert!(c.swapped);
        assert_eq!((c.m, c.n), (1, 6));
    }

    #[test]
    fn lattices() {
        let l = covering_lattice(2, 8, 2).unwrap();
        assert_eq!((l.d1(), l.c(), l.d2()), (8, 6, 2));
        let l = covering_lattice(1, 5, 2).unwrap();
        assert_eq!((l.d1(), l.c(), l.d2()), (5, 3, 1));
        let l = covering_lattice(3, 6, 0).unwrap();
        assert_eq!((l.d1(), l.c(), l.d2()), (6, 0, 3));
        assert!(covering_lattice(2, 8, 3).is_err());
        assert!(covering_lattice(3, 8, 0).is_err());
    }

    #[test]
    fn factor_examples() {
        let id = Perm::identity(5);
        let eps = p("(1,2,3,4,5)", 5);
        let f = factor_bundle_rep(&BundleRep::new(id.clone(), id.clone(), eps.clone()).unwrap())
            .unwrap();
        assert_eq!(f.m, 5);
        assert_eq!(f.gamma.degree(), 1);
        let f = factor_bundle_rep(&BundleRep::new(eps, id.clone(), id).unwrap()).unwrap();
        assert_eq!(f.m, 1);

        let r = BundleRep::new(p("(1,2)(3,4)", 4), Perm::identity(4), p("(1,3)(2,4)", 4)).unwrap();
        let f = factor_bundle_rep(&r).unwrap();
        assert_eq!(f.m, 2);
        assert_eq!(f.blocks, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(f.gamma.degree(), 2);
        assert!(f.blocks_equal_size() && f.q_kills_fiber());
        assert!(f.gamma_fiber_transitive() && f.is_equivariant(&r));
    }
}
