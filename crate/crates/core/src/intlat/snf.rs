//! Smith normal form of small integer matrices, with unimodular transforms.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Mat2;

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }

    /// Determinant by cofactor expansion; fine for the sizes used here.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return self[(0, 0)].clone();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            if self[(0, j)].is_zero() {
                continue;
            }
            let mut minor = IntMatrix::zeros(n - 1, n - 1);
            for i in 1..n {
                let mut cc = 0;
                for k in 0..n {
                    if k != j {
                        minor[(i - 1, cc)] = self[(i, k)].clone();
                        cc += 1;
                    }
                }
            }
            let term = &self[(0, j)] * minor.det();
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
}

impl From<&Mat2> for IntMatrix {
    fn from(m: &Mat2) -> Self {
        IntMatrix {
            rows: 2,
            cols: 2,
            data: m.entries().into_iter().cloned().collect(),
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &o[(k, j)];
                }
                out[(i, j)] = acc;
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `U * M * V = diag(diagonal)` with `U`, `V` unimodular, entries of
/// `diagonal` non-negative and each dividing the next (zeros last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub diagonal: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.u.rows(), self.v.rows());
        for (i, t) in self.diagonal.iter().enumerate() {
            d[(i, i)] = t.clone();
        }
        d
    }
}

/// Smith normal form of an integer matrix.
pub fn snf(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = min_nonzero(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row(i, t, &q);
                u.add_row(i, t, &q);
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                // a remainder smaller than the pivot survived: move it in
                let (pi, pj) = min_nonzero_cross(&a, t);
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(t, t)]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    let diagonal = (0..rows.min(cols)).map(|i| a[(i, i)].clone()).collect();
    SmithDecomposition { u, v, diagonal }
}

fn min_nonzero(
    a: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_nonzero_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let col = min_nonzero(a, t..a.rows(), t..t + 1);
    let row = min_nonzero(a, t..t + 1, t..a.cols());
    match (col, row) {
        (Some(c), Some(r)) => {
            if a[c].abs() <= a[r].abs() {
                c
            } else {
                r
            }
        }
        (Some(c), None) => c,
        (None, Some(r)) => r,
        (None, None) => (t, t),
    }
}

/// Finitely generated abelian group `Z^free_rank + Z/t1 + ... + Z/tk`
/// with each torsion coefficient at least 2 and dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupDecomp {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupDecomp {
    /// Cokernel of a square integer matrix.
    pub fn cokernel(m: &IntMatrix) -> Self {
        let d = snf(m);
        let zeros = d.diagonal.iter().filter(|t| t.is_zero()).count() + m.rows() - d.diagonal.len();
        let torsion = d
            .diagonal
            .iter()
            .filter(|t| *t > &BigInt::one())
            .cloned()
            .collect();
        AbelianGroupDecomp {
            free_rank: zeros,
            torsion,
        }
    }

    /// Direct sum with `Z^k`.
    pub fn plus_free(mut self, k: usize) -> Self {
        self.free_rank += k;
        self
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }
}

impl fmt::Display for AbelianGroupDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let d = snf(m);
        assert_eq!(
            &(&d.u * m) * &d.v,
            d.diagonal_matrix(),
            "U M V != D for {m}"
        );
        assert!(d.u.det().abs().is_one());
        assert!(d.v.det().abs().is_one());
        for w in d.diagonal.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        d
    }

    #[test]
    fn already_diagonal() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        let d = check(&m);
        assert_eq!(d.diagonal, vec![2.into(), 2.into()]);
        assert_eq!(d.u, IntMatrix::identity(2));
        assert_eq!(d.v, IntMatrix::identity(2));
    }

    #[test]
    fn small_example() {
        let m = IntMatrix::from_rows(&[vec![-2, -1], vec![2, 0]]);
        assert_eq!(check(&m).diagonal, vec![1.into(), 2.into()]);
    }

    #[test]
    fn zero_matrix() {
        let m = IntMatrix::zeros(2, 2);
        assert_eq!(check(&m).diagonal, vec![0.into(), 0.into()]);
    }

    #[test]
    fn needs_divisibility_fixup() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(check(&m).diagonal, vec![1.into(), 6.into()]);
    }

    #[test]
    fn four_by_four() {
        let m = IntMatrix::from_rows(&[
            vec![4, 6, 8, 2],
            vec![0, 10, 2, 4],
            vec![6, 0, 4, 12],
            vec![2, 2, 2, 2],
        ]);
        let d = check(&m);
        let prod: BigInt = d.diagonal.iter().product();
        assert_eq!(prod, m.det().abs());
    }

    #[test]
    fn cokernel_counts_zeros_as_free() {
        let m = IntMatrix::from_rows(&[vec![0, 3], vec![0, 0]]);
        let g = AbelianGroupDecomp::cokernel(&m);
        assert_eq!(g.free_rank, 1);
        assert_eq!(g.torsion, vec![BigInt::from(3)]);
        assert_eq!(g.to_string(), "Z + Z/3");
    }
}
