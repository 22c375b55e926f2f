use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;
use crate::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch("shapes differ".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Matrix) -> Result<Matrix> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch("column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn rank(&self) -> usize {
        Echelon::new(self).pivots.len()
    }

    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        Echelon::new(self).kernel()
    }

    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let ech = Echelon::new(self);
        if ech.pivots.len() < self.rows {
            return Ok(Scalar::zero());
        }
        // Bareiss leaves det(scaled matrix) in the last pivot, up to the row-swap sign.
        let last = &ech.rows[self.rows - 1][self.cols - 1];
        let mut d = BigRational::from_integer(last.clone()) / &ech.row_scale;
        if ech.swaps % 2 == 1 {
            d = -d;
        }
        Ok(d)
    }

    /// Gauss–Jordan inverse over the rationals.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let piv = a[(c, c)].clone();
            for j in 0..n {
                a[(c, j)] = &a[(c, j)] / &piv;
                inv[(c, j)] = &inv[(c, j)] / &piv;
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for j in 0..n {
                    let t = &f * &a[(c, j)];
                    a[(r, j)] -= t;
                    let t = &f * &inv[(c, j)];
                    inv[(r, j)] -= t;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Row echelon form of an integer-scaled copy of a rational matrix, computed
/// with fraction-free (Bareiss) elimination. Every intermediate entry is a
/// minor of the scaled input, so all divisions are exact.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
    swaps: usize,
    /// Product of the per-row factors used to clear denominators.
    row_scale: BigInt,
}

impl Echelon {
    fn new(m: &Matrix) -> Self {
        let mut row_scale = BigInt::one();
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|i| {
                let r = m.row(i);
                let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row_scale *= &l;
                r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                rows.swap(p, r);
                swaps += 1;
            }
            let (top, bottom) = rows.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in bottom.iter_mut() {
                let lead = row[c].clone();
                for j in c + 1..m.cols {
                    let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[c] = BigInt::zero();
            }
            // Rows above the pivot row are not rescaled, so `pivot_row` may
            // still carry entries left of `c` from earlier steps; those are zero.
            prev = pivot_row[c].clone();
            pivots.push(c);
            r += 1;
        }
        Self {
            rows,
            pivots,
            cols: m.cols,
            swaps,
            row_scale,
        }
    }

    /// Null-space basis, one primitive integer vector per free column.
    fn kernel(&self) -> Vec<Vec<Scalar>> {
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &self.pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut x = vec![Scalar::zero(); self.cols];
            x[free] = Scalar::one();
            for (r, &pc) in self.pivots.iter().enumerate().rev() {
                let row = &self.rows[r];
                let mut acc = Scalar::zero();
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc += BigRational::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[pc] = -acc / BigRational::from_integer(row[pc].clone());
            }
            basis.push(primitive(x));
        }
        basis
    }
}

/// Rescales a nonzero rational vector to a primitive integer vector whose
/// first nonzero entry is positive.
fn primitive(x: Vec<Scalar>) -> Vec<Scalar> {
    let l = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return x;
    }
    let sign = match ints.iter().find(|v| !v.is_zero()) {
        Some(v) if v.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter()
        .map(|v| BigRational::from_integer(v / &g * &sign))
        .collect()
}

pub fn kernel(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.kernel()
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// A square matrix with `a[i][j] == a[j][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricMatrix(Matrix);

impl SymmetricMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    /// `p^T S p`.
    pub fn congruent(&self, p: &Matrix) -> Result<SymmetricMatrix> {
        let m = p.transpose().mul(&self.0)?.mul(p)?;
        SymmetricMatrix::new(m)
    }

    pub fn signature(&self) -> Signature {
        congruence_signature(self.0.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

impl Signature {
    /// `(max(pos, neg), min(pos, neg))`, which is insensitive to an overall sign.
    pub fn normalized(&self) -> (usize, usize) {
        (self.pos.max(self.neg), self.pos.min(self.neg))
    }
}

pub fn signature(s: &Matrix) -> Result<Signature> {
    Ok(SymmetricMatrix::new(s.clone())?.signature())
}

/// Symmetric Gaussian elimination. A nonzero diagonal pivot contributes its
/// sign; when the active block has a zero diagonal but a nonzero off-diagonal
/// entry, the hyperbolic 2x2 block on that pair contributes one of each.
fn congruence_signature(mut a: Matrix) -> Signature {
    let n = a.rows();
    let mut sig = Signature { pos: 0, neg: 0, null: 0 };
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[(i, i)].is_zero()) {
            sym_swap(&mut a, k, p);
            let d = a[(k, k)].clone();
            if d.is_positive() {
                sig.pos += 1;
            } else {
                sig.neg += 1;
            }
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &d;
                for j in k..n {
                    let t = &f * &a[(k, j)];
                    a[(i, j)] -= t;
                }
                for j in k..n {
                    let t = &f * &a[(j, k)];
                    a[(j, i)] -= t;
                }
            }
            k += 1;
            continue;
        }
        let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero());
        let Some((i, j)) = off else {
            sig.null += n - k;
            break;
        };
        sym_swap(&mut a, k, i);
        sym_swap(&mut a, k + 1, j);
        // Block [[0, b], [b, 0]] with inverse [[0, 1/b], [1/b, 0]].
        let b = a[(k, k + 1)].clone();
        for r in k + 2..n {
            let c0 = &a[(r, k + 1)] / &b;
            let c1 = &a[(r, k)] / &b;
            if c0.is_zero() && c1.is_zero() {
                continue;
            }
            for col in k..n {
                let t = &c0 * &a[(k, col)] + &c1 * &a[(k + 1, col)];
                a[(r, col)] -= t;
            }
            for row in k..n {
                let t = &c0 * &a[(row, k)] + &c1 * &a[(row, k + 1)];
                a[(row, r)] -= t;
            }
        }
        sig.pos += 1;
        sig.neg += 1;
        k += 2;
    }
    sig
}

fn sym_swap(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap_rows(i, j);
    for r in 0..a.rows() {
        let (x, y) = (a[(r, i)].clone(), a[(r, j)].clone());
        a[(r, i)] = y;
        a[(r, j)] = x;
    }
}
