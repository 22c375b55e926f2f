//! Composition algebras as structure-constant tables.
//!
//! Every table stores its unit at basis index 0. Doubled algebras keep the
//! base algebra's basis in the first half and its copy `(0, ·)` in the second
//! half, so for `O = CD(H)` the basis reads `1, i, j, k, e, ie, je, ke` where
//! `e = (0, 1)`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde_json::json;

use crate::exterior::{format_scalar, int, KForm, Matrix, Scalar, SymmetricMatrix};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    R,
    C,
    H,
    /// Split quaternions in the 2×2 real matrix model.
    Hsplit,
    O,
    /// Split octonions as `H ⊕ H` with `(a,b)(c,d) = (ac + d b̄, cb + ā d)`.
    Osplit,
    /// Split octonions as the Cayley–Dickson double of `Hsplit`.
    OsplitFromHsplit,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 7] = [
        AlgebraKind::R,
        AlgebraKind::C,
        AlgebraKind::H,
        AlgebraKind::Hsplit,
        AlgebraKind::O,
        AlgebraKind::Osplit,
        AlgebraKind::OsplitFromHsplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::R => "R",
            AlgebraKind::C => "C",
            AlgebraKind::H => "H",
            AlgebraKind::Hsplit => "Hsplit",
            AlgebraKind::O => "O",
            AlgebraKind::Osplit => "Osplit",
            AlgebraKind::OsplitFromHsplit => "Osplit_from_Hsplit",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        Self { coords: vec![Scalar::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut x = Self::zero(dim);
        x.coords[i] = Scalar::one();
        x
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Self { coords: xs.iter().map(|&v| int(v)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { coords: self.coords.iter().map(|a| a * s).collect() }
    }

    /// `(self, other)` as an element of the doubled algebra.
    pub fn pair(&self, other: &Self) -> Self {
        Self { coords: self.coords.iter().chain(&other.coords).cloned().collect() }
    }

    /// Splits an element of a doubled algebra into its halves.
    pub fn halves(&self) -> (Self, Self) {
        let n = self.dim() / 2;
        (
            Self { coords: self.coords[..n].to_vec() },
            Self { coords: self.coords[n..].to_vec() },
        )
    }
}

#[derive(Debug, Clone)]
pub struct AlgebraTable {
    kind: AlgebraKind,
    dim: usize,
    /// `mult[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
    mult: Vec<Vec<Vec<Scalar>>>,
    conj: Matrix,
    norm: SymmetricMatrix,
    unit_index: usize,
}

pub fn build_algebra(kind: AlgebraKind) -> AlgebraTable {
    match kind {
        AlgebraKind::R => from_products(kind, 1, |x, y| AlgebraElement { coords: vec![&x.coords[0] * &y.coords[0]] }, |x| x.clone()),
        AlgebraKind::C => cayley_dickson(&build_algebra(AlgebraKind::R), kind),
        AlgebraKind::H => cayley_dickson(&build_algebra(AlgebraKind::C), kind),
        AlgebraKind::O => cayley_dickson(&build_algebra(AlgebraKind::H), kind),
        AlgebraKind::OsplitFromHsplit => cayley_dickson(&build_algebra(AlgebraKind::Hsplit), kind),
        AlgebraKind::Hsplit => split_quaternions(),
        AlgebraKind::Osplit => signed_double(&build_algebra(AlgebraKind::H)),
    }
}

/// A shared, lazily built table for `kind`.
pub fn table(kind: AlgebraKind) -> &'static AlgebraTable {
    static TABLES: [OnceLock<AlgebraTable>; 7] = [const { OnceLock::new() }; 7];
    let slot = AlgebraKind::ALL.iter().position(|&k| k == kind).expect("listed kind");
    TABLES[slot].get_or_init(|| build_algebra(kind))
}

/// The split quaternion with the given 2×2 matrix in the model of
/// [`AlgebraKind::Hsplit`].
pub fn hsplit_from_matrix(m: &Matrix) -> Result<AlgebraElement> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch(format!("{}x{} is not 2x2", m.rows(), m.cols())));
    }
    let half = Scalar::new(1.into(), 2.into());
    let (p, q, r, s) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
    Ok(AlgebraElement {
        coords: vec![(p + s) * &half, (q - r) * &half, (q + r) * &half, (p - s) * &half],
    })
}

/// Builds a table from an element-level product and conjugation.
fn from_products(
    kind: AlgebraKind,
    dim: usize,
    mul: impl Fn(&AlgebraElement, &AlgebraElement) -> AlgebraElement,
    conj: impl Fn(&AlgebraElement) -> AlgebraElement,
) -> AlgebraTable {
    let basis: Vec<AlgebraElement> = (0..dim).map(|i| AlgebraElement::basis(dim, i)).collect();
    let mult = basis
        .iter()
        .map(|x| basis.iter().map(|y| mul(x, y).coords).collect())
        .collect();
    let conj_m = Matrix::from_fn(dim, dim, |r, c| conj(&basis[c]).coords[r].clone());
    let mut t = AlgebraTable {
        kind,
        dim,
        mult,
        conj: conj_m,
        norm: SymmetricMatrix::new(Matrix::zeros(dim, dim)).expect("zero is symmetric"),
        unit_index: 0,
    };
    // ⟨x, y⟩ = unit coefficient of (x ȳ + y x̄) / 2
    let half = Scalar::new(1.into(), 2.into());
    let gram = Matrix::from_fn(dim, dim, |i, j| {
        let a = t.multiply_unchecked(&basis[i], &t.conjugate(&basis[j]));
        let b = t.multiply_unchecked(&basis[j], &t.conjugate(&basis[i]));
        (&a.coords[0] + &b.coords[0]) * &half
    });
    t.norm = SymmetricMatrix::new(gram).expect("polarization is symmetric");
    t
}

/// `(a,b)(c,d) = (ac − d̄b, da + bc̄)`, `conj(a,b) = (ā, −b)`.
fn cayley_dickson(base: &AlgebraTable, kind: AlgebraKind) -> AlgebraTable {
    from_products(
        kind,
        2 * base.dim,
        |x, y| {
            let ((a, b), (c, d)) = (x.halves(), y.halves());
            let first = base.multiply_unchecked(&a, &c).sub(&base.multiply_unchecked(&base.conjugate(&d), &b));
            let second = base.multiply_unchecked(&d, &a).add(&base.multiply_unchecked(&b, &base.conjugate(&c)));
            first.pair(&second)
        },
        |x| {
            let (a, b) = x.halves();
            base.conjugate(&a).pair(&b.scale(&-Scalar::one()))
        },
    )
}

/// `(a,b)(c,d) = (ac + d b̄, cb + ā d)`, `conj(a,b) = (ā, −b)`.
fn signed_double(base: &AlgebraTable) -> AlgebraTable {
    from_products(
        AlgebraKind::Osplit,
        2 * base.dim,
        |x, y| {
            let ((a, b), (c, d)) = (x.halves(), y.halves());
            let first = base.multiply_unchecked(&a, &c).add(&base.multiply_unchecked(&d, &base.conjugate(&b)));
            let second = base.multiply_unchecked(&c, &b).add(&base.multiply_unchecked(&base.conjugate(&a), &d));
            first.pair(&second)
        },
        |x| {
            let (a, b) = x.halves();
            base.conjugate(&a).pair(&b.scale(&-Scalar::one()))
        },
    )
}

/// Basis `1, i, j, k` with `i = [[0,1],[-1,0]]`, `j = [[0,1],[1,0]]`,
/// `k = ij = [[1,0],[0,-1]]`.
fn split_quaternions() -> AlgebraTable {
    fn to_matrix(x: &AlgebraElement) -> [[Scalar; 2]; 2] {
        let c = &x.coords;
        [[&c[0] + &c[3], &c[1] + &c[2]], [&c[2] - &c[1], &c[0] - &c[3]]]
    }
    fn from_matrix(m: [[Scalar; 2]; 2]) -> AlgebraElement {
        let [[p, q], [r, s]] = m;
        hsplit_from_matrix(&Matrix::from_rows(vec![vec![p, q], vec![r, s]]).expect("2x2")).expect("2x2")
    }
    from_products(
        AlgebraKind::Hsplit,
        4,
        |x, y| {
            let (a, b) = (to_matrix(x), to_matrix(y));
            from_matrix(std::array::from_fn(|r| {
                std::array::from_fn(|c| &a[r][0] * &b[0][c] + &a[r][1] * &b[1][c])
            }))
        },
        |x| AlgebraElement {
            coords: vec![x.coords[0].clone(), -x.coords[1].clone(), -x.coords[2].clone(), -x.coords[3].clone()],
        },
    )
}

impl AlgebraTable {
    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_index(&self) -> usize {
        self.unit_index
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[i][j][k]
    }

    pub fn conj_matrix(&self) -> &Matrix {
        &self.conj
    }

    pub fn norm_form(&self) -> &SymmetricMatrix {
        &self.norm
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::basis(self.dim, self.unit_index)
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.dim, i)
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "element of length {} in a {}-dimensional algebra",
                x.dim(),
                self.dim
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.multiply_unchecked(x, y))
    }

    fn multiply_unchecked(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.dim);
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out.coords[k] += &c * m;
                    }
                }
            }
        }
        out
    }

    pub fn conjugate(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement { coords: self.conj.mul_vec(&x.coords).expect("matching dimension") }
    }

    /// Unit coefficient of `x x̄`.
    pub fn norm(&self, x: &AlgebraElement) -> Scalar {
        self.multiply_unchecked(x, &self.conjugate(x)).coords[self.unit_index].clone()
    }

    /// The polarized norm `⟨x, y⟩`.
    pub fn inner(&self, x: &AlgebraElement, y: &AlgebraElement) -> Scalar {
        let gx = self.norm.matrix().mul_vec(&y.coords).expect("matching dimension");
        x.coords.iter().zip(&gx).map(|(a, b)| a * b).sum()
    }

    /// Gram matrix of the norm on the orthogonal complement of the unit.
    pub fn imaginary_norm(&self) -> SymmetricMatrix {
        let row = Matrix::from_fn(1, self.dim, |_, j| self.norm.matrix()[(self.unit_index, j)].clone());
        let basis = row.kernel();
        let p = Matrix::from_fn(self.dim, basis.len(), |i, j| basis[j][i].clone());
        self.norm.congruent(&p).expect("compatible shapes")
    }

    /// `true` iff `g(unit) = unit` and `g(e_i e_j) = g(e_i) g(e_j)` for all
    /// basis pairs. Column `j` of `g` is the image of `e_j`.
    pub fn is_automorphism(&self, g: &Matrix) -> bool {
        if g.rows() != self.dim || g.cols() != self.dim {
            return false;
        }
        let image = |x: &AlgebraElement| AlgebraElement { coords: g.mul_vec(&x.coords).expect("shape checked") };
        if image(&self.unit()) != self.unit() {
            return false;
        }
        let imgs: Vec<AlgebraElement> = (0..self.dim).map(|i| image(&self.basis(i))).collect();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let lhs = image(&AlgebraElement { coords: self.mult[i][j].clone() });
                lhs == self.multiply_unchecked(&imgs[i], &imgs[j])
            })
        })
    }

    /// The alternating form `(a, b, c) ↦ ⟨ab, c⟩` on seven imaginary
    /// elements, written in the dual of the given basis.
    pub fn triple_form(&self, basis: &[AlgebraElement]) -> Result<KForm> {
        if self.dim != 8 || basis.len() != 7 {
            return Err(Error::DimensionMismatch(format!(
                "triple form needs 7 elements of an 8-dimensional algebra, got {} in dimension {}",
                basis.len(),
                self.dim
            )));
        }
        for (n, b) in basis.iter().enumerate() {
            self.check(b)?;
            if !self.inner(b, &self.unit()).is_zero() {
                return Err(Error::NotImaginary(n + 1));
            }
        }
        let mut w = vec![vec![vec![Scalar::zero(); 7]; 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                let ab = self.multiply_unchecked(&basis[i], &basis[j]);
                for k in 0..7 {
                    w[i][j][k] = self.inner(&ab, &basis[k]);
                }
            }
        }
        let mut terms = Vec::new();
        for i in 0..7 {
            for j in 0..7 {
                for k in 0..7 {
                    let c = &w[i][j][k];
                    let alternating = c == &-w[j][i][k].clone()
                        && c == &-w[i][k][j].clone()
                        && c == &-w[k][j][i].clone();
                    if !alternating {
                        return Err(Error::NotAlternating);
                    }
                    if i < j && j < k {
                        terms.push((vec![i + 1, j + 1, k + 1], c.clone()));
                    }
                }
            }
        }
        KForm::from_terms(3, terms)
    }

    /// The elements `b_1, …, b_7` of `[i, j, k, e, ie, je, ke]` computed
    /// inside the algebra, where `i, j, k` are basis elements 1–3 and `e` is
    /// basis element 4 (the unit of the second summand of a double).
    pub fn product_basis(&self) -> Result<Vec<AlgebraElement>> {
        if self.dim != 8 {
            return Err(Error::DimensionMismatch(format!("dimension {} is not 8", self.dim)));
        }
        let e = self.basis(4);
        let mut out: Vec<AlgebraElement> = (1..4).map(|i| self.basis(i)).collect();
        out.push(e.clone());
        for i in 1..4 {
            out.push(self.multiply_unchecked(&self.basis(i), &e));
        }
        Ok(out)
    }

    /// Elements picked from the table basis by index.
    pub fn basis_from_indices(&self, indices: &[usize]) -> Vec<AlgebraElement> {
        indices.iter().map(|&i| self.basis(i)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let fmt_m = |m: &Matrix| -> Vec<Vec<String>> {
            (0..m.rows()).map(|r| m.row(r).iter().map(format_scalar).collect()).collect()
        };
        json!({
            "kind": self.kind.name(),
            "dim": self.dim,
            "unit_index": self.unit_index,
            "mult": self.mult.iter().map(|row| row.iter().map(|v| v.iter().map(format_scalar).collect::<Vec<_>>()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "conj": fmt_m(&self.conj),
            "norm": fmt_m(self.norm.matrix()),
        })
    }

    /// Basis products as `(index, ±1)` when every product of basis elements
    /// is a signed basis element.
    fn monomial_table(&self) -> Option<Vec<Vec<(usize, i8)>>> {
        let one = Scalar::one();
        let mut out = vec![vec![(0, 0i8); self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let nz: Vec<usize> = (0..self.dim).filter(|&k| !self.mult[i][j][k].is_zero()).collect();
                let [k] = nz[..] else { return None };
                let c = &self.mult[i][j][k];
                out[i][j] = if *c == one {
                    (k, 1)
                } else if *c == -one.clone() {
                    (k, -1)
                } else {
                    return None;
                };
            }
        }
        Some(out)
    }
}

/// Searches for an algebra isomorphism `a → b` that sends each basis element
/// of `a` to a signed basis element of `b`. Returns the matrix (column `j` is
/// the image of `e_j`) of the first one found in lexicographic order of
/// `(target, sign)` choices.
pub fn find_signed_isomorphism(a: &AlgebraTable, b: &AlgebraTable) -> Option<Matrix> {
    if a.dim != b.dim {
        return None;
    }
    let (ta, tb) = (a.monomial_table()?, b.monomial_table()?);
    let n = a.dim;
    let na: Vec<Scalar> = (0..n).map(|i| a.norm.matrix()[(i, i)].clone()).collect();
    let nb: Vec<Scalar> = (0..n).map(|i| b.norm.matrix()[(i, i)].clone()).collect();

    let mut image: Vec<Option<(usize, i8)>> = vec![None; n];
    image[a.unit_index] = Some((b.unit_index, 1));
    let mut used = vec![false; n];
    used[b.unit_index] = true;

    fn consistent(ta: &[Vec<(usize, i8)>], tb: &[Vec<(usize, i8)>], image: &[Option<(usize, i8)>]) -> bool {
        for (i, ii) in image.iter().enumerate() {
            let Some((pi, si)) = ii else { continue };
            for (j, jj) in image.iter().enumerate() {
                let Some((pj, sj)) = jj else { continue };
                let (k, sk) = ta[i][j];
                let Some((pk, s_img)) = image[k] else { continue };
                let (m, sm) = tb[*pi][*pj];
                if m != pk || si * sj * sm != sk * s_img {
                    return false;
                }
            }
        }
        true
    }

    type Context<'a> = (&'a [Vec<(usize, i8)>], &'a [Vec<(usize, i8)>], &'a [Scalar], &'a [Scalar]);

    fn go(
        idx: usize,
        ctx: Context<'_>,
        image: &mut Vec<Option<(usize, i8)>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = image.len();
        if idx == n {
            return true;
        }
        if image[idx].is_some() {
            return go(idx + 1, ctx, image, used);
        }
        let (ta, tb, na, nb) = ctx;
        for t in 0..n {
            if used[t] || na[idx] != nb[t] {
                continue;
            }
            for s in [1i8, -1] {
                image[idx] = Some((t, s));
                used[t] = true;
                if consistent(ta, tb, image) && go(idx + 1, ctx, image, used) {
                    return true;
                }
                used[t] = false;
                image[idx] = None;
            }
        }
        false
    }

    if !go(0, (&ta, &tb, &na, &nb), &mut image, &mut used) {
        return None;
    }
    let mut m = Matrix::zeros(n, n);
    for (j, im) in image.iter().enumerate() {
        let (t, s) = im.expect("complete assignment");
        m[(t, j)] = int(s.into());
    }
    Some(m)
}

/// Basis of `O` read as `i, j, k, e, ie, je, ke`; gives the standard `G₂`
/// 3-form.
pub const OCTONION_BASIS: [usize; 7] = [1, 2, 3, 4, 5, 6, 7];

/// The interleaved basis `i, e, ie, j, k, je, ke` of a Cayley–Dickson double.
pub const INTERLEAVED_BASIS: [usize; 7] = [1, 4, 5, 2, 3, 6, 7];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{ratio, Signature};

    fn el(xs: &[i64]) -> AlgebraElement {
        AlgebraElement::from_ints(xs)
    }

    #[test]
    fn dimensions() {
        let dims: Vec<usize> = AlgebraKind::ALL.iter().map(|&k| build_algebra(k).dim()).collect();
        assert_eq!(dims, vec![1, 2, 4, 4, 8, 8, 8]);
    }

    #[test]
    fn complex_unit_squares_to_minus_one() {
        let c = build_algebra(AlgebraKind::C);
        assert_eq!(c.multiply(&el(&[0, 1]), &el(&[0, 1])).unwrap(), el(&[-1, 0]));
    }

    #[test]
    fn quaternion_relations() {
        let h = build_algebra(AlgebraKind::H);
        let (i, j, k) = (h.basis(1), h.basis(2), h.basis(3));
        assert_eq!(h.multiply(&i, &i).unwrap(), el(&[-1, 0, 0, 0]));
        assert_eq!(h.multiply(&i, &j).unwrap(), k);
        assert_eq!(h.multiply(&j, &k).unwrap(), i);
        assert_eq!(h.multiply(&k, &i).unwrap(), j);
    }

    #[test]
    fn split_quaternion_relations() {
        let hs = build_algebra(AlgebraKind::Hsplit);
        let (i, j, k) = (hs.basis(1), hs.basis(2), hs.basis(3));
        assert_eq!(hs.multiply(&i, &j).unwrap(), k);
        assert_eq!(hs.multiply(&j, &j).unwrap(), el(&[1, 0, 0, 0]));
        assert_eq!(hs.multiply(&i, &i).unwrap(), el(&[-1, 0, 0, 0]));
        assert_eq!(hs.norm(&j), int(-1));
        assert_eq!(hs.norm(&i), int(1));
        let x = el(&[1, 2, 3, 4]);
        // norm is the determinant of [[1+4, 2+3], [3-2, 1-4]]
        assert_eq!(hs.norm(&x), int(-15 - 5));
    }

    #[test]
    fn octonion_cd_product() {
        let o = build_algebra(AlgebraKind::O);
        // (i,0)(0,1) = (0, i)
        assert_eq!(o.multiply(&o.basis(1), &o.basis(4)).unwrap(), o.basis(5));
        assert_eq!(o.conjugate(&o.unit()), o.unit());
        assert_eq!(o.norm(&o.basis(1)), int(1));
    }

    #[test]
    fn norm_signatures() {
        let sig = |k| {
            let t = build_algebra(k);
            (t.norm_form().signature(), t.imaginary_norm().signature())
        };
        let s = |pos, neg| Signature { pos, neg, null: 0 };
        assert_eq!(sig(AlgebraKind::O), (s(8, 0), s(7, 0)));
        assert_eq!(sig(AlgebraKind::Osplit), (s(4, 4), s(3, 4)));
        assert_eq!(sig(AlgebraKind::OsplitFromHsplit), (s(4, 4), s(3, 4)));
        assert_eq!(sig(AlgebraKind::Hsplit), (s(2, 2), s(1, 2)));
    }

    #[test]
    fn hsplit_matrix_bridge() {
        let k = Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]).unwrap();
        assert_eq!(hsplit_from_matrix(&k).unwrap(), el(&[0, 0, 0, 1]));
        assert_eq!(table(AlgebraKind::H).dim(), 4);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let h = build_algebra(AlgebraKind::H);
        assert!(h.multiply(&el(&[1, 0]), &h.unit()).is_err());
    }

    #[test]
    fn unknown_kind() {
        assert!("sedenion".parse::<AlgebraKind>().is_err());
        assert_eq!("osplit_from_hsplit".parse::<AlgebraKind>().unwrap(), AlgebraKind::OsplitFromHsplit);
    }

    #[test]
    fn triple_form_rejects_unit() {
        let o = build_algebra(AlgebraKind::O);
        let mut basis = o.basis_from_indices(&OCTONION_BASIS);
        basis[2] = basis[2].add(&o.unit());
        assert!(matches!(o.triple_form(&basis), Err(Error::NotImaginary(3))));
    }

    #[test]
    fn automorphism_checks() {
        let o = build_algebra(AlgebraKind::O);
        assert!(o.is_automorphism(&Matrix::identity(8)));
        let mut flip = Matrix::identity(8);
        flip[(1, 1)] = int(-1);
        assert!(!o.is_automorphism(&flip));
    }

    #[test]
    fn split_presentations_are_isomorphic() {
        let a = build_algebra(AlgebraKind::Osplit);
        let b = build_algebra(AlgebraKind::OsplitFromHsplit);
        let g = find_signed_isomorphism(&a, &b).expect("isomorphism exists");
        // g(xy) = g(x) g(y) checked on a non-basis pair too
        let x = el(&[1, 2, 0, -1, 3, 0, 1, 2]);
        let y = el(&[0, 1, -2, 1, 1, 1, 0, -3]);
        let gx = AlgebraElement { coords: g.mul_vec(&x.coords).unwrap() };
        let gy = AlgebraElement { coords: g.mul_vec(&y.coords).unwrap() };
        let gxy = AlgebraElement { coords: g.mul_vec(&a.multiply(&x, &y).unwrap().coords).unwrap() };
        assert_eq!(gxy, b.multiply(&gx, &gy).unwrap());
        assert!(find_signed_isomorphism(&a, &build_algebra(AlgebraKind::O)).is_none());
    }

    #[test]
    fn inner_is_polarized_norm() {
        let o = build_algebra(AlgebraKind::Osplit);
        let x = el(&[1, 2, 0, -1, 3, 0, 1, 2]);
        assert_eq!(o.inner(&x, &x), o.norm(&x));
        let y = x.scale(&ratio(1, 2));
        assert_eq!(o.norm(&y), o.norm(&x) * ratio(1, 4));
    }

    #[test]
    fn json_dump_has_shape() {
        let v = build_algebra(AlgebraKind::H).to_json();
        assert_eq!(v["dim"], 4);
        assert_eq!(v["mult"][1][2][3], "1");
    }
}
