//! Explicit subgroup embeddings into the stabilizers, and their
//! infinitesimal generators.
//!
//! Coordinates on `V`:
//!
//! * octonionic: `e₁, e₂, e₃ ↔ i, j, k` in `Im H` and `e₄, …, e₇ ↔ 1, i, j, k`
//!   in the second summand of `O = H ⊕ H`;
//! * split: the same matrix conjugated by `diag(1, −1, −1, 1, 1, 1, 1)`, the
//!   signed change of basis carrying the split form built from `H ⊕ H` to
//!   `ω₅`;
//! * split-quaternionic (for `ω₂′`): `f₁, f₂, f₃ ↔ i, j, k` in `Im H̃` and
//!   `f₄, …, f₇ ↔ 1, i, j, k` in the second summand.

use num_traits::{One, Zero};

use crate::algebras::{hsplit_from_matrix, table, AlgebraElement, AlgebraKind};
use crate::exterior::{int, LinearMap, Matrix, Scalar, DIM};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identification {
    Octonion,
    Split,
}

fn quaternion_check(x: &AlgebraElement, what: &str) -> Result<()> {
    if x.dim() != 4 {
        return Err(Error::DimensionMismatch(format!("{what} has {} coordinates", x.dim())));
    }
    Ok(())
}

fn unit_quaternion_check(x: &AlgebraElement, what: &str) -> Result<()> {
    quaternion_check(x, what)?;
    if !table(AlgebraKind::H).norm(x).is_one() {
        return Err(Error::Constraint(format!("{what} is not a unit quaternion")));
    }
    Ok(())
}

/// The 7×7 matrix of `(p, q) ↦ (left(p), right(q))` where `left` preserves
/// the imaginary part and `right` acts on the whole second summand.
fn block_map(
    left: impl Fn(&AlgebraElement) -> AlgebraElement,
    right: impl Fn(&AlgebraElement) -> AlgebraElement,
) -> LinearMap {
    let mut m = Matrix::zeros(DIM, DIM);
    for c in 0..3 {
        let img = left(&AlgebraElement::basis(4, c + 1));
        for r in 0..3 {
            m[(r, c)] = img.coords[r + 1].clone();
        }
    }
    for c in 0..4 {
        let img = right(&AlgebraElement::basis(4, c));
        for r in 0..4 {
            m[(r + 3, c + 3)] = img.coords[r].clone();
        }
    }
    LinearMap::from_matrix(m).expect("7x7")
}

fn split_sign() -> LinearMap {
    LinearMap::from_int_rows(std::array::from_fn(|i| {
        std::array::from_fn(|j| if i != j { 0 } else if i == 1 || i == 2 { -1 } else { 1 })
    }))
}

fn conjugate_by_split_sign(g: &LinearMap) -> LinearMap {
    let d = split_sign();
    d.compose(g).compose(&d)
}

/// `(p, q) ↦ (a p a⁻¹, b q a⁻¹)` for unit quaternions `a, b`.
pub fn embed_so4(a: &AlgebraElement, b: &AlgebraElement, ident: Identification) -> Result<LinearMap> {
    unit_quaternion_check(a, "a")?;
    unit_quaternion_check(b, "b")?;
    let h = table(AlgebraKind::H);
    let abar = h.conjugate(a);
    let mul = |x: &AlgebraElement, y: &AlgebraElement| h.multiply(x, y).expect("quaternions");
    let g = block_map(|p| mul(&mul(a, p), &abar), |q| mul(&mul(b, q), &abar));
    Ok(match ident {
        Identification::Octonion => g,
        Identification::Split => conjugate_by_split_sign(&g),
    })
}

/// Derivative of [`embed_so4`] at the identity along `a = 1 + εx`,
/// `b = 1 + εy` for imaginary `x, y`: `(p, q) ↦ (xp − px, yq − qx)`.
pub fn so4_generator(x: &AlgebraElement, y: &AlgebraElement, ident: Identification) -> Result<LinearMap> {
    quaternion_check(x, "x")?;
    quaternion_check(y, "y")?;
    if !x.coords[0].is_zero() || !y.coords[0].is_zero() {
        return Err(Error::Constraint("generators must be imaginary quaternions".into()));
    }
    let h = table(AlgebraKind::H);
    let mul = |u: &AlgebraElement, v: &AlgebraElement| h.multiply(u, v).expect("quaternions");
    let g = block_map(|p| mul(x, p).sub(&mul(p, x)), |q| mul(y, q).sub(&mul(q, x)));
    Ok(match ident {
        Identification::Octonion => g,
        Identification::Split => conjugate_by_split_sign(&g),
    })
}

fn det2(m: &Matrix) -> Result<Scalar> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch(format!("{}x{} is not 2x2", m.rows(), m.cols())));
    }
    m.det()
}

/// `(p, q) ↦ (a p a⁻¹, a q b⁻¹)` on `Im H̃ ⊕ H̃` for 2×2 matrices with
/// `det a, det b = ±1` and `det(ab) = 1`.
pub fn embed_sl2pair(a: &Matrix, b: &Matrix) -> Result<LinearMap> {
    let (da, db) = (det2(a)?, det2(b)?);
    let pm1 = |d: &Scalar| d.is_one() || *d == -Scalar::one();
    if !pm1(&da) || !pm1(&db) || !(&da * &db).is_one() {
        return Err(Error::Constraint(format!("need det a, det b = ±1 and det(ab) = 1, got {da} and {db}")));
    }
    let hs = table(AlgebraKind::Hsplit);
    let qa = hsplit_from_matrix(a)?;
    let qa_inv = hsplit_from_matrix(&a.inverse()?)?;
    let qb_inv = hsplit_from_matrix(&b.inverse()?)?;
    let mul = |x: &AlgebraElement, y: &AlgebraElement| hs.multiply(x, y).expect("split quaternions");
    Ok(block_map(|p| mul(&mul(&qa, p), &qa_inv), |q| mul(&mul(&qa, q), &qb_inv)))
}

/// Derivative of [`embed_sl2pair`] along `a = 1 + εx`, `b = 1 + εy` for
/// traceless `x, y`: `(p, q) ↦ (xp − px, xq − qy)`.
pub fn sl2_generator(x: &Matrix, y: &Matrix) -> Result<LinearMap> {
    det2(x)?;
    det2(y)?;
    if !(&x[(0, 0)] + &x[(1, 1)]).is_zero() || !(&y[(0, 0)] + &y[(1, 1)]).is_zero() {
        return Err(Error::Constraint("generators must be traceless".into()));
    }
    let hs = table(AlgebraKind::Hsplit);
    let (qx, qy) = (hsplit_from_matrix(x)?, hsplit_from_matrix(y)?);
    let mul = |u: &AlgebraElement, v: &AlgebraElement| hs.multiply(u, v).expect("split quaternions");
    Ok(block_map(|p| mul(&qx, p).sub(&mul(p, &qx)), |q| mul(&qx, q).sub(&mul(q, &qy))))
}

fn block_diagonal(blocks: &[Matrix]) -> LinearMap {
    let mut m = Matrix::zeros(DIM, DIM);
    let mut off = 0;
    for b in blocks {
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                m[(off + r, off + c)] = b[(r, c)].clone();
            }
        }
        off += b.rows();
    }
    assert_eq!(off, DIM, "blocks must fill V");
    LinearMap::from_matrix(m).expect("7x7")
}

fn scalar_block(s: Scalar) -> Matrix {
    Matrix::from_fn(1, 1, |_, _| s.clone())
}

/// `diag(1, A, A)` on `⟨e₁⟩ ⊕ ⟨e₂, e₃, e₄⟩ ⊕ ⟨e₅, e₆, e₇⟩` for `A ∈ SO(3)`.
pub fn embed_so3_33(a: &Matrix) -> Result<LinearMap> {
    if a.rows() != 3 || a.cols() != 3 {
        return Err(Error::DimensionMismatch(format!("{}x{} is not 3x3", a.rows(), a.cols())));
    }
    if a.transpose().mul(a)? != Matrix::identity(3) || !a.det()?.is_one() {
        return Err(Error::Constraint("A must be orthogonal with determinant 1".into()));
    }
    Ok(block_diagonal(&[scalar_block(int(1)), a.clone(), a.clone()]))
}

/// `diag(0, S, S)` for an antisymmetric 3×3 `S`: the derivative of
/// [`embed_so3_33`].
pub fn so3_generator(s: &Matrix) -> Result<LinearMap> {
    if s.rows() != 3 || s.cols() != 3 || s.add(&s.transpose())? != Matrix::zeros(3, 3) {
        return Err(Error::Constraint("S must be an antisymmetric 3x3 matrix".into()));
    }
    Ok(block_diagonal(&[scalar_block(int(0)), s.clone(), s.clone()]))
}

/// `diag(det a⁻¹, det b⁻¹, a, b, det(ab))` on
/// `⟨e₁⟩ ⊕ ⟨e₂⟩ ⊕ ⟨e₃, e₄⟩ ⊕ ⟨e₅, e₆⟩ ⊕ ⟨e₇⟩`.
pub fn embed_gl2pair(a: &Matrix, b: &Matrix) -> Result<LinearMap> {
    let (da, db) = (det2(a)?, det2(b)?);
    if da.is_zero() || db.is_zero() {
        return Err(Error::Constraint("a and b must be invertible".into()));
    }
    Ok(block_diagonal(&[
        scalar_block(da.recip()),
        scalar_block(db.recip()),
        a.clone(),
        b.clone(),
        scalar_block(&da * &db),
    ]))
}

/// Derivative of [`embed_gl2pair`] at the identity in the direction `(x, y)`.
pub fn gl2_generator(x: &Matrix, y: &Matrix) -> Result<LinearMap> {
    det2(x)?;
    det2(y)?;
    let tx = &x[(0, 0)] + &x[(1, 1)];
    let ty = &y[(0, 0)] + &y[(1, 1)];
    Ok(block_diagonal(&[
        scalar_block(-tx.clone()),
        scalar_block(-ty.clone()),
        x.clone(),
        y.clone(),
        scalar_block(tx + ty),
    ]))
}

/// The rotation `[[c, −s], [s, c]]`.
pub fn rotation(c: &Scalar, s: &Scalar) -> Matrix {
    Matrix::from_rows(vec![vec![c.clone(), -s.clone()], vec![s.clone(), c.clone()]]).expect("2x2")
}

/// The block matrix `diag(1, R(−2α), R(α+β), R(α−β))` of the identity
/// component of the torus, given `(cos, sin)` of `α` and of `β`, returned in
/// `f`-coordinates. The blocks act on the oriented planes `(f₂, f₃)`,
/// `(f₇, f₆)` and `(f₅, f₄)`; with that reading it equals
/// `embed_sl2pair(R(α), R(β))`.
pub fn torus_element(alpha: (&Scalar, &Scalar), beta: (&Scalar, &Scalar)) -> LinearMap {
    let (ca, sa) = alpha;
    let (cb, sb) = beta;
    let two = int(2);
    let c2a = ca * ca - sa * sa;
    let s2a = &two * ca * sa;
    let cp = ca * cb - sa * sb;
    let sp = sa * cb + ca * sb;
    let cm = ca * cb + sa * sb;
    let sm = sa * cb - ca * sb;
    // reversing a plane's orientation negates its angle
    block_diagonal(&[
        scalar_block(int(1)),
        rotation(&c2a, &-s2a),
        rotation(&cm, &-sm),
        rotation(&cp, &-sp),
    ])
}
