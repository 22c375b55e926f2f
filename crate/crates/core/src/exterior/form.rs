use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::scalar::{format_scalar, Scalar};
use crate::{Error, Result};

/// Dimension of the underlying vector space.
pub const DIM: usize = 7;

/// A strictly increasing tuple of indices in `1..=7`, stored as a bit mask
/// (bit `i - 1` set for index `i`). Ordering is lexicographic on the tuple.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u8);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    pub fn new(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u8;
        let mut last = 0;
        for &i in indices {
            if !(1..=DIM).contains(&i) {
                return Err(Error::InvalidIndex(format!("index {i} outside 1..={DIM}")));
            }
            if i <= last {
                return Err(Error::InvalidIndex(format!("{indices:?} is not strictly increasing")));
            }
            last = i;
            mask |= 1 << (i - 1);
        }
        Ok(Self(mask))
    }

    pub fn from_mask(mask: u8) -> Self {
        debug_assert!(mask < (1 << DIM));
        Self(mask)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    /// The 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (1..=DIM).filter(|&i| self.contains(i)).collect()
    }

    /// All multi-indices of length `k`, in lexicographic order.
    pub fn all(k: usize) -> Vec<MultiIndex> {
        let mut v: Vec<MultiIndex> = (0u8..1 << DIM)
            .filter(|m| m.count_ones() as usize == k)
            .map(MultiIndex)
            .collect();
        v.sort();
        v
    }

    /// `(sign, union)` with `α_self ∧ α_other = sign · α_union`, or `None`
    /// when the two share an index.
    fn wedge(self, other: MultiIndex) -> Option<(bool, MultiIndex)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // Each index of `other` has to move past the larger indices of `self`.
        let mut inversions = 0;
        for j in 0..DIM {
            if other.0 & (1 << j) != 0 {
                inversions += (self.0 >> (j + 1)).count_ones();
            }
        }
        Some((inversions % 2 == 1, MultiIndex(self.0 | other.0)))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices().cmp(&other.indices())
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}

/// An alternating k-form on `V`, as a sparse map from basis monomials
/// `α_{i1} ∧ … ∧ α_{ik}` to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KForm {
    degree: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl KForm {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut f = Self::zero(0);
        f.add_term(MultiIndex::EMPTY, c);
        f
    }

    /// The basis covector `α_i`.
    pub fn alpha(i: usize) -> Self {
        Self::monomial(&[i], Scalar::one()).expect("valid index")
    }

    pub fn monomial(indices: &[usize], c: Scalar) -> Result<Self> {
        let idx = MultiIndex::new(indices)?;
        let mut f = Self::zero(idx.degree());
        f.add_term(idx, c);
        Ok(f)
    }

    /// Builds a form from `(indices, coefficient)` pairs; indices must be
    /// strictly increasing and all of length `degree`. Repeated keys add up.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        if degree > DIM {
            return Err(Error::InvalidIndex(format!("degree {degree} exceeds {DIM}")));
        }
        let mut f = Self::zero(degree);
        for (idx, c) in terms {
            let m = MultiIndex::new(&idx)?;
            if m.degree() != degree {
                return Err(Error::Degree { expected: degree, found: m.degree() });
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    /// Shorthand for forms with integer coefficients.
    pub fn from_int_terms(degree: usize, terms: &[(&[usize], i64)]) -> Result<Self> {
        Self::from_terms(
            degree,
            terms.iter().map(|(idx, c)| (idx.to_vec(), Scalar::from_integer((*c).into()))),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, idx: MultiIndex) -> Scalar {
        self.terms.get(&idx).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient on an arbitrary (possibly unsorted or repeating) index
    /// tuple, i.e. `self(e_{i1}, …, e_{ik})`.
    pub fn component(&self, indices: &[usize]) -> Scalar {
        let mut sorted = indices.to_vec();
        let mut odd = false;
        // insertion sort, tracking the permutation parity
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Scalar::zero();
        }
        match MultiIndex::new(&sorted) {
            Ok(m) => {
                let c = self.coefficient(m);
                if odd {
                    -c
                } else {
                    c
                }
            }
            Err(_) => Scalar::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &Scalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    fn add_term(&mut self, idx: MultiIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn scale(&self, s: &Scalar) -> KForm {
        let mut out = KForm::zero(self.degree);
        for (k, v) in &self.terms {
            out.add_term(*k, v * s);
        }
        out
    }

    fn combine(&self, rhs: &KForm, negate: bool) -> Result<KForm> {
        if self.degree != rhs.degree {
            return Err(Error::Degree { expected: self.degree, found: rhs.degree });
        }
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, if negate { -v.clone() } else { v.clone() });
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &KForm) -> Result<KForm> {
        self.combine(rhs, false)
    }

    pub fn try_sub(&self, rhs: &KForm) -> Result<KForm> {
        self.combine(rhs, true)
    }

    /// `self(v_1, …, v_k)`.
    pub fn evaluate(&self, vectors: &[Vector]) -> Result<Scalar> {
        if vectors.len() != self.degree {
            return Err(Error::DimensionMismatch(format!(
                "{}-form evaluated on {} vectors",
                self.degree,
                vectors.len()
            )));
        }
        let mut total = Scalar::zero();
        for (idx, c) in &self.terms {
            let rows = idx.indices();
            let minor = Matrix::from_fn(self.degree, self.degree, |r, s| vectors[s].coords[rows[r] - 1].clone());
            total += c * small_det(&minor);
        }
        Ok(total)
    }

    pub fn wedge(&self, rhs: &KForm) -> KForm {
        wedge(self, rhs)
    }
}

/// Panic-free addition for forms of equal degree.
impl Add for &KForm {
    type Output = KForm;

    fn add(self, rhs: &KForm) -> KForm {
        self.try_add(rhs).expect("adding forms of different degree")
    }
}

impl Sub for &KForm {
    type Output = KForm;

    fn sub(self, rhs: &KForm) -> KForm {
        self.try_sub(rhs).expect("subtracting forms of different degree")
    }
}

impl Neg for &KForm {
    type Output = KForm;

    fn neg(self) -> KForm {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.terms.iter().enumerate() {
            let neg = *c < Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = idx
                .indices()
                .iter()
                .map(|i| format!("a{i}"))
                .collect::<Vec<_>>()
                .join("^");
            if mono.is_empty() {
                write!(f, "{}", format_scalar(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_scalar(&mag))?;
            }
        }
        Ok(())
    }
}

/// `a ∧ b`. Degrees adding past 7 give the zero form of that degree.
pub fn wedge(a: &KForm, b: &KForm) -> KForm {
    let mut out = KForm::zero(a.degree + b.degree);
    if out.degree > DIM {
        return out;
    }
    for (ia, ca) in &a.terms {
        for (ib, cb) in &b.terms {
            if let Some((neg, idx)) = ia.wedge(*ib) {
                let c = ca * cb;
                out.add_term(idx, if neg { -c } else { c });
            }
        }
    }
    out
}

/// `i_v a = a(v, -, …, -)`: contraction into the first slot.
pub fn interior(v: &Vector, a: &KForm) -> Result<KForm> {
    if a.degree == 0 {
        return Err(Error::ContractScalar);
    }
    let mut out = KForm::zero(a.degree - 1);
    for (idx, c) in &a.terms {
        let mut before = 0;
        for i in 1..=DIM {
            if !idx.contains(i) {
                continue;
            }
            let vi = &v.coords[i - 1];
            if !vi.is_zero() {
                let rest = MultiIndex(idx.0 & !(1 << (i - 1)));
                let t = c * vi;
                out.add_term(rest, if before % 2 == 1 { -t } else { t });
            }
            before += 1;
        }
    }
    Ok(out)
}

/// `(g* a)(v_1, …, v_k) = a(g v_1, …, g v_k)`. The map may be singular.
pub fn pullback(g: &LinearMap, a: &KForm) -> KForm {
    let k = a.degree;
    let mut out = KForm::zero(k);
    if k == 0 {
        return a.clone();
    }
    let targets = MultiIndex::all(k);
    for (idx, c) in &a.terms {
        let rows = idx.indices();
        for &j in &targets {
            let cols = j.indices();
            let minor = Matrix::from_fn(k, k, |r, s| g.0[(rows[r] - 1, cols[s] - 1)].clone());
            let d = small_det(&minor);
            if !d.is_zero() {
                out.add_term(j, c * d);
            }
        }
    }
    out
}

/// Leibniz expansion for the tiny minors used here, Bareiss otherwise.
fn small_det(m: &Matrix) -> Scalar {
    match m.rows() {
        0 => Scalar::one(),
        1 => m[(0, 0)].clone(),
        2 => &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)],
        3 => {
            &m[(0, 0)] * (&m[(1, 1)] * &m[(2, 2)] - &m[(1, 2)] * &m[(2, 1)])
                - &m[(0, 1)] * (&m[(1, 0)] * &m[(2, 2)] - &m[(1, 2)] * &m[(2, 0)])
                + &m[(0, 2)] * (&m[(1, 0)] * &m[(2, 1)] - &m[(1, 1)] * &m[(2, 0)])
        }
        _ => m.det().expect("square minor"),
    }
}

/// A vector of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    pub coords: [Scalar; DIM],
}

impl Vector {
    pub fn zero() -> Self {
        Self { coords: std::array::from_fn(|_| Scalar::zero()) }
    }

    /// The standard basis vector `e_i`, `i` in `1..=7`.
    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.coords[i - 1] = Scalar::one();
        v
    }

    pub fn from_slice(x: &[Scalar]) -> Result<Self> {
        if x.len() != DIM {
            return Err(Error::DimensionMismatch(format!("vector of length {}", x.len())));
        }
        Ok(Self { coords: std::array::from_fn(|i| x[i].clone()) })
    }

    pub fn from_ints(x: [i64; DIM]) -> Self {
        Self { coords: x.map(|v| Scalar::from_integer(v.into())) }
    }

    pub fn add(&self, rhs: &Vector) -> Vector {
        Vector { coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]) }
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector { coords: std::array::from_fn(|i| &self.coords[i] * s) }
    }
}

/// An endomorphism of `V`; column `j` is the image of `e_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap(Matrix);

impl LinearMap {
    pub fn identity() -> Self {
        Self(Matrix::identity(DIM))
    }

    pub fn from_matrix(m: Matrix) -> Result<Self> {
        if m.rows() != DIM || m.cols() != DIM {
            return Err(Error::DimensionMismatch(format!("{}x{} is not a map of V", m.rows(), m.cols())));
        }
        Ok(Self(m))
    }

    /// From the images of `e_1, …, e_7`.
    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        if cols.len() != DIM {
            return Err(Error::DimensionMismatch(format!("{} columns", cols.len())));
        }
        Ok(Self(Matrix::from_fn(DIM, DIM, |i, j| cols[j].coords[i].clone())))
    }

    pub fn from_int_rows(rows: [[i64; DIM]; DIM]) -> Self {
        Self(Matrix::from_fn(DIM, DIM, |i, j| Scalar::from_integer(rows[i][j].into())))
    }

    /// A signed permutation: `e_j ↦ sign_j · e_{target_j}` for `j = 1..=7`,
    /// given as `(target, sign)` pairs with 1-based targets.
    pub fn signed_permutation(images: [(usize, i64); DIM]) -> Result<Self> {
        let mut seen = [false; DIM];
        let mut m = Matrix::zeros(DIM, DIM);
        for (j, &(t, s)) in images.iter().enumerate() {
            if !(1..=DIM).contains(&t) || seen[t - 1] || (s != 1 && s != -1) {
                return Err(Error::Constraint(format!("{images:?} is not a signed permutation")));
            }
            seen[t - 1] = true;
            m[(t - 1, j)] = Scalar::from_integer(s.into());
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.0[(i, j)]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector { coords: std::array::from_fn(|i| self.0[(i, j)].clone()) }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let out = self.0.mul_vec(&v.coords).expect("7x7 times 7");
        Vector { coords: std::array::from_fn(|i| out[i].clone()) }
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinearMap) -> LinearMap {
        LinearMap(self.0.mul(&rhs.0).expect("7x7 times 7x7"))
    }

    pub fn det(&self) -> Scalar {
        self.0.det().expect("square")
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        Ok(LinearMap(self.0.inverse()?))
    }

    pub fn transpose(&self) -> LinearMap {
        LinearMap(self.0.transpose())
    }

    /// `[self, rhs] = self∘rhs − rhs∘self`.
    pub fn bracket(&self, rhs: &LinearMap) -> LinearMap {
        let ab = self.0.mul(&rhs.0).expect("square");
        let ba = rhs.0.mul(&self.0).expect("square");
        LinearMap(ab.sub(&ba).expect("same shape"))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..DIM).all(|i| (i..DIM).all(|j| self.0[(i, j)] == -self.0[(j, i)].clone()))
    }

    /// Row-major flattening, entry `(i, j)` at `7 i + j`.
    pub fn flatten(&self) -> Vec<Scalar> {
        (0..DIM).flat_map(|i| (0..DIM).map(move |j| (i, j))).map(|ij| self.0[ij].clone()).collect()
    }

    pub fn from_flat(x: &[Scalar]) -> Result<Self> {
        if x.len() != DIM * DIM {
            return Err(Error::DimensionMismatch(format!("{} entries", x.len())));
        }
        Ok(Self(Matrix::from_fn(DIM, DIM, |i, j| x[DIM * i + j].clone())))
    }
}
