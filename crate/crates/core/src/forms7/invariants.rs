use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exterior::{interior, wedge, KForm, LinearMap, Matrix, MultiIndex, Scalar, SymmetricMatrix, Vector, DIM};
use crate::{Error, Result};

fn require_3form(w: &KForm) -> Result<()> {
    if w.degree() != 3 {
        return Err(Error::Degree { expected: 3, found: w.degree() });
    }
    Ok(())
}

/// The 21×7 matrix of `v ↦ i_v ω`; column `j` holds `i_{e_{j+1}} ω`.
fn contraction_matrix(w: &KForm) -> Matrix {
    let pairs = MultiIndex::all(2);
    let images: Vec<KForm> = (1..=DIM)
        .map(|j| interior(&Vector::basis(j), w).expect("degree 3"))
        .collect();
    Matrix::from_fn(pairs.len(), DIM, |r, c| images[c].coefficient(pairs[r]))
}

/// Rank of `v ↦ i_v ω`.
pub fn ms_rank(w: &KForm) -> Result<usize> {
    require_3form(w)?;
    Ok(contraction_matrix(w).rank())
}

pub fn is_multisymplectic(w: &KForm) -> Result<bool> {
    Ok(ms_rank(w)? == DIM)
}

/// `B(u, v)` with `i_u ω ∧ i_v ω ∧ ω = B(u, v) · α₁∧…∧α₇`.
pub fn b_form(w: &KForm) -> Result<SymmetricMatrix> {
    require_3form(w)?;
    let vol = MultiIndex::all(DIM)[0];
    let contractions: Vec<KForm> = (1..=DIM)
        .map(|j| interior(&Vector::basis(j), w).expect("degree 3"))
        .collect();
    let with_w: Vec<KForm> = contractions.iter().map(|c| wedge(c, w)).collect();
    let mut m = Matrix::zeros(DIM, DIM);
    for u in 0..DIM {
        for v in u..DIM {
            let c = wedge(&contractions[u], &with_w[v]).coefficient(vol);
            m[(u, v)] = c.clone();
            m[(v, u)] = c;
        }
    }
    SymmetricMatrix::new(m)
}

/// Rows of the linear system `ω(Au,v,w) + ω(u,Av,w) + ω(u,v,Aw) = 0` in the
/// 49 unknowns `A_ij` (flattened row-major, `A e_j = Σ_i A_ij e_i`).
fn derivation_matrix(w: &KForm) -> Matrix {
    let triples = MultiIndex::all(3);
    let mut m = Matrix::zeros(triples.len(), DIM * DIM);
    for (r, t) in triples.iter().enumerate() {
        let idx = t.indices();
        for slot in 0..3 {
            let a = idx[slot];
            for i in 1..=DIM {
                let mut args = idx.clone();
                args[slot] = i;
                let c = w.component(&args);
                if !c.is_zero() {
                    let col = (i - 1) * DIM + (a - 1);
                    m[(r, col)] = &m[(r, col)] + c;
                }
            }
        }
    }
    m
}

fn maps_from_kernel(kernel: Vec<Vec<Scalar>>) -> Vec<LinearMap> {
    kernel
        .into_iter()
        .map(|x| LinearMap::from_flat(&x).expect("49 entries"))
        .collect()
}

/// A basis of the Lie algebra of endomorphisms annihilating `ω`.
pub fn stabilizer_algebra(w: &KForm) -> Result<Vec<LinearMap>> {
    require_3form(w)?;
    Ok(maps_from_kernel(derivation_matrix(w).kernel()))
}

pub fn stab_dim(w: &KForm) -> Result<usize> {
    require_3form(w)?;
    Ok(DIM * DIM - derivation_matrix(w).rank())
}

/// `true` iff `A` annihilates `ω` infinitesimally.
pub fn in_stabilizer_algebra(a: &LinearMap, w: &KForm) -> Result<bool> {
    require_3form(w)?;
    let x = derivation_matrix(w).mul_vec(&a.flatten())?;
    Ok(x.iter().all(Zero::is_zero))
}

/// Whether the span of `basis` is closed under the commutator, tested by
/// projecting every bracket onto the span.
pub fn is_closed_under_bracket(basis: &[LinearMap]) -> bool {
    let rows: Vec<Vec<Scalar>> = basis.iter().map(LinearMap::flatten).collect();
    let span = match Matrix::from_rows(rows.clone()) {
        Ok(m) => m,
        Err(_) => return basis.is_empty(),
    };
    let r = span.rank();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            let mut with = rows.clone();
            with.push(a.bracket(b).flatten());
            if Matrix::from_rows(with).expect("rectangular").rank() != r {
                return false;
            }
        }
    }
    true
}

/// Dimension of `stab(ω) ∩ so(7)`. Depends on the representative, not just
/// the orbit.
pub fn compact_dim(w: &KForm) -> Result<usize> {
    require_3form(w)?;
    let mut anti = Matrix::zeros(DIM * (DIM + 1) / 2, DIM * DIM);
    let mut r = 0;
    for i in 0..DIM {
        for j in i..DIM {
            anti[(r, i * DIM + j)] = &anti[(r, i * DIM + j)] + Scalar::from_integer(1.into());
            anti[(r, j * DIM + i)] = &anti[(r, j * DIM + i)] + Scalar::from_integer(1.into());
            r += 1;
        }
    }
    let joint = derivation_matrix(w).stack(&anti)?;
    Ok(DIM * DIM - joint.rank())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantVector {
    pub ms_rank: usize,
    pub b_rank: usize,
    pub b_sig: (usize, usize),
    pub stab_dim: usize,
    pub compact_dim: usize,
}

/// The orbit-invariant part of [`InvariantVector`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantKey {
    pub ms_rank: usize,
    pub b_rank: usize,
    pub b_sig: (usize, usize),
    pub stab_dim: usize,
}

pub fn invariant_key(w: &KForm) -> Result<InvariantKey> {
    let b = b_form(w)?;
    let sig = b.signature();
    Ok(InvariantKey {
        ms_rank: ms_rank(w)?,
        b_rank: sig.pos + sig.neg,
        b_sig: sig.normalized(),
        stab_dim: stab_dim(w)?,
    })
}

pub fn invariant_vector(w: &KForm) -> Result<InvariantVector> {
    let k = invariant_key(w)?;
    Ok(InvariantVector {
        ms_rank: k.ms_rank,
        b_rank: k.b_rank,
        b_sig: k.b_sig,
        stab_dim: k.stab_dim,
        compact_dim: compact_dim(w)?,
    })
}

impl InvariantVector {
    pub fn key(&self) -> InvariantKey {
        InvariantKey {
            ms_rank: self.ms_rank,
            b_rank: self.b_rank,
            b_sig: self.b_sig,
            stab_dim: self.stab_dim,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::int;
    use crate::forms7::canonical::{omega, preferred};

    #[test]
    fn degenerate_three_form() {
        let w = KForm::from_int_terms(3, &[(&[1, 2, 3], 1)]).unwrap();
        assert!(!is_multisymplectic(&w).unwrap());
        assert!(b_form(&w).unwrap().matrix().is_zero());
    }

    #[test]
    fn wrong_degree() {
        let w = KForm::alpha(1);
        assert!(matches!(is_multisymplectic(&w), Err(Error::Degree { expected: 3, found: 1 })));
    }

    #[test]
    fn g2_stabilizer() {
        let w = omega(8).unwrap();
        let basis = stabilizer_algebra(&w).unwrap();
        assert_eq!(basis.len(), 14);
        assert!(basis.iter().all(|a| a.is_antisymmetric()));
        assert!(basis.iter().all(|a| in_stabilizer_algebra(a, &w).unwrap()));
        assert!(is_closed_under_bracket(&basis));
        assert_eq!(compact_dim(&w).unwrap(), 14);
    }

    #[test]
    fn b_form_of_omega8_is_definite() {
        let b = b_form(&omega(8).unwrap()).unwrap();
        // every diagonal entry is ±6 for the standard form
        let d = &b.matrix()[(0, 0)];
        assert!(*d == int(6) || *d == int(-6));
        assert_eq!(b.signature().normalized(), (7, 0));
    }

    #[test]
    fn invariant_table() {
        let want = [
            (7, 2, (1, 1), 18, 2),
            (7, 4, (2, 2), 15, 2),
            (7, 1, (1, 0), 28, 9),
            (7, 1, (1, 0), 21, 3),
            (7, 7, (4, 3), 14, 6),
            (7, 2, (2, 0), 18, 4),
            (7, 4, (4, 0), 15, 6),
            (7, 7, (7, 0), 14, 14),
        ];
        for (i, w) in want.iter().enumerate() {
            let v = invariant_vector(&preferred(i as u8 + 1).unwrap().form).unwrap();
            assert_eq!((v.ms_rank, v.b_rank, v.b_sig, v.stab_dim, v.compact_dim), *w, "orbit {}", i + 1);
        }
    }

    #[test]
    fn compact_dim_depends_on_representative() {
        assert_eq!(compact_dim(&omega(2).unwrap()).unwrap(), 1);
    }
}
