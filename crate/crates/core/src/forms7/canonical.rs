use std::fmt;
use std::str::FromStr;

use crate::exterior::{int, pullback, ratio, KForm, LinearMap, Matrix, Scalar, DIM};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard,
    Prime,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Variant::Standard),
            "prime" => Ok(Variant::Prime),
            other => Err(Error::UnknownVariant { orbit: 0, variant: other.to_string() }),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Standard => "standard",
            Variant::Prime => "prime",
        })
    }
}

/// Which dual basis the coefficients are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SourceBasis {
    E,
    F,
    Beta,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub orbit_id: u8,
    pub variant: Variant,
    pub form: KForm,
    pub source_basis: SourceBasis,
    /// For prime variants, a map `g` with `g* (standard form) = this form`.
    pub change: Option<LinearMap>,
}

type Terms = &'static [(&'static [usize], i64)];

const OMEGA: [Terms; 8] = [
    &[(&[1, 2, 7], 1), (&[1, 3, 4], 1), (&[2, 5, 6], 1)],
    &[
        (&[1, 2, 5], 1),
        (&[1, 2, 7], 1),
        (&[1, 4, 7], 1),
        (&[2, 3, 7], -1),
        (&[3, 4, 7], 1),
        (&[3, 4, 6], 1),
    ],
    &[(&[1, 2, 3], 1), (&[1, 6, 7], -1), (&[1, 4, 5], 1)],
    &[(&[1, 2, 5], 1), (&[1, 3, 6], 1), (&[1, 4, 7], 1), (&[2, 3, 4], 1)],
    &[
        (&[1, 2, 3], 1),
        (&[1, 4, 5], -1),
        (&[1, 6, 7], 1),
        (&[2, 4, 6], 1),
        (&[2, 5, 7], 1),
        (&[3, 4, 7], 1),
        (&[3, 5, 6], -1),
    ],
    &[
        (&[1, 2, 3], 1),
        (&[1, 4, 5], -1),
        (&[1, 6, 7], 1),
        (&[2, 4, 6], -1),
        (&[2, 5, 7], -1),
    ],
    &[
        (&[1, 4, 5], 1),
        (&[1, 6, 7], -1),
        (&[2, 4, 6], 1),
        (&[2, 5, 7], 1),
        (&[3, 4, 7], 1),
        (&[3, 5, 6], -1),
    ],
    &[
        (&[1, 2, 3], 1),
        (&[1, 4, 5], 1),
        (&[1, 6, 7], -1),
        (&[2, 4, 6], 1),
        (&[2, 5, 7], 1),
        (&[3, 4, 7], 1),
        (&[3, 5, 6], -1),
    ],
];

const OMEGA2_PRIME: Terms = &[
    (&[1, 4, 5], 1),
    (&[1, 6, 7], -1),
    (&[2, 5, 7], 1),
    (&[2, 4, 6], -1),
    (&[3, 4, 7], -1),
    (&[3, 5, 6], -1),
];

fn check_orbit(orbit_id: u8) -> Result<usize> {
    if (1..=8).contains(&orbit_id) {
        Ok(orbit_id as usize - 1)
    } else {
        Err(Error::InvalidOrbit(orbit_id))
    }
}

/// The printed representative `ω_i` in the `e` basis.
pub fn omega(orbit_id: u8) -> Result<KForm> {
    let i = check_orbit(orbit_id)?;
    KForm::from_int_terms(3, OMEGA[i])
}

/// `ω₂′` in the `β` basis.
pub fn omega2_prime() -> KForm {
    KForm::from_int_terms(3, OMEGA2_PRIME).expect("static table")
}

/// `β₁∧β₂∧β₃`.
pub fn beta123() -> KForm {
    KForm::from_int_terms(3, &[(&[1, 2, 3], 1)]).expect("static table")
}

/// The `f`-basis change for `ω₂′`, with `f₁, f₂, f₃` halved so that every
/// entry is rational. Columns are `f₁/2, f₂/2, f₃/2, √2f₄, …, √2f₇` in
/// `e`-coordinates; pulling `ω₂` back along it gives `ω₂′` on the nose.
pub fn omega2_change() -> LinearMap {
    let h = ratio(1, 2);
    let z = int(0);
    let cols: [[Scalar; DIM]; DIM] = [
        [z.clone(), z.clone(), z.clone(), z.clone(), h.clone(), h.clone(), z.clone()],
        [z.clone(), z.clone(), z.clone(), z.clone(), -h.clone(), h.clone(), z.clone()],
        [z.clone(), z.clone(), z.clone(), z.clone(), -h.clone(), -h.clone(), h.clone()],
        [int(-1), z.clone(), z.clone(), int(-1), z.clone(), z.clone(), z.clone()],
        [z.clone(), int(-1), int(1), z.clone(), z.clone(), z.clone(), z.clone()],
        [z.clone(), int(-1), int(-1), z.clone(), z.clone(), z.clone(), z.clone()],
        [int(-1), z.clone(), z.clone(), int(1), z.clone(), z.clone(), z],
    ];
    LinearMap::from_matrix(Matrix::from_fn(DIM, DIM, |i, j| cols[j][i].clone())).expect("7x7")
}

/// The unscaled `f`-basis: columns `f₁, f₂, f₃, √2f₄, …, √2f₇`.
pub fn f_basis_unscaled() -> LinearMap {
    let mut m = omega2_change().matrix().clone();
    for i in 0..DIM {
        for j in 0..3 {
            m[(i, j)] = &m[(i, j)] * int(2);
        }
    }
    LinearMap::from_matrix(m).expect("7x7")
}

/// The signed map with `g*ω₅ = ω₂′ + β₁∧β₂∧β₃`.
pub fn omega5_change() -> LinearMap {
    LinearMap::signed_permutation([(1, 1), (4, 1), (5, -1), (2, 1), (3, 1), (6, 1), (7, -1)]).expect("valid")
}

/// The map `g` relating `ω₆′ = (g⁻¹)*ω₆`.
pub fn omega6_relation_map() -> LinearMap {
    LinearMap::signed_permutation([(1, 1), (2, 1), (7, -1), (4, 1), (5, -1), (6, -1), (3, 1)]).expect("valid")
}

/// The map `g` relating `ω₇′ = (g⁻¹)*ω₇`.
pub fn omega7_relation_map() -> LinearMap {
    LinearMap::signed_permutation([(4, -1), (7, -1), (5, 1), (6, -1), (3, 1), (1, -1), (2, 1)]).expect("valid")
}

pub fn canonical(orbit_id: u8, variant: Variant) -> Result<CanonicalForm> {
    let standard = omega(orbit_id)?;
    let prime_change = match orbit_id {
        2 => Some((omega2_change(), SourceBasis::Beta)),
        5 => Some((omega5_change(), SourceBasis::Beta)),
        6 => Some((omega6_relation_map().inverse()?, SourceBasis::E)),
        7 => Some((omega7_relation_map().inverse()?, SourceBasis::E)),
        _ => None,
    };
    match variant {
        Variant::Standard => Ok(CanonicalForm {
            orbit_id,
            variant,
            form: standard,
            source_basis: SourceBasis::E,
            change: None,
        }),
        Variant::Prime => {
            let (g, basis) = prime_change.ok_or(Error::UnknownVariant { orbit: orbit_id, variant: variant.to_string() })?;
            let form = match orbit_id {
                2 => omega2_prime(),
                5 => &omega2_prime() + &beta123(),
                _ => pullback(&g, &standard),
            };
            Ok(CanonicalForm { orbit_id, variant, form, source_basis: basis, change: Some(g) })
        }
    }
}

/// The representative at which the compact part is read off: `ω₂′` for
/// orbit 2, the standard form otherwise.
pub fn preferred(orbit_id: u8) -> Result<CanonicalForm> {
    canonical(orbit_id, if orbit_id == 2 { Variant::Prime } else { Variant::Standard })
}

pub fn has_prime(orbit_id: u8) -> bool {
    matches!(orbit_id, 2 | 5 | 6 | 7)
}
