use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::canonical::omega;
use super::invariants::{invariant_key, ms_rank, InvariantKey};
use crate::exterior::{int, pullback, KForm, LinearMap, DIM};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Orbit(u8),
    Unknown,
    NonMultisymplectic,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Orbit(i) => write!(f, "{i}"),
            Classification::Unknown => f.write_str("Unknown"),
            Classification::NonMultisymplectic => f.write_str("NonMultisymplectic"),
        }
    }
}

static TABLE: OnceLock<std::result::Result<HashMap<InvariantKey, u8>, String>> = OnceLock::new();

/// Invariant keys of the eight standard representatives, in orbit order.
pub fn invariant_keys() -> Result<Vec<InvariantKey>> {
    (1..=8).map(|i| invariant_key(&omega(i)?)).collect()
}

fn build_table() -> std::result::Result<HashMap<InvariantKey, u8>, String> {
    let keys = invariant_keys().map_err(|e| e.to_string())?;
    let mut table = HashMap::new();
    for (i, k) in keys.into_iter().enumerate() {
        if let Some(prev) = table.insert(k, i as u8 + 1) {
            return Err(format!("orbits {prev} and {} share the key {k:?}", i + 1));
        }
    }
    Ok(table)
}

/// The lookup table, or a diagnostic if two orbits collide.
pub fn table() -> Result<&'static HashMap<InvariantKey, u8>> {
    TABLE
        .get_or_init(build_table)
        .as_ref()
        .map_err(|msg| Error::AmbiguousTable(msg.clone()))
}

pub fn classify(w: &KForm) -> Result<Classification> {
    let table = table()?;
    if ms_rank(w)? < DIM {
        return Ok(Classification::NonMultisymplectic);
    }
    let key = invariant_key(w)?;
    Ok(table.get(&key).map_or(Classification::Unknown, |&i| Classification::Orbit(i)))
}

const MAX_TRIES: u32 = 100;

/// A pseudorandom invertible map with entries in `-3..=3`.
///
/// Uses ChaCha8 seeded through `seed_from_u64`, drawing the 49 entries
/// row-major; a singular draw is discarded and the next 49 values are used.
pub fn random_invertible(rng: &mut ChaCha8Rng) -> Result<LinearMap> {
    for _ in 0..MAX_TRIES {
        let mut rows = [[0i64; DIM]; DIM];
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                *x = rng.random_range(-3..=3);
            }
        }
        let g = LinearMap::from_int_rows(rows);
        if !g.det().is_zero() {
            return Ok(g);
        }
    }
    Err(Error::SamplingExhausted(MAX_TRIES))
}

/// `(g* ω_i, g)` for a seeded random invertible integer map `g`.
pub fn sample_orbit(orbit_id: u8, seed: u64) -> Result<(KForm, LinearMap)> {
    let w = omega(orbit_id)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_invertible(&mut rng)?;
    Ok((pullback(&g, &w), g))
}

/// `true` iff `det(g) ≠ 0`.
pub fn is_invertible(g: &LinearMap) -> bool {
    g.det() != int(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms7::canonical::{canonical, Variant};

    #[test]
    fn canonical_forms_classify_to_themselves() {
        for i in 1..=8 {
            assert_eq!(classify(&omega(i).unwrap()).unwrap(), Classification::Orbit(i));
        }
        for i in [2, 5, 6, 7] {
            let w = canonical(i, Variant::Prime).unwrap().form;
            assert_eq!(classify(&w).unwrap(), Classification::Orbit(i));
        }
    }

    #[test]
    fn non_multisymplectic() {
        let w = KForm::from_int_terms(3, &[(&[1, 2, 3], 1), (&[4, 5, 6], 1)]).unwrap();
        assert_eq!(classify(&w).unwrap(), Classification::NonMultisymplectic);
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_orbit(6, 42).unwrap();
        let b = sample_orbit(6, 42).unwrap();
        assert_eq!(a, b);
        assert!(is_invertible(&a.1));
        assert_ne!(sample_orbit(6, 43).unwrap().1, a.1);
        assert_eq!(classify(&a.0).unwrap(), Classification::Orbit(6));
    }

    #[test]
    fn sample_rejects_bad_orbit() {
        assert!(matches!(sample_orbit(0, 1), Err(Error::InvalidOrbit(0))));
    }
}
