//! The eight multisymplectic orbits: representatives, invariants and the
//! classifier.

pub mod canonical;
pub mod classify;
pub mod invariants;

pub use canonical::{canonical, omega, preferred, CanonicalForm, SourceBasis, Variant};
pub use classify::{classify, invariant_keys, random_invertible, sample_orbit, Classification};
pub use invariants::{
    b_form, compact_dim, in_stabilizer_algebra, invariant_key, invariant_vector, is_closed_under_bracket,
    is_multisymplectic, ms_rank, stab_dim, stabilizer_algebra, InvariantKey, InvariantVector,
};
