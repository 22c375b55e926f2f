//! Decision procedures for the existence of global forms of each type on a
//! closed 7-manifold, from the free part of its cohomology in degrees 2 and 4.

pub mod check;
pub mod model;

pub use check::{check_type, check_type_default, verify_witness, Verdict, VerdictStatus, DEFAULT_BOUND};
pub use model::{bundled, bundled_names, cup_eval, load_model, CohomologyModel};
