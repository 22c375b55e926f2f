//! The displayed stabilizer elements and subgroup embeddings, and exact
//! checks of every identity relating the representatives.

pub mod catalog;
pub mod checks;
pub mod embeddings;
pub mod sampling;

pub use catalog::{catalog, k6_completions, Claim, FormRef, NamedTransformation};
pub use checks::{
    catalog_checks, compact_checks, embedding_checks, identity_checks, verify_membership, verify_paper, CheckResult,
    Report, Status,
};
pub use embeddings::{
    embed_gl2pair, embed_sl2pair, embed_so3_33, embed_so4, gl2_generator, rotation, sl2_generator, so3_generator,
    so4_generator, torus_element, Identification,
};
