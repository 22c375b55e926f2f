//! Exact multilinear algebra on `V = Q^7`.

mod form;
mod json;
mod matrix;
mod scalar;

pub use form::{interior, pullback, wedge, KForm, LinearMap, MultiIndex, Vector, DIM};
pub use json::{KFormJson, LinearMapJson, TermJson};
pub use matrix::{kernel, rank, signature, Matrix, Signature, SymmetricMatrix};
pub use scalar::{format_scalar, int, parse_scalar, ratio, Scalar};
