//! Exact classification machinery for multisymplectic 3-forms on a
//! seven-dimensional real vector space.
//!
//! Everything is computed over the rationals. The crate is split into:
//!
//! * [`exterior`]: rationals, k-forms, wedge/interior/pullback, exact kernels
//!   and signatures.
//! * [`algebras`]: Cayley–Dickson algebras and the 3-forms induced on their
//!   imaginary parts.
//! * [`forms7`]: the eight canonical multisymplectic representatives, orbit
//!   invariants and the classifier.
//! * [`stabilizers`]: explicit stabilizer elements, subgroup embeddings and
//!   identity checks.
//! * [`topology`]: existence criteria for global forms of each type over
//!   user-supplied cohomology data.
//! * [`cli`]: the `msf7` command-line front end.

pub mod algebras;
pub mod cli;
pub mod error;
pub mod exterior;
pub mod forms7;
pub mod stabilizers;
pub mod topology;

pub use error::{Error, Result};
