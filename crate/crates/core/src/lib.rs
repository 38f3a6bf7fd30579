//! Exact cohomology of the lagrangian de Rham complex.
//!
//! The crate builds quasihomogeneous lagrangian singularities (open
//! swallowtails `Σ_{n,k}` from their generating functions, plane curves,
//! custom ideals), presents their conormal Lie algebroid `I/I²`, and
//! computes the cohomology of `Hom(∧^p I/I², O_L)` one weighted degree at a
//! time with exact rational linear algebra.
//!
//! Layers, bottom up:
//!
//! - [`polyring`]: sparse polynomials over ℚ on weighted variables
//! - [`groebner`]: Buchberger, normal forms, elimination, syzygies, resolutions
//! - [`linalg`]: exact sparse rank and kernels
//! - [`symplectic`]: Poisson bracket on `ℂ^{2n}`
//! - [`varieties`]: swallowtails, generating functions, plane curves
//! - [`algebroid`]: conormal presentation and bracket structure constants
//! - [`derham`]: cochain slices, differentials, cohomology tables
//! - [`homology`]: depth certificates, tangent module, α-map and torsion
//! - [`cli`]: batch runs and JSON/table reports

pub mod error;
pub mod polyring;
pub mod groebner;
pub mod linalg;
pub mod symplectic;
pub mod varieties;
pub mod algebroid;
pub mod derham;
pub mod homology;
pub mod cli;

pub use error::{Error, Result};
