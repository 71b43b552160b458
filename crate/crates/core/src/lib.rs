//! Exact stabilization calculus over prime fields.
//!
//! The base category is bounded, finite-type, non-negatively graded chain
//! complexes over `F_p`.  On top of it the crate builds two flavors of
//! spectra — sequential spectra for a suspension endofunctor `⊗K`, and
//! symmetric spectra with `Σ_n`-actions — together with the machinery of
//! their stable theory: loop adjoints, stabilization towers, shift functors,
//! smash products, latching objects, unit intervals and homotopy
//! rectification.  Every computation is exact: verdicts are rank arguments
//! over `F_p`, never floating point.

pub mod chain;
pub mod corpus;
pub mod error;
pub mod field;
pub mod matrix;
pub mod rectify;
pub mod solve;
pub mod spectra;
pub mod symmetric;
pub mod verify;

pub use error::Error;
pub use field::Fp;
pub use matrix::Matrix;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
