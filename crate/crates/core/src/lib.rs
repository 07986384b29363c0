//! Schur multipliers on Schatten classes at finite matrix scale.
//!
//! The crate builds the finite objects behind the dichotomy "the diagonal
//! is a bounded Schur pattern exactly when the ideal is closed under
//! submajorisation":
//!
//! - [`spectra`]: singular values, Schatten and Ky Fan (quasi-)norms, the
//!   diagonal-averaging identity.
//! - [`major`]: submajorisation and majorisation predicates, the
//!   intermediate sequence between `y ≺≺ x`, and the submajorisation
//!   distortion of a norm.
//! - [`schur_horn`]: matrices with prescribed diagonal and spectrum, and the
//!   positive witnesses `V` with `diag(V) = y`, `μ(V) ≤ x`.
//! - [`patterns`]: finite patterns with row/column decompositions, minimum
//!   line covers and monotone diagonals.
//! - [`multipliers`]: entrywise multipliers, norm lower bounds and the
//!   blow-up sweeps.
//! - [`checks`]: randomized property suites, also run by `schurpat check`.
//! - [`cli`]: the `schurpat` command line.
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod checks;
pub mod cli;
pub mod error;
pub mod flow;
pub mod major;
pub mod multipliers;
pub mod patterns;
pub mod random;
pub mod schur_horn;
pub mod spectra;

pub use error::{Error, Result};
pub use major::RealSeq;
pub use multipliers::{BlowupReport, MultiplierSymbol};
pub use patterns::{Decomposition, LineCover, Pattern};
pub use schur_horn::SpectrumDiagonalPair;
pub use spectra::{IdealNorm, Matrix, SingularValues, C64};
