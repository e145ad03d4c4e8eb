//! Spectral toolkit for the O(2)-covariant fuzzy circle and the O(3)-covariant
//! fuzzy sphere.
//!
//! The crate builds the coordinate operators of both spaces (the tridiagonal
//! matrix of x1 on the circle, the tridiagonal blocks of x0 on the sphere, and
//! the dense ladder representations used for algebra checks), diagonalizes them
//! with a Sturm-sequence bisection solver, and verifies the spectral properties
//! these operators are expected to satisfy: parity and simplicity of spectra,
//! monotonicity of the top eigenvalue, closeness to the Toeplitz reference
//! spectrum, density of the spectrum in [-1,1], and localization of the top
//! eigenstates.
//!
//! Modules:
//! - [`params`], [`tridiag`], [`spectrum`], [`state`], [`operator`]: shared types.
//! - [`eigen`]: the tridiagonal eigensolver and Toeplitz closed forms.
//! - [`circle`] / [`sphere`]: operator construction and algebra residuals.
//! - [`analysis`]: theorem-by-theorem verification over Lambda sweeps.
//! - [`report`]: deterministic CSV/JSON emission of results.
//!
//! With the default `parallel` feature, sweeps and bisection batches run on
//! rayon; `eigen_all_serial` and the serial sweep paths are always available.

pub mod analysis;
pub mod circle;
pub mod eigen;
pub mod operator;
pub mod params;
pub mod report;
pub mod spectrum;
pub mod sphere;
pub mod state;
pub mod tridiag;

mod par;

pub use operator::{Basis, BasisLabel, OperatorRep};
pub use par::configure_threads;
pub use params::{make_params, FuzzyParams, KRule, SpaceKind};
pub use spectrum::Spectrum;
pub use state::StateVector;
pub use tridiag::{entrywise_dominates, SymTridiag};

/// Errors reported by construction and solver routines.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation requires the {expected} space, got {got}")]
    WrongKind { expected: SpaceKind, got: SpaceKind },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
