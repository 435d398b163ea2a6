//! Split-complex and split-quaternionic Hermitian random matrices.
//!
//! * [`algebra`]: split-complex numbers and split-quaternions.
//! * [`matrix`]: split-quaternionic matrices, their complex representation
//!   and spectra.
//! * [`ensembles`]: seeded GSCE / GSQE / real Ginibre samplers.
//! * [`densities`]: closed-form 2×2 eigenvalue laws.
//! * [`stats`]: quadrature, histograms, spacings and KS distances.
//! * [`bridge`]: the map from split-complex Hermitian to real Ginibre.
//! * [`pt`]: PT-symmetry via the characteristic polynomial.
//! * [`verify`]: the acceptance suite.

pub mod algebra;
pub mod bridge;
pub mod densities;
pub mod ensembles;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod montecarlo;
pub mod pt;
pub mod special;
pub mod stats;
pub mod verify;

pub use algebra::{SplitComplex, SplitQuaternion};
pub use ensembles::{EnsembleConfig, EnsembleKind, RngStream, SplitEnsemble};
pub use error::{Error, Result};
pub use matrix::{MatrixKind, SplitMatrix, SplitVector, Spectrum};
pub use pt::PTReport;
pub use verify::{Check, RunReport, Suite, SuiteConfig};
