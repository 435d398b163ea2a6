//! Seeded samplers for the Gaussian split-complex Hermitian ensemble (GSCE),
//! the Gaussian split-quaternionic Hermitian ensemble (GSQE), and the real
//! Ginibre ensemble.
//!
//! Entry variances come from expanding the Gaussian exponent in components:
//!
//! ```text
//! GSCE: Tr(H Hᵀ)            = Σ_m x_mm² + 2 Σ_{m<n} (x_mn² + y_mn²)
//! GSQE: Tr(H H^I + H^I H)   = 2 Σ_m h_mm² + 4 Σ_{m<n} ‖h_mn‖²
//! ```
//!
//! so GSCE diagonals have variance 1/2 and off-diagonal components 1/4;
//! GSQE diagonals 1/4 and off-diagonal components 1/8.
//!
//! Normal deviates are drawn with the ziggurat sampler of
//! `rand_distr::StandardNormal` from a ChaCha8 stream. The draw order is
//! fixed: diagonal entries first, then the strict upper triangle row by
//! row, components in order `p0, p1, p2, p3` (only `p0, p2` for GSCE).

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::algebra::SplitQuaternion;
use crate::error::{domain, Error, Result};
use crate::matrix::{MatrixKind, SplitMatrix};

/// Samples per RNG substream used by the Monte Carlo driver and the CLI.
pub const DEFAULT_SUBSTREAM_WIDTH: usize = 1024;

/// The two split-Hermitian ensembles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplitEnsemble {
    Gsce,
    Gsqe,
}

impl fmt::Display for SplitEnsemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Gsce => "gsce",
            Self::Gsqe => "gsqe",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EnsembleKind {
    Gsce,
    Gsqe,
    GinibreReal,
}

impl EnsembleKind {
    pub fn split(self) -> Option<SplitEnsemble> {
        match self {
            Self::Gsce => Some(SplitEnsemble::Gsce),
            Self::Gsqe => Some(SplitEnsemble::Gsqe),
            Self::GinibreReal => None,
        }
    }
}

impl From<SplitEnsemble> for EnsembleKind {
    fn from(e: SplitEnsemble) -> Self {
        match e {
            SplitEnsemble::Gsce => Self::Gsce,
            SplitEnsemble::Gsqe => Self::Gsqe,
        }
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Gsce => "gsce",
            Self::Gsqe => "gsqe",
            Self::GinibreReal => "ginibre",
        })
    }
}

impl FromStr for EnsembleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gsce" => Ok(Self::Gsce),
            "gsqe" => Ok(Self::Gsqe),
            "ginibre" => Ok(Self::GinibreReal),
            other => Err(domain(format!("unknown ensemble '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    pub kind: EnsembleKind,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub substream_width: usize,
}

impl EnsembleConfig {
    pub fn new(kind: EnsembleKind, n: usize, count: usize, seed: u64) -> Result<Self> {
        let cfg = Self { kind, n, count, seed, substream_width: DEFAULT_SUBSTREAM_WIDTH };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(domain("matrix size must be at least 1"));
        }
        if self.count == 0 {
            return Err(domain("sample count must be at least 1"));
        }
        if self.substream_width == 0 {
            return Err(domain("substream width must be at least 1"));
        }
        Ok(())
    }

    pub fn chunks(&self) -> usize {
        self.count.div_ceil(self.substream_width)
    }
}

/// A reproducible Gaussian stream: ChaCha8 keyed by `seed`, with the
/// ChaCha stream selector set to `stream_id`.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    stream_id: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_id);
        Self { seed, stream_id, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    pub fn standard_normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn normal(&mut self, variance: f64) -> f64 {
        self.standard_normal() * variance.sqrt()
    }

    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }
}

fn sample_hermitian(
    n: usize,
    rng: &mut RngStream,
    diag_var: f64,
    off_var: f64,
    split_complex: bool,
) -> SplitMatrix {
    assert!(n >= 1, "matrix size must be at least 1");
    let mut e = vec![SplitQuaternion::ZERO; n * n];
    for m in 0..n {
        e[m * n + m] = SplitQuaternion::real(rng.normal(diag_var));
    }
    for m in 0..n {
        for k in m + 1..n {
            let q = if split_complex {
                let x = rng.normal(off_var);
                let y = rng.normal(off_var);
                SplitQuaternion::new(x, 0.0, y, 0.0)
            } else {
                let p0 = rng.normal(off_var);
                let p1 = rng.normal(off_var);
                let p2 = rng.normal(off_var);
                let p3 = rng.normal(off_var);
                SplitQuaternion::new(p0, p1, p2, p3)
            };
            e[m * n + k] = q;
            e[k * n + m] = q.conj();
        }
    }
    SplitMatrix::new(n, e).expect("consistent size")
}

/// GSCE sample: density ∝ exp(−Tr(H Hᵀ)).
pub fn sample_gsce(n: usize, rng: &mut RngStream) -> SplitMatrix {
    sample_hermitian(n, rng, 0.5, 0.25, true)
}

/// GSQE sample: density ∝ exp(−Tr(H H^I + H^I H)).
pub fn sample_gsqe(n: usize, rng: &mut RngStream) -> SplitMatrix {
    sample_hermitian(n, rng, 0.25, 0.125, false)
}

pub fn sample_split(ensemble: SplitEnsemble, n: usize, rng: &mut RngStream) -> SplitMatrix {
    match ensemble {
        SplitEnsemble::Gsce => sample_gsce(n, rng),
        SplitEnsemble::Gsqe => sample_gsqe(n, rng),
    }
}

/// Real Ginibre matrix with iid Normal(0, sigma²) entries, filled row-major.
pub fn sample_real_ginibre(n: usize, sigma: f64, rng: &mut RngStream) -> Result<DMatrix<f64>> {
    if n == 0 {
        return Err(domain("matrix size must be at least 1"));
    }
    if !(sigma > 0.0) {
        return Err(domain("sigma must be positive"));
    }
    let vals: Vec<f64> = (0..n * n).map(|_| sigma * rng.standard_normal()).collect();
    Ok(DMatrix::from_row_slice(n, n, &vals))
}

/// Scalar part of the trace form in the Gaussian exponent: `Tr(H Hᵀ)` for
/// GSCE and `Tr(H H^I + H^I H)` for GSQE.
pub fn gaussian_action(m: &SplitMatrix, ensemble: SplitEnsemble) -> Result<f64> {
    let kind = m.kind();
    if !kind.is_hermitian() {
        return Err(domain("gaussian action requires a split-Hermitian matrix"));
    }
    match ensemble {
        SplitEnsemble::Gsce => {
            if kind != MatrixKind::SplitComplexHermitian {
                return Err(domain("GSCE action requires a split-complex Hermitian matrix"));
            }
            Ok((m * &m.transpose()).trace().p0)
        }
        SplitEnsemble::Gsqe => {
            let hi = m.adjoint_i();
            Ok(((m * &hi).trace() + (&hi * m).trace()).p0)
        }
    }
}

/// Normalization prefactor of P(H) with respect to the flat measure on the
/// independent real components.
pub fn normalization(ensemble: SplitEnsemble, n: usize) -> f64 {
    log_normalization(ensemble, n).exp()
}

pub fn log_normalization(ensemble: SplitEnsemble, n: usize) -> f64 {
    let nf = n as f64;
    let pairs = nf * (nf - 1.0) / 2.0;
    match ensemble {
        // (1/π)^{N/2} (2/π)^{N(N-1)/2}
        SplitEnsemble::Gsce => -0.5 * nf * PI.ln() + pairs * (2.0 / PI).ln(),
        // (2/π)^{N/2} (2/√π)^{2N(N-1)}
        SplitEnsemble::Gsqe => 0.5 * nf * (2.0 / PI).ln() + 4.0 * pairs * (2.0 / PI.sqrt()).ln(),
    }
}

/// `log P(H) = log(norm) - action`.
pub fn log_density(m: &SplitMatrix, ensemble: SplitEnsemble) -> Result<f64> {
    Ok(log_normalization(ensemble, m.n()) - gaussian_action(m, ensemble)?)
}
