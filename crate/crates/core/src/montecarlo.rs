//! Parallel, reproducible sampling of spectra.
//!
//! Samples are grouped in chunks of `substream_width`; chunk `c` draws from
//! its own RNG stream `(seed, c)`. Chunks run on the rayon pool and are
//! concatenated in chunk order, so results never depend on the number of
//! worker threads.

use rayon::prelude::*;

use crate::ensembles::{sample_real_ginibre, sample_split, EnsembleConfig, EnsembleKind, RngStream};
use crate::error::Result;
use crate::linalg;
use crate::matrix::{real_to_complex, Spectrum, CLASSIFY_TOL};

/// Run `f(stream, index)` for every sample index, chunked as described in
/// the module docs. Output order is sample order.
pub fn run_chunks<T, F>(config: &EnsembleConfig, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut RngStream, usize) -> Result<T> + Sync,
{
    config.validate()?;
    let w = config.substream_width;
    let chunks: Vec<Result<Vec<T>>> = (0..config.chunks())
        .into_par_iter()
        .map(|c| {
            let mut rng = RngStream::new(config.seed, c as u64);
            let start = c * w;
            let end = (start + w).min(config.count);
            (start..end).map(|i| f(&mut rng, i)).collect()
        })
        .collect();
    let mut out = Vec::with_capacity(config.count);
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}

fn ginibre_spectrum(a: &nalgebra::DMatrix<f64>) -> Result<Spectrum> {
    if a.nrows() == 2 {
        let tr = a[(0, 0)] + a[(1, 1)];
        let det = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
        return Ok(Spectrum::from_monic_quadratic(-tr, det));
    }
    Spectrum::from_values(&linalg::eigenvalues(&real_to_complex(a))?, CLASSIFY_TOL)
}

/// Spectra of `config.count` samples. Real Ginibre entries have variance
/// 1/2, the law of the block produced by the split-complex bridge.
pub fn sample_spectra(config: &EnsembleConfig) -> Result<Vec<Spectrum>> {
    let n = config.n;
    match config.kind.split() {
        Some(ens) => run_chunks(config, |rng, _| sample_split(ens, n, rng).spectrum()),
        None => {
            debug_assert_eq!(config.kind, EnsembleKind::GinibreReal);
            let sigma = std::f64::consts::FRAC_1_SQRT_2;
            run_chunks(config, |rng, _| ginibre_spectrum(&sample_real_ginibre(n, sigma, rng)?))
        }
    }
}
