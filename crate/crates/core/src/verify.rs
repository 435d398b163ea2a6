//! The acceptance suite: Monte Carlo and analytic checks of every
//! distributional and structural claim, collected into a [`RunReport`].
//!
//! Each check passes when `|observed − expected| ≤ tol`. Statistical
//! tolerances are stated for 2×10⁵ samples; smaller runs widen them by
//! `√(2×10⁵ / M)` so every check keeps the same number of standard errors.
//! KS thresholds already depend on the sample size and are not widened.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::SplitQuaternion;
use crate::bridge::{block_similarity, ginibre_equivalent};
use crate::densities::{
    r1_complex, r1_real, real_probability, spacing_cdf_gsce, spacing_pdf, SpacingConstant,
};
use crate::ensembles::{sample_gsce, sample_gsqe, sample_split, EnsembleConfig, RngStream, SplitEnsemble};
use crate::error::{domain, Error, Result};
use crate::linalg::{self, faddeev_leverrier, multiset_distance};
use crate::matrix::{inner_product, SplitMatrix, SplitVector, Spectrum};
use crate::montecarlo::{run_chunks, sample_spectra};
use crate::pt::{pt_jacobian_rank, RANK_TOL};
use crate::stats::{
    correlation, empirical_real_fraction, ks_distance, ks_threshold, quad, real_spacings, variance,
    Histogram2d, TabulatedCdf,
};

/// Reference sample count for statistical tolerances.
pub const REFERENCE_SAMPLES: usize = 200_000;
const KS_C99: f64 = 1.63;
const ENSEMBLES: [SplitEnsemble; 2] = [SplitEnsemble::Gsce, SplitEnsemble::Gsqe];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fast,
    Full,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Self::Fast),
            "full" => Ok(Self::Full),
            other => Err(domain(format!("unknown suite '{other}'"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Fast => "fast",
            Self::Full => "full",
        })
    }
}

/// Sample counts for one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counts {
    /// 2×2 matrices per ensemble for real fractions and one-level densities.
    pub matrices: usize,
    /// 2×2 matrices per ensemble for spacing statistics.
    pub spacing_matrices: usize,
    /// GSCE(2) samples for the bridge residual.
    pub bridge_residual: usize,
    /// GSCE(5) samples for the block similarity.
    pub bridge_blocks: usize,
    /// Samples per (ensemble, n) for structural invariants.
    pub structural: usize,
    /// GSQE(2) samples for eigenvector orthogonality.
    pub eigenvectors: usize,
    /// Random matrices per n for the Jacobian rank.
    pub rank_trials: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub seed: u64,
    pub mc_samples: Option<usize>,
    /// Multiplies every tolerance; 1 in normal runs.
    pub tolerance_scale: f64,
}

impl SuiteConfig {
    pub fn new(suite: Suite, seed: u64) -> Self {
        Self { suite, seed, mc_samples: None, tolerance_scale: 1.0 }
    }

    pub fn counts(&self) -> Result<Counts> {
        let m = self.mc_samples.unwrap_or(match self.suite {
            Suite::Fast => 20_000,
            Suite::Full => REFERENCE_SAMPLES,
        });
        if m < 1000 {
            return Err(domain("at least 1000 Monte Carlo samples are required"));
        }
        Ok(match self.suite {
            Suite::Full => Counts {
                matrices: m,
                spacing_matrices: m / 2,
                bridge_residual: 10_000,
                bridge_blocks: 100,
                structural: 10_000,
                eigenvectors: 1000,
                rank_trials: 100,
            },
            Suite::Fast => Counts {
                matrices: m,
                spacing_matrices: m / 2,
                bridge_residual: 2000,
                bridge_blocks: 20,
                structural: 1000,
                eigenvectors: 1000,
                rank_trials: 100,
            },
        })
    }

    /// `√(2×10⁵ / M)`, at least 1.
    pub fn statistical_widening(&self) -> Result<f64> {
        let m = self.counts()?.matrices as f64;
        Ok((REFERENCE_SAMPLES as f64 / m).sqrt().max(1.0))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub observed: f64,
    pub expected: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    fn new(criterion: u8, name: impl Into<String>, observed: f64, expected: f64, tol: f64) -> Self {
        let pass = (observed - expected).abs() <= tol;
        Self { criterion, name: name.into(), observed, expected, tol, pass }
    }

    /// Observed value must not exceed `bound`.
    fn below(criterion: u8, name: impl Into<String>, observed: f64, bound: f64) -> Self {
        Self::new(criterion, name, observed, 0.0, bound)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub suite: Suite,
    pub seed: u64,
    pub counts: Counts,
    pub tolerance_scale: f64,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub checks: Vec<Check>,
    pub config: ConfigEcho,
    pub pass: bool,
}

/// Independent seed per criterion and ensemble.
fn sub_seed(seed: u64, tag: u64) -> u64 {
    seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn tag(criterion: u8, ensemble: SplitEnsemble) -> u64 {
    criterion as u64 * 16 + matches!(ensemble, SplitEnsemble::Gsqe) as u64
}

fn spectra_2x2(cfg: &SuiteConfig, ensemble: SplitEnsemble, count: usize, tag: u64) -> Result<Vec<Spectrum>> {
    let ec = EnsembleConfig::new(ensemble.into(), 2, count, sub_seed(cfg.seed, tag))?;
    sample_spectra(&ec)
}

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
    counts: Counts,
    widen: f64,
}

impl<'a> Ctx<'a> {
    fn new(cfg: &'a SuiteConfig) -> Result<Self> {
        if !(cfg.tolerance_scale >= 0.0) {
            return Err(domain("tolerance scale must be non-negative"));
        }
        Ok(Self { cfg, counts: cfg.counts()?, widen: cfg.statistical_widening()? })
    }

    fn tol(&self, t: f64) -> f64 {
        t * self.cfg.tolerance_scale
    }

    fn stat_tol(&self, t: f64) -> f64 {
        self.tol(t * self.widen)
    }
}

/// Criteria 1 and 2: probability of a fully real 2×2 spectrum.
fn real_fraction(ctx: &Ctx, ensemble: SplitEnsemble, criterion: u8) -> Result<Vec<Check>> {
    let spectra = spectra_2x2(ctx.cfg, ensemble, ctx.counts.matrices, tag(1, ensemble))?;
    Ok(vec![Check::new(
        criterion,
        format!("{ensemble} real-spectrum fraction"),
        empirical_real_fraction(&spectra)?,
        real_probability(ensemble),
        ctx.stat_tol(0.005),
    )])
}

/// One eigenvalue per real spectrum: the larger for even sample indices,
/// the smaller for odd ones. The choice is independent of the matrix, so
/// the draws follow `R₁ᴿ / P(real)`.
pub fn conditional_real_eigenvalues(spectra: &[Spectrum]) -> Vec<f64> {
    spectra
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_all_real())
        .map(|(i, s)| if i % 2 == 0 { s.real_eigs[1] } else { s.real_eigs[0] })
        .collect()
}

fn criterion_3(ctx: &Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for ens in ENSEMBLES {
        let spectra = spectra_2x2(ctx.cfg, ens, ctx.counts.matrices, tag(1, ens))?;
        let mut xs = conditional_real_eigenvalues(&spectra);
        xs.sort_by(f64::total_cmp);
        let cdf = TabulatedCdf::from_density(|x| r1_real(ens, x), -7.0, 7.0, 2800)?;
        out.push(Check::new(
            3,
            format!("{ens} real one-level density mass"),
            cdf.mass,
            real_probability(ens),
            ctx.tol(1e-8),
        ));
        out.push(Check::below(
            3,
            format!("{ens} real eigenvalue KS distance (m={})", xs.len()),
            ks_distance(&xs, |x| cdf.cdf(x))?,
            ctx.tol(ks_threshold(KS_C99, xs.len())),
        ));
    }
    Ok(out)
}

/// `∫∫ R₁ꟲ` over the plane, as twice the upper half plane.
pub fn complex_plane_mass(ensemble: SplitEnsemble) -> Result<f64> {
    let inner = |y: f64| {
        quad(|x| r1_complex(ensemble, Complex64::new(x, y)).unwrap_or(f64::NAN), -8.0, 8.0, 1e-13)
            .unwrap_or(f64::NAN)
    };
    Ok(2.0 * quad(inner, 0.0, 8.0, 1e-12)?)
}

fn criterion_4(ctx: &Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for ens in ENSEMBLES {
        let spectra = spectra_2x2(ctx.cfg, ens, ctx.counts.matrices, tag(1, ens))?;
        let mut h = Histogram2d::new((100, 100), (-2.0, 2.0), (-2.0, 2.0))?;
        for s in &spectra {
            for &(re, im) in &s.complex_pairs {
                h.add_uncounted(re, im);
                h.add_uncounted(re, -im);
            }
        }
        h.total = 2 * spectra.len() as u64;
        let dens = h.density();
        let (xc, yc) = (h.x.centers(), h.y.centers());
        let mut err = 0.0;
        for (i, x) in xc.iter().enumerate() {
            for (j, y) in yc.iter().enumerate() {
                let want = r1_complex(ens, Complex64::new(*x, *y))?;
                err += (dens[i * yc.len() + j] - want).abs();
            }
        }
        out.push(Check::below(
            4,
            format!("{ens} complex-branch histogram mean abs error"),
            err / dens.len() as f64,
            ctx.stat_tol(0.01),
        ));
        out.push(Check::new(
            4,
            format!("{ens} complex one-level density plane integral"),
            complex_plane_mass(ens)?,
            1.0 - real_probability(ens),
            ctx.tol(1e-6),
        ));
    }
    Ok(out)
}

fn criterion_5(ctx: &Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for ens in ENSEMBLES {
        let pdf = |s: f64| spacing_pdf(ens, s).unwrap_or(f64::NAN);
        out.push(Check::new(5, format!("{ens} spacing pdf normalization"), quad(pdf, 0.0, 12.0, 1e-13)?, 1.0, ctx.tol(1e-6)));
        out.push(Check::new(
            5,
            format!("{ens} spacing pdf mean"),
            quad(|s| s * pdf(s), 0.0, 12.0, 1e-13)?,
            1.0,
            ctx.tol(1e-6),
        ));
        let spectra = spectra_2x2(ctx.cfg, ens, ctx.counts.spacing_matrices, tag(5, ens))?;
        let sp = real_spacings(&spectra)?;
        let mut s = sp.normalized.clone();
        s.sort_by(f64::total_cmp);
        let ks = match ens {
            SplitEnsemble::Gsce => ks_distance(&s, spacing_cdf_gsce)?,
            SplitEnsemble::Gsqe => {
                let cdf = TabulatedCdf::from_density(pdf, 0.0, 12.0, 2400)?;
                ks_distance(&s, |x| cdf.cdf(x))?
            }
        };
        out.push(Check::below(
            5,
            format!("{ens} normalized spacing KS distance (m={})", s.len()),
            ks,
            ctx.tol(ks_threshold(KS_C99, s.len())),
        ));
        if ens == SplitEnsemble::Gsqe {
            // √a is the mean raw spacing; se ≈ 0.002 at 6×10⁴ spacings
            out.push(Check::new(
                5,
                "gsqe mean raw spacing equals sqrt(a)",
                sp.mean_raw,
                SpacingConstant::new().a.sqrt(),
                ctx.stat_tol(0.005),
            ));
        }
    }
    Ok(out)
}

fn wigner_surmise(s: f64) -> f64 {
    let q = PI * s * s / 4.0;
    (PI * s / 2.0) * (-q).exp()
}

fn criterion_6(ctx: &Ctx) -> Result<Vec<Check>> {
    let mut worst = 0.0f64;
    for i in 0..401 {
        let s = 4.0 * i as f64 / 400.0;
        worst = worst.max((spacing_pdf(SplitEnsemble::Gsce, s)? - wigner_surmise(s)).abs());
    }
    Ok(vec![Check::below(6, "gsce spacing equals Wigner surmise (401 points)", worst, ctx.tol(1e-14))])
}

fn criterion_7(ctx: &Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let ec = EnsembleConfig::new(
        SplitEnsemble::Gsce.into(),
        2,
        ctx.counts.bridge_residual,
        sub_seed(ctx.cfg.seed, tag(7, SplitEnsemble::Gsce)),
    )?;
    let residuals = run_chunks(&ec, |rng, _| Ok(ginibre_equivalent(&sample_gsce(2, rng))?.residual))?;
    let worst = residuals.iter().cloned().fold(0.0, f64::max);
    out.push(Check::below(7, "bridge block-diagonal residual", worst, ctx.tol(1e-12)));

    let ec = EnsembleConfig::new(
        SplitEnsemble::Gsce.into(),
        2,
        ctx.counts.matrices,
        sub_seed(ctx.cfg.seed, tag(1, SplitEnsemble::Gsce)),
    )?;
    let blocks = run_chunks(&ec, |rng, _| {
        let b = ginibre_equivalent(&sample_gsce(2, rng))?.ginibre_block;
        Ok([b[(0, 0)], b[(0, 1)], b[(1, 0)], b[(1, 1)]])
    })?;
    let names = ["a", "b", "d", "c"];
    let cols: Vec<Vec<f64>> = (0..4).map(|k| blocks.iter().map(|b| b[k]).collect()).collect();
    for k in 0..4 {
        out.push(Check::new(7, format!("bridge entry {} variance", names[k]), variance(&cols[k]), 0.5, ctx.stat_tol(0.005)));
    }
    let mut worst_corr = 0.0f64;
    for k in 0..4 {
        for l in k + 1..4 {
            worst_corr = worst_corr.max(correlation(&cols[k], &cols[l]).abs());
        }
    }
    out.push(Check::below(7, "bridge entries max pairwise |correlation|", worst_corr, ctx.stat_tol(0.01)));

    let mut rng = RngStream::new(sub_seed(ctx.cfg.seed, tag(7, SplitEnsemble::Gsqe)), 0);
    let mut worst_spec = 0.0f64;
    let mut worst_sim = 0.0f64;
    for _ in 0..ctx.counts.bridge_blocks {
        let h = sample_gsce(5, &mut rng);
        let b = block_similarity(&h)?;
        worst_sim = worst_sim.max(b.residual);
        let a_eigs = linalg::eigenvalues(&crate::matrix::real_to_complex(&b.ginibre_block))?;
        let spec = h.spectrum()?;
        let d = multiset_distance(&a_eigs, &spec.eigenvalues())?;
        worst_spec = worst_spec.max(d / spec.spectral_radius().max(1.0));
    }
    out.push(Check::below(7, "N=5 block similarity residual", worst_sim, ctx.tol(1e-12)));
    out.push(Check::below(7, "N=5 spectra of X+Y vs split-complex spectra", worst_spec, ctx.tol(1e-9)));
    Ok(out)
}

fn random_quaternion(rng: &mut RngStream) -> SplitQuaternion {
    SplitQuaternion::new(rng.standard_normal(), rng.standard_normal(), rng.standard_normal(), rng.standard_normal())
}

fn random_vector(n: usize, rng: &mut RngStream) -> SplitVector {
    SplitVector::new((0..n).map(|_| random_quaternion(rng)).collect())
}

fn vec_scale(u: &SplitVector) -> f64 {
    u.components.iter().map(|q| q.euclid_sq()).sum::<f64>().sqrt()
}

fn criterion_8(ctx: &Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for ens in ENSEMBLES {
        for n in [2usize, 3, 5] {
            let ec = EnsembleConfig::new(ens.into(), n, ctx.counts.structural, sub_seed(ctx.cfg.seed, tag(8, ens) + n as u64 * 2))?;
            let stats = run_chunks(&ec, |rng, _| {
                let h = sample_split(ens, n, rng);
                let rep = h.complex_rep();
                let c = faddeev_leverrier(&rep);
                let scale = c.iter().map(|z| z.norm()).fold(1.0, f64::max);
                let imag = c.iter().map(|z| z.im.abs()).fold(0.0, f64::max) / scale;
                let (_, pair) = linalg::pair_degenerate(&linalg::eigenvalues(&rep)?, f64::INFINITY)?;
                Ok((imag, pair))
            })?;
            let imag = stats.iter().map(|s| s.0).fold(0.0, f64::max);
            let pair = stats.iter().map(|s| s.1).fold(0.0, f64::max);
            out.push(Check::below(8, format!("{ens} n={n} char poly max relative imaginary part"), imag, ctx.tol(1e-9)));
            out.push(Check::below(8, format!("{ens} n={n} degeneracy pairing max relative gap"), pair, ctx.tol(1e-8)));
        }
    }

    let mut rng = RngStream::new(sub_seed(ctx.cfg.seed, 8 * 16 + 15), 0);
    let mut hom = 0.0f64;
    for _ in 0..ctx.counts.structural {
        let (p, q) = (random_quaternion(&mut rng), random_quaternion(&mut rng));
        let (rp, rq, rpq) = (p.complex_rep(), q.complex_rep(), (p * q).complex_rep());
        let scale = (p.euclid_sq() * q.euclid_sq()).sqrt().max(1.0);
        for i in 0..2 {
            for j in 0..2 {
                let prod = rp[i][0] * rq[0][j] + rp[i][1] * rq[1][j];
                hom = hom.max((prod - rpq[i][j]).norm() / scale);
            }
        }
    }
    out.push(Check::below(8, "complex representation is multiplicative", hom, ctx.tol(1e-12)));

    let mut adj = 0.0f64;
    for k in 0..ctx.counts.structural / 10 {
        let n = 2 + k % 4;
        let m = SplitMatrix::from_fn(n, |_, _| random_quaternion(&mut rng));
        let (u, v) = (random_vector(n, &mut rng), random_vector(n, &mut rng));
        let lhs = inner_product(&u, &m.mul_vec(&v)?)?;
        let rhs = inner_product(&m.adjoint().mul_vec(&u)?, &v)?;
        let scale = (vec_scale(&u) * vec_scale(&v) * m.max_abs() * n as f64).max(1.0);
        adj = adj.max((lhs - rhs).max_abs() / scale);
    }
    out.push(Check::below(8, "inner product adjoint identity (u, Mv) = (M+u, v)", adj, ctx.tol(1e-12)));
    Ok(out)
}

fn criterion_9(ctx: &Ctx) -> Result<Vec<Check>> {
    let trials = ctx.counts.rank_trials;
    let mut out = Vec::new();
    for n in 2..=5usize {
        let mut rng = RngStream::new(sub_seed(ctx.cfg.seed, 9 * 16), n as u64);
        let hits = (0..trials)
            .filter(|_| {
                let a = linalg::CMatrix::from_fn(n, n, |_, _| {
                    Complex64::new(rng.standard_normal(), rng.standard_normal())
                });
                pt_jacobian_rank(&a, 1e-6) == n
            })
            .count();
        // at least 99 in 100
        let allowed = (trials as f64 * 0.01).floor();
        out.push(Check::new(
            9,
            format!("n={n} Jacobian rank = n (trials={trials}, rank cut {RANK_TOL:e})"),
            hits as f64,
            trials as f64,
            ctx.tol(allowed),
        ));
    }
    Ok(out)
}

fn criterion_10(ctx: &Ctx) -> Result<Vec<Check>> {
    let mut rng = RngStream::new(sub_seed(ctx.cfg.seed, tag(10, SplitEnsemble::Gsqe)), 0);
    let (mut res, mut ortho, mut used) = (0.0f64, 0.0f64, 0usize);
    let mut drawn = 0usize;
    while used < ctx.counts.eigenvectors {
        drawn += 1;
        if drawn > 100 * ctx.counts.eigenvectors {
            return Err(Error::Numerical("too few GSQE samples with a real spectrum".into()));
        }
        let h = sample_gsqe(2, &mut rng);
        let spec = h.spectrum()?;
        if !spec.is_all_real() {
            continue;
        }
        let [l1, l2] = [spec.real_eigs[0], spec.real_eigs[1]];
        let scale = spec.spectral_radius().max(1.0);
        if (l2 - l1) <= 1e-6 * scale {
            continue;
        }
        let u1 = h.eigenvector_reconstruct(l1)?;
        let u2 = h.eigenvector_reconstruct(l2)?;
        let hs = h.max_abs().max(1.0);
        for (u, l) in [(&u1, l1), (&u2, l2)] {
            res = res.max(h.eigen_residual(u, l)? / (vec_scale(u) * hs));
        }
        ortho = ortho.max(inner_product(&u1, &u2)?.max_abs() / (vec_scale(&u1) * vec_scale(&u2)));
        used += 1;
    }
    Ok(vec![
        Check::below(10, format!("gsqe eigenvector relative residual ({used} samples)"), res, ctx.tol(1e-8)),
        Check::below(10, "gsqe eigenvector inner product magnitude", ortho, ctx.tol(1e-8)),
    ])
}

/// Checks of one acceptance criterion (1 to 10).
pub fn run_criterion(cfg: &SuiteConfig, criterion: u8) -> Result<Vec<Check>> {
    let ctx = Ctx::new(cfg)?;
    match criterion {
        1 => real_fraction(&ctx, SplitEnsemble::Gsce, 1),
        2 => real_fraction(&ctx, SplitEnsemble::Gsqe, 2),
        3 => criterion_3(&ctx),
        4 => criterion_4(&ctx),
        5 => criterion_5(&ctx),
        6 => criterion_6(&ctx),
        7 => criterion_7(&ctx),
        8 => criterion_8(&ctx),
        9 => criterion_9(&ctx),
        10 => criterion_10(&ctx),
        _ => Err(domain(format!("no criterion {criterion}"))),
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<RunReport> {
    let mut checks = Vec::new();
    for c in 1..=10 {
        checks.extend(run_criterion(cfg, c)?);
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(RunReport {
        checks,
        config: ConfigEcho {
            suite: cfg.suite,
            seed: cfg.seed,
            counts: cfg.counts()?,
            tolerance_scale: cfg.tolerance_scale,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        pass,
    })
}
