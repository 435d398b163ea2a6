//! Closed-form eigenvalue distributions of the 2×2 split-Hermitian
//! ensembles.
//!
//! The one-level density of an eigenvalue splits into a real-axis branch
//! `R₁ᴿ(x)` and a complex-plane branch `R₁ꟲ(x + iy)`; the total density is
//! `R₁ꟲ + δ(Im λ) R₁ᴿ`. The delta term is carried structurally by
//! [`Branch`], never as a numeric spike.
//!
//! Products of the form `exp(t²) erfc(t)` are evaluated through
//! [`erfcx`](crate::special::erfcx) so every density stays finite far into
//! the tails.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ensembles::SplitEnsemble;
use crate::error::{domain, Result};
use crate::special::{erf, erfcx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    Real,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityValue {
    pub value: f64,
    pub branch: Branch,
}

/// Scale constant of the GSQE spacing law,
/// `a = ((3√2 − asinh 1) / ((2√2 − 1)√π))²`. Its square root is the mean
/// raw spacing `|λ₁ − λ₂|` conditional on a real spectrum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpacingConstant {
    pub a: f64,
}

impl SpacingConstant {
    pub fn new() -> Self {
        let r = (3.0 * SQRT_2 - 1f64.asinh()) / ((2.0 * SQRT_2 - 1.0) * PI.sqrt());
        Self { a: r * r }
    }
}

impl Default for SpacingConstant {
    fn default() -> Self {
        Self::new()
    }
}

fn inv_sqrt_pi() -> f64 {
    1.0 / PI.sqrt()
}

/// GSCE joint density of the two eigenvalues, for both-real inputs or a
/// complex-conjugate pair.
pub fn jpdf_sc(l1: Complex64, l2: Complex64) -> Result<f64> {
    let gap = (l1 - l2).norm();
    if l1.im == 0.0 && l2.im == 0.0 {
        return Ok((-(l1.re * l1.re + l2.re * l2.re)).exp() * gap * inv_sqrt_pi() / 2.0);
    }
    if (l2 - l1.conj()).norm() > 1e-12 * (1.0 + l1.norm()) {
        return Err(domain("eigenvalues must be both real or a conjugate pair"));
    }
    // λ₁² + λ₂² = 2(x² − y²); exp(2y²) erfc(2|y|) = exp(−2y²) erfcx(2|y|)
    let (x, y) = (l1.re, l1.im.abs());
    Ok((-2.0 * x * x - 2.0 * y * y).exp() * erfcx(2.0 * y) * gap * inv_sqrt_pi() / 2.0)
}

/// GSCE real-branch one-level density; integrates to `1/√2`.
pub fn r1_real_sc(x: f64) -> f64 {
    0.5 * x * (-x * x).exp() * erf(x) + (-2.0 * x * x).exp() * inv_sqrt_pi() / 2.0
}

/// GSCE complex-branch one-level density.
pub fn r1_complex_sc(l: Complex64) -> Result<f64> {
    if l.im == 0.0 {
        return Err(domain("real eigenvalue: use the real branch"));
    }
    let (x, y) = (l.re, l.im.abs());
    Ok(2.0 * y * inv_sqrt_pi() * (-2.0 * x * x - 2.0 * y * y).exp() * erfcx(2.0 * y))
}

/// GSQE joint density of two real eigenvalues.
pub fn jpdf_real_sq(l1: f64, l2: f64) -> f64 {
    let d = (l1 - l2).abs();
    // exp(−4λ₁λ₂) erfc(√2 d) = exp(−2(λ₁² + λ₂²)) erfcx(√2 d)
    let g = (-2.0 * (l1 * l1 + l2 * l2)).exp();
    2.0 / PI * d * d * g + d / (2.0 * PI).sqrt() * g * erfcx(SQRT_2 * d)
}

/// GSQE real-branch one-level density; integrates to `1 − 1/(2√2)`.
/// The removable singularity at 0 is bridged by a series for `|x| < 1e−3`.
pub fn r1_real_sq(x: f64) -> f64 {
    let t = x * x;
    // (exp(−4t) − exp(−2t)) / (8t)
    let singular = if x.abs() < 1e-3 {
        // Σ_{k≥1} ((−4)^k − (−2)^k) t^{k−1} / (8 k!)
        -0.25 + 0.75 * t - (7.0 / 6.0) * t * t + 1.25 * t * t * t
    } else {
        ((-4.0 * t).exp_m1() - (-2.0 * t).exp_m1()) / (8.0 * t)
    };
    (singular + (-2.0 * t).exp() * (2.0 * t + 1.0)) / (2.0 * PI).sqrt()
}

/// GSQE complex-branch one-level density; integrates to `1/(2√2)`.
pub fn r1_complex_sq(l: Complex64) -> Result<f64> {
    if l.im == 0.0 {
        return Err(domain("real eigenvalue: use the real branch"));
    }
    let (x, y) = (l.re, l.im.abs());
    Ok(2.0 * (2.0 / PI).sqrt() * y * (-4.0 * (x * x + y * y)).exp())
}

pub fn r1_real(ensemble: SplitEnsemble, x: f64) -> f64 {
    match ensemble {
        SplitEnsemble::Gsce => r1_real_sc(x),
        SplitEnsemble::Gsqe => r1_real_sq(x),
    }
}

pub fn r1_complex(ensemble: SplitEnsemble, l: Complex64) -> Result<f64> {
    match ensemble {
        SplitEnsemble::Gsce => r1_complex_sc(l),
        SplitEnsemble::Gsqe => r1_complex_sq(l),
    }
}

/// Total one-level density `R₁ꟲ + δ(Im λ) R₁ᴿ`: real inputs return the
/// weight of the delta term tagged [`Branch::Real`].
pub fn total_density(ensemble: SplitEnsemble, l: Complex64) -> Result<DensityValue> {
    if l.im == 0.0 {
        Ok(DensityValue { value: r1_real(ensemble, l.re), branch: Branch::Real })
    } else {
        Ok(DensityValue { value: r1_complex(ensemble, l)?, branch: Branch::Complex })
    }
}

/// Unit-mean spacing law of real spectra.
///
/// GSCE: `(π/2) s exp(−πs²/4)`. GSQE:
/// `4√(2a³)/(2√2 − 1) · (s²/√π e^{−as²} + s/(2√(2a)) e^{as²} erfc(√(2a) s))`.
pub fn spacing_pdf(ensemble: SplitEnsemble, s: f64) -> Result<f64> {
    if s < 0.0 {
        return Err(domain("spacing must be non-negative"));
    }
    Ok(match ensemble {
        SplitEnsemble::Gsce => PI / 2.0 * s * (-PI / 4.0 * s * s).exp(),
        SplitEnsemble::Gsqe => {
            let a = SpacingConstant::new().a;
            let g = (-a * s * s).exp();
            let bracket = s * s * inv_sqrt_pi() * g
                + s / (2.0 * (2.0 * a).sqrt()) * g * erfcx((2.0 * a).sqrt() * s);
            4.0 * (2.0 * a * a * a).sqrt() * bracket / (2.0 * SQRT_2 - 1.0)
        }
    })
}

/// Closed-form GSCE spacing CDF `1 − exp(−πs²/4)`.
pub fn spacing_cdf_gsce(s: f64) -> f64 {
    if s <= 0.0 {
        0.0
    } else {
        -(-PI / 4.0 * s * s).exp_m1()
    }
}

/// Probability that both eigenvalues are real.
pub fn real_probability(ensemble: SplitEnsemble) -> f64 {
    match ensemble {
        SplitEnsemble::Gsce => FRAC_1_SQRT_2,
        SplitEnsemble::Gsqe => 1.0 - 1.0 / (2.0 * SQRT_2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::quad;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    // Frozen values below are from an mpmath evaluation of the closed forms
    // at 30 digits.

    #[test]
    fn spacing_constant() {
        assert!(rel(SpacingConstant::new().a, 1.07572401904927543778464997584) < 1e-14);
    }

    #[test]
    fn jpdf_sc_values() {
        assert_eq!(jpdf_sc(c(0.4, 0.0), c(0.4, 0.0)).unwrap(), 0.0);
        assert!(rel(jpdf_sc(c(1.0, 0.0), c(0.0, 0.0)).unwrap(), 0.103776874355148675835067062) < 1e-14);
        let half = jpdf_sc(c(0.0, 0.5), c(0.0, -0.5)).unwrap();
        assert!(rel(2.0 * half, r1_complex_sc(c(0.0, 0.5)).unwrap()) < 1e-14);
        let v = jpdf_sc(c(0.3, 0.5), c(0.3, -0.5)).unwrap();
        assert!(rel(v, 0.0611076856038621272361402179623) < 1e-13);
        assert!(jpdf_sc(c(0.3, 0.5), c(0.2, -0.5)).is_err());
        assert!(jpdf_sc(c(0.3, 0.5), c(0.3, 0.0)).is_err());
    }

    #[test]
    fn r1_real_sc_values() {
        assert!(rel(r1_real_sc(0.0), 0.282094791773878143474039725780) < 1e-15);
        assert!(rel(r1_real_sc(1.3), 0.12162736556776488118) < 1e-14);
        assert!(rel(r1_real_sc(0.5), 0.27244056826345106568) < 1e-14);
        assert_eq!(r1_real_sc(-1.3), r1_real_sc(1.3));
        let mass = quad(r1_real_sc, -9.0, 9.0, 1e-12).unwrap();
        assert!((mass - FRAC_1_SQRT_2).abs() < 1e-8);
    }

    #[test]
    fn r1_complex_sc_values() {
        assert!(rel(r1_complex_sc(c(0.0, 0.5)).unwrap(), 0.146318364450264830713063574187) < 1e-14);
        assert!(r1_complex_sc(c(0.2, 1e-300)).unwrap() < 1e-299);
        assert!(r1_complex_sc(c(0.2, 0.0)).is_err());
        let v = r1_complex_sc(c(0.7, -0.3)).unwrap();
        assert_eq!(v, r1_complex_sc(c(-0.7, 0.3)).unwrap());
        assert_eq!(v, r1_complex_sc(c(0.7, 0.3)).unwrap());
    }

    #[test]
    fn jpdf_real_sq_values() {
        assert_eq!(jpdf_real_sq(0.7, 0.7), 0.0);
        assert!(rel(jpdf_real_sq(1.0, 0.0), 0.104309096245074721464521991024) < 1e-14);
        assert_eq!(jpdf_real_sq(0.3, -1.2), jpdf_real_sq(-1.2, 0.3));
        // marginal equals the one-level density
        let m = quad(|y| jpdf_real_sq(0.7, y), -8.0, 0.7, 1e-13).unwrap()
            + quad(|y| jpdf_real_sq(0.7, y), 0.7, 8.0, 1e-13).unwrap();
        assert!(rel(m, r1_real_sq(0.7)) < 1e-11);
    }

    #[test]
    fn r1_real_sq_values() {
        assert!(rel(r1_real_sq(0.0), 0.299206710301074508454959544951) < 1e-15);
        assert!(rel(r1_real_sq(0.001), 0.29920700950652149387) < 1e-13);
        assert!(rel(r1_real_sq(0.8), 0.23725874032674367614) < 1e-14);
        assert!(rel(r1_real_sq(1.3), 0.05852295378618054894) < 1e-14);
        assert!(rel(r1_real_sq(2.5), 0.000020040979169428093014) < 1e-12);
        assert_eq!(r1_real_sq(-0.8), r1_real_sq(0.8));
        // continuity across the series switch
        let (lo, hi) = (r1_real_sq(0.999_999_9e-3), r1_real_sq(1.000_000_1e-3));
        assert!((lo - hi).abs() < 1e-12);
        let mass = quad(r1_real_sq, -9.0, 9.0, 1e-12).unwrap();
        assert!((mass - real_probability(SplitEnsemble::Gsqe)).abs() < 1e-8);
    }

    #[test]
    fn r1_complex_sq_values() {
        assert!(rel(r1_complex_sq(c(0.0, 0.5)).unwrap(), 0.293525326347479799788628858063) < 1e-14);
        assert!(r1_complex_sq(c(0.0, 0.0)).is_err());
        assert!(r1_complex_sq(c(0.1, 1e-12)).unwrap() < 1e-11);
    }

    #[test]
    fn spacing_values() {
        assert!(rel(spacing_pdf(SplitEnsemble::Gsce, 1.0).unwrap(), 0.716185936340569152781584102534) < 1e-14);
        assert_eq!(spacing_pdf(SplitEnsemble::Gsce, 0.0).unwrap(), 0.0);
        assert_eq!(spacing_pdf(SplitEnsemble::Gsqe, 0.0).unwrap(), 0.0);
        assert!(rel(spacing_pdf(SplitEnsemble::Gsqe, 0.5).unwrap(), 0.602761491480031373733974140282) < 1e-13);
        assert!(rel(spacing_pdf(SplitEnsemble::Gsqe, 1.0).unwrap(), 0.795459093934173243240731128771) < 1e-13);
        assert!(rel(spacing_pdf(SplitEnsemble::Gsqe, 2.0).unwrap(), 0.111208992213845734260698879250) < 1e-13);
        assert!(spacing_pdf(SplitEnsemble::Gsqe, -0.1).is_err());
        assert!(spacing_pdf(SplitEnsemble::Gsqe, 60.0).unwrap().is_finite());
        for s in [0.1, 0.9, 2.3] {
            let num = quad(|t| spacing_pdf(SplitEnsemble::Gsce, t).unwrap(), 0.0, s, 1e-14).unwrap();
            assert!((num - spacing_cdf_gsce(s)).abs() < 1e-12);
        }
    }

    #[test]
    fn real_probabilities() {
        let p = real_probability(SplitEnsemble::Gsce);
        assert!((p * p - 0.5).abs() < 1e-15);
        assert!((real_probability(SplitEnsemble::Gsqe) - 0.6464466).abs() < 1e-7);
    }

    #[test]
    fn total_density_branches() {
        let r = total_density(SplitEnsemble::Gsqe, c(0.5, 0.0)).unwrap();
        assert_eq!(r.branch, Branch::Real);
        assert_eq!(r.value, r1_real_sq(0.5));
        let z = total_density(SplitEnsemble::Gsce, c(0.5, 0.2)).unwrap();
        assert_eq!(z.branch, Branch::Complex);
    }
}
