//! PT-symmetry of complex matrices, taken here as reality of the
//! characteristic polynomial.
//!
//! The PT-symmetric `N×N` matrices form a set cut out of the `2N²` real
//! parameters by the `N` conditions `Im c_k = 0`. Those conditions are
//! polynomial, not linear, in the entries, so independence is checked as the
//! rank of their differential at a point.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::linalg::{self, faddeev_leverrier, frobenius, poly_from_roots, CMatrix};

/// Largest size handled by Faddeev-LeVerrier; bigger inputs go through the
/// eigenvalues.
pub const PT_FL_MAX_N: usize = 16;

/// Relative cut for the numerical rank.
pub const RANK_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PTReport {
    pub is_pt: bool,
    pub max_imag_coeff: f64,
    /// Ascending, monic.
    pub coeffs: Vec<(f64, f64)>,
    pub jacobian_rank: Option<usize>,
    /// Distance between the spectrum and its conjugate, relative to the
    /// Frobenius norm. Filled in only for PT inputs.
    pub conjugate_defect: Option<f64>,
}

/// Monic characteristic polynomial, ascending order.
pub fn char_poly_complex(a: &CMatrix) -> Vec<Complex64> {
    let n = a.nrows();
    if n <= PT_FL_MAX_N {
        return faddeev_leverrier(a);
    }
    match linalg::eigenvalues(a) {
        Ok(eigs) => poly_from_roots(&eigs),
        Err(_) => faddeev_leverrier(a),
    }
}

fn coeff_scale(c: &[Complex64]) -> f64 {
    c.iter().map(|z| z.norm()).fold(1.0, f64::max)
}

pub fn is_pt_symmetric(a: &CMatrix, tol: f64) -> PTReport {
    let coeffs = char_poly_complex(a);
    let max_imag_coeff = coeffs.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    let is_pt = max_imag_coeff <= tol * coeff_scale(&coeffs);
    let conjugate_defect = if is_pt { conjugate_defect(a) } else { None };
    PTReport {
        is_pt,
        max_imag_coeff,
        coeffs: coeffs.iter().map(|z| (z.re, z.im)).collect(),
        jacobian_rank: None,
        conjugate_defect,
    }
}

fn conjugate_defect(a: &CMatrix) -> Option<f64> {
    let eigs = linalg::eigenvalues(a).ok()?;
    let conj: Vec<Complex64> = eigs.iter().map(|z| z.conj()).collect();
    let d = linalg::multiset_distance(&eigs, &conj).ok()?;
    Some(d / frobenius(a).max(1.0))
}

fn imag_coeffs(a: &CMatrix) -> Vec<f64> {
    let c = faddeev_leverrier(a);
    c[..a.nrows()].iter().map(|z| z.im).collect()
}

/// Central-difference Jacobian of `A ↦ (Im c_0, …, Im c_{N−1})` with
/// respect to the `2N²` real parameters (`Re a_rc`, `Im a_rc`, row-major).
pub fn pt_jacobian(a: &CMatrix, step: f64) -> DMatrix<f64> {
    let n = a.nrows();
    let mut jac = DMatrix::zeros(n, 2 * n * n);
    let mut work = a.clone();
    for r in 0..n {
        for c in 0..n {
            for (part, dir) in [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)].into_iter().enumerate() {
                let orig = work[(r, c)];
                work[(r, c)] = orig + dir * step;
                let plus = imag_coeffs(&work);
                work[(r, c)] = orig - dir * step;
                let minus = imag_coeffs(&work);
                work[(r, c)] = orig;
                let col = 2 * (r * n + c) + part;
                for k in 0..n {
                    jac[(k, col)] = (plus[k] - minus[k]) / (2.0 * step);
                }
            }
        }
    }
    jac
}

/// Numerical rank of [`pt_jacobian`]: singular values above
/// `RANK_TOL · σ_max`. A deficient rank marks a non-generic point.
pub fn pt_jacobian_rank(a: &CMatrix, step: f64) -> usize {
    let sv = pt_jacobian(a, step).singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_TOL * smax).count()
}
