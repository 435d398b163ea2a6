//! Split-quaternionic matrices and vectors.
//!
//! A [`SplitMatrix`] is embedded in the complex matrices of twice its size by
//! replacing every entry with its 2×2 complex representation. For
//! split-Hermitian matrices the embedding has a real characteristic
//! polynomial which is a perfect square, `char(rep(M)) = q²`; the roots of
//! `q` form the [`Spectrum`], real values plus complex-conjugate pairs.

use std::ops::Mul;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{SplitComplex, SplitQuaternion};
use crate::error::{domain, numerical, Error, Result};
use crate::linalg::{self, CMatrix};

/// Imaginary parts of embedding char-poly coefficients below this (relative
/// to the coefficient scale) are dropped.
pub const CHARPOLY_IMAG_TOL: f64 = 1e-9;
/// Largest relative pair distance accepted when pairing the doubly
/// degenerate eigenvalues of the embedding.
pub const PAIRING_TOL: f64 = 1e-6;
/// `|Im λ| ≤ tol·(1 + |λ|)` classifies an eigenvalue as real (n > 2 only).
pub const CLASSIFY_TOL: f64 = 1e-8;
/// Faddeev–LeVerrier is used up to this size; beyond it the reduced
/// polynomial is rebuilt from paired eigenvalues.
pub const FL_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixKind {
    General,
    SplitComplex,
    SplitHermitian,
    SplitComplexHermitian,
}

impl MatrixKind {
    pub fn is_hermitian(self) -> bool {
        matches!(self, Self::SplitHermitian | Self::SplitComplexHermitian)
    }

    pub fn is_split_complex(self) -> bool {
        matches!(self, Self::SplitComplex | Self::SplitComplexHermitian)
    }
}

/// Square matrix of split-quaternions, row-major, with an inferred kind.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitMatrix {
    n: usize,
    entries: Vec<SplitQuaternion>,
    kind: MatrixKind,
}

impl SplitMatrix {
    /// Builds a matrix and infers its kind exactly.
    pub fn new(n: usize, entries: Vec<SplitQuaternion>) -> Result<Self> {
        Self::with_tolerance(n, entries, 0.0)
    }

    /// Builds a matrix, inferring the kind with an absolute component
    /// tolerance. Entries are kept as given.
    pub fn with_tolerance(n: usize, entries: Vec<SplitQuaternion>, tol: f64) -> Result<Self> {
        if n == 0 {
            return Err(domain("matrix size must be positive"));
        }
        if entries.len() != n * n {
            return Err(Error::Dimension { expected: n * n, found: entries.len() });
        }
        let mut m = Self { n, entries, kind: MatrixKind::General };
        m.kind = m.infer_kind(tol);
        Ok(m)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> SplitQuaternion) -> Self {
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Self::new(n, entries).expect("size is consistent")
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| SplitQuaternion::ZERO)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| if r == c { SplitQuaternion::ONE } else { SplitQuaternion::ZERO })
    }

    /// `[[Λ₁, δ - jγ], [δ + jγ, Λ₂]]`
    pub fn split_complex_2x2(l1: f64, l2: f64, delta: f64, gamma: f64) -> Self {
        let h12 = SplitComplex::new(delta, -gamma).to_quaternion();
        Self::new(2, vec![SplitQuaternion::real(l1), h12, h12.conj(), SplitQuaternion::real(l2)])
            .expect("2x2")
    }

    /// `[[Λ₁, δ - iμ - jγ - kσ], [δ + iμ + jγ + kσ, Λ₂]]`
    pub fn split_quaternion_2x2(l1: f64, l2: f64, delta: f64, mu: f64, gamma: f64, sigma: f64) -> Self {
        let h12 = SplitQuaternion::new(delta, -mu, -gamma, -sigma);
        Self::new(2, vec![SplitQuaternion::real(l1), h12, h12.conj(), SplitQuaternion::real(l2)])
            .expect("2x2")
    }

    fn infer_kind(&self, tol: f64) -> MatrixKind {
        let sc = self.entries.iter().all(|e| e.p1.abs() <= tol && e.p3.abs() <= tol);
        let herm = self.hermitian_defect() <= tol;
        match (sc, herm) {
            (true, true) => MatrixKind::SplitComplexHermitian,
            (false, true) => MatrixKind::SplitHermitian,
            (true, false) => MatrixKind::SplitComplex,
            (false, false) => MatrixKind::General,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn entries(&self) -> &[SplitQuaternion] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> SplitQuaternion {
        self.entries[r * self.n + c]
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0f64, |m, e| m.max(e.max_abs()))
    }

    fn map_transposed(&self, f: impl Fn(SplitQuaternion) -> SplitQuaternion) -> Self {
        Self::from_fn(self.n, |r, c| f(self.get(c, r)))
    }

    pub fn transpose(&self) -> Self {
        self.map_transposed(|e| e)
    }

    /// `A†`: transpose with split-quaternionic conjugation of every entry.
    pub fn adjoint(&self) -> Self {
        self.map_transposed(SplitQuaternion::conj)
    }

    /// `A^I`: transpose with conjugation of the `i` component only.
    pub fn adjoint_i(&self) -> Self {
        self.map_transposed(SplitQuaternion::conj_i)
    }

    /// Largest component of `M - M†`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for r in 0..n {
            for c in r..n {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).max_abs());
            }
        }
        worst
    }

    pub fn is_split_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol
    }

    pub fn trace(&self) -> SplitQuaternion {
        (0..self.n).fold(SplitQuaternion::ZERO, |acc, i| acc + self.get(i, i))
    }

    pub fn mul_vec(&self, v: &SplitVector) -> Result<SplitVector> {
        if v.len() != self.n {
            return Err(Error::Dimension { expected: self.n, found: v.len() });
        }
        let comps = (0..self.n)
            .map(|r| {
                (0..self.n).fold(SplitQuaternion::ZERO, |acc, c| acc + self.get(r, c) * v.components[c])
            })
            .collect();
        Ok(SplitVector::new(comps))
    }

    /// `2n × 2n` complex matrix whose `(r, c)` block is the complex
    /// representation of entry `(r, c)`.
    pub fn complex_rep(&self) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                let b = self.get(r, c).complex_rep();
                for i in 0..2 {
                    for j in 0..2 {
                        out[(2 * r + i, 2 * c + j)] = b[i][j];
                    }
                }
            }
        }
        out
    }

    fn require_hermitian(&self) -> Result<()> {
        if self.kind.is_hermitian() {
            Ok(())
        } else {
            Err(domain("matrix is not split-Hermitian"))
        }
    }

    /// Monic real polynomial `q` of degree `n` with `char(rep(M)) = q²`,
    /// ascending coefficients.
    pub fn reduced_char_poly(&self) -> Result<Vec<f64>> {
        self.require_hermitian()?;
        if self.n > FL_MAX_N {
            let (pairs, _) = self.embedding_eigen_pairs()?;
            let c = linalg::poly_from_roots(&pairs);
            return Ok(c.iter().map(|z| z.re).collect());
        }
        let full = linalg::faddeev_leverrier(&self.complex_rep());
        let scale = full.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
        let max_imag = full.iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
        if max_imag > CHARPOLY_IMAG_TOL * scale {
            return Err(numerical(format!(
                "embedding characteristic polynomial not real: imaginary part {max_imag:e}"
            )));
        }
        let p: Vec<f64> = full.iter().map(|z| z.re).collect();
        poly_sqrt(&p, self.n)
    }

    /// Eigenvalues of the embedding, paired up. Returns the `n` pair means
    /// and the worst relative pair distance.
    pub fn embedding_eigen_pairs(&self) -> Result<(Vec<Complex64>, f64)> {
        let ev = linalg::eigenvalues(&self.complex_rep())?;
        linalg::pair_degenerate(&ev, PAIRING_TOL)
    }

    /// Monic quadratic factor for `n = 2`, computed in closed form:
    /// `λ² - (a + d)λ + ad - |h|²` with `h` the (1,2) entry.
    fn quadratic_factor(&self) -> [f64; 3] {
        let a = self.get(0, 0).p0;
        let d = self.get(1, 1).p0;
        let h = self.get(0, 1);
        [a * d - h.norm_sq(), -(a + d), 1.0]
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        self.require_hermitian()?;
        match self.n {
            1 => Ok(Spectrum::new(vec![self.get(0, 0).p0], Vec::new())),
            2 => {
                let [c0, c1, _] = self.quadratic_factor();
                Ok(Spectrum::from_monic_quadratic(c1, c0))
            }
            _ => {
                let (pairs, _) = self.embedding_eigen_pairs()?;
                Spectrum::from_values(&pairs, CLASSIFY_TOL)
            }
        }
    }

    /// Split-quaternionic eigenvector for a real eigenvalue, taken from a
    /// complex null vector `w` of `rep(M) - λ` with each component pair
    /// mapped back through the first column of the 2×2 representation.
    pub fn eigenvector_reconstruct(&self, lambda: f64) -> Result<SplitVector> {
        self.require_hermitian()?;
        let rep = self.complex_rep();
        let norm = linalg::frobenius(&rep);
        let spec = self.spectrum()?;
        let scale = spec.spectral_radius().max(1.0);
        let mut dists: Vec<f64> = spec.real_eigs.iter().map(|e| (e - lambda).abs()).collect();
        dists.sort_by(f64::total_cmp);
        match dists.first() {
            Some(&d) if d <= 1e-8 * scale => {}
            _ => return Err(domain(format!("{lambda} is not a real eigenvalue"))),
        }
        if dists.get(1).is_some_and(|&d| d <= 1e-8 * scale) {
            return Err(numerical("eigenvalue is degenerate; eigenvector not unique"));
        }
        let (w, _) = linalg::null_vector(&rep, Complex64::new(lambda, 0.0));
        let u = SplitVector::new(
            (0..self.n)
                .map(|m| SplitQuaternion::from_rep_column(w[2 * m], w[2 * m + 1]))
                .collect(),
        );
        let residual = self.eigen_residual(&u, lambda)?;
        if residual > 1e-8 * norm.max(f64::MIN_POSITIVE) {
            return Err(numerical(format!(
                "eigenvector residual {residual:e} too large (defective eigenvalue?)"
            )));
        }
        Ok(u)
    }

    /// Largest component of `M u - λ u`.
    pub fn eigen_residual(&self, u: &SplitVector, lambda: f64) -> Result<f64> {
        let mu = self.mul_vec(u)?;
        Ok(mu
            .components
            .iter()
            .zip(&u.components)
            .map(|(a, b)| (*a - *b * lambda).max_abs())
            .fold(0.0, f64::max))
    }
}

impl Mul for &SplitMatrix {
    type Output = SplitMatrix;
    fn mul(self, rhs: &SplitMatrix) -> SplitMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        let n = self.n;
        SplitMatrix::from_fn(n, |r, c| {
            (0..n).fold(SplitQuaternion::ZERO, |acc, k| acc + self.get(r, k) * rhs.get(k, c))
        })
    }
}

/// Square root of a monic degree-`2n` polynomial by coefficient matching
/// from the leading term; the lower half is used as a consistency check.
fn poly_sqrt(p: &[f64], n: usize) -> Result<Vec<f64>> {
    debug_assert_eq!(p.len(), 2 * n + 1);
    // Work in descending order: d[k] is the coefficient of λ^{2n-k}.
    let d: Vec<f64> = p.iter().rev().copied().collect();
    let mut q = vec![0.0; n + 1];
    q[0] = 1.0;
    for k in 1..=n {
        let cross: f64 = (1..k).map(|i| q[i] * q[k - i]).sum();
        q[k] = (d[k] - cross) / 2.0;
    }
    let scale = p.iter().map(|c| c.abs()).fold(1.0f64, f64::max);
    for k in n + 1..=2 * n {
        let sq: f64 = (k - n..=n).map(|i| q[i] * q[k - i]).sum();
        if (sq - d[k]).abs() > 1e-7 * scale {
            return Err(numerical(format!(
                "embedding polynomial is not a perfect square (defect {:e})",
                (sq - d[k]).abs()
            )));
        }
    }
    q.reverse();
    Ok(q)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SplitVector {
    pub components: Vec<SplitQuaternion>,
}

impl SplitVector {
    pub fn new(components: Vec<SplitQuaternion>) -> Self {
        Self { components }
    }

    pub fn basis(n: usize, k: usize) -> Self {
        let mut c = vec![SplitQuaternion::ZERO; n];
        c[k] = SplitQuaternion::ONE;
        Self::new(c)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Indefinite inner product `(u, v) = Σ ū_n v_n`.
pub fn inner_product(u: &SplitVector, v: &SplitVector) -> Result<SplitQuaternion> {
    if u.len() != v.len() {
        return Err(Error::Dimension { expected: u.len(), found: v.len() });
    }
    Ok(u.components
        .iter()
        .zip(&v.components)
        .fold(SplitQuaternion::ZERO, |acc, (a, b)| acc + a.conj() * *b))
}

/// Eigenvalues of a matrix with real characteristic polynomial: real values
/// and complex-conjugate pairs stored as `(re, im)` with `im > 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub real_eigs: Vec<f64>,
    pub complex_pairs: Vec<(f64, f64)>,
    pub n: usize,
}

impl Spectrum {
    pub fn new(mut real_eigs: Vec<f64>, mut complex_pairs: Vec<(f64, f64)>) -> Self {
        debug_assert!(complex_pairs.iter().all(|p| p.1 > 0.0));
        real_eigs.sort_by(f64::total_cmp);
        complex_pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let n = real_eigs.len() + 2 * complex_pairs.len();
        Self { real_eigs, complex_pairs, n }
    }

    /// Roots of `λ² + bλ + c`, classified by the sign of the discriminant.
    pub fn from_monic_quadratic(b: f64, c: f64) -> Self {
        let mid = -b / 2.0;
        let disc = mid * mid - c;
        if disc >= 0.0 {
            let r = disc.sqrt();
            Self::new(vec![mid - r, mid + r], Vec::new())
        } else {
            Self::new(Vec::new(), vec![(mid, (-disc).sqrt())])
        }
    }

    /// Classifies a conjugation-closed list of eigenvalues: real when
    /// `|Im λ| ≤ tol (1 + |λ|)`, otherwise matched with its conjugate.
    pub fn from_values(values: &[Complex64], tol: f64) -> Result<Self> {
        let mut real = Vec::new();
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        for &v in values {
            if v.im.abs() <= tol * (1.0 + v.norm()) {
                real.push(v.re);
            } else if v.im > 0.0 {
                upper.push(v);
            } else {
                lower.push(v.conj());
            }
        }
        if upper.len() != lower.len() {
            return Err(numerical("complex eigenvalues are not closed under conjugation"));
        }
        let mut used = vec![false; lower.len()];
        let mut pairs = Vec::with_capacity(upper.len());
        for u in upper {
            let (j, _) = lower
                .iter()
                .enumerate()
                .filter(|(j, _)| !used[*j])
                .map(|(j, l)| (j, (u - l).norm()))
                .fold((0, f64::INFINITY), |acc, it| if it.1 < acc.1 { it } else { acc });
            used[j] = true;
            let m = (u + lower[j]) * 0.5;
            pairs.push((m.re, m.im));
        }
        Ok(Self::new(real, pairs))
    }

    pub fn is_all_real(&self) -> bool {
        self.complex_pairs.is_empty()
    }

    /// All `n` eigenvalues: reals ascending, then each pair as `λ`, `λ̄`.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = self.real_eigs.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        for &(re, im) in &self.complex_pairs {
            out.push(Complex64::new(re, im));
            out.push(Complex64::new(re, -im));
        }
        out
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Real matrix as complex, for the eigen solver.
pub fn real_to_complex(a: &DMatrix<f64>) -> CMatrix {
    a.map(|x| Complex64::new(x, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::{sample_gsqe, RngStream};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Q = SplitQuaternion;

    fn random_q(rng: &mut ChaCha8Rng) -> Q {
        Q::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        )
    }

    fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> SplitMatrix {
        SplitMatrix::from_fn(n, |_, _| random_q(rng))
    }

    fn random_vector(n: usize, rng: &mut ChaCha8Rng) -> SplitVector {
        SplitVector::new((0..n).map(|_| random_q(rng)).collect())
    }

    fn max_diff(a: &SplitMatrix, b: &SplitMatrix) -> f64 {
        a.entries().iter().zip(b.entries()).map(|(x, y)| (*x - *y).max_abs()).fold(0.0, f64::max)
    }

    #[test]
    fn adjoints() {
        let d = SplitMatrix::from_fn(3, |r, c| if r == c { Q::real(r as f64 + 1.0) } else { Q::ZERO });
        assert_eq!(d.adjoint(), d);

        let mut e = vec![Q::ZERO; 4];
        e[1] = Q::J;
        let m = SplitMatrix::new(2, e).unwrap();
        assert_eq!(m.adjoint().get(1, 0), -Q::J);

        let mut e = vec![Q::ZERO; 4];
        e[1] = Q::I + Q::J;
        let m = SplitMatrix::new(2, e).unwrap();
        assert_eq!(m.adjoint_i().get(1, 0), -Q::I + Q::J);

        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let m = random_matrix(4, &mut rng);
            assert_eq!(m.adjoint().adjoint(), m);
            assert_eq!(m.adjoint_i().adjoint_i(), m);
        }
    }

    #[test]
    fn hermiticity() {
        let h = SplitMatrix::split_complex_2x2(0.3, -1.0, 0.5, 2.0);
        assert!(h.is_split_hermitian(0.0));
        assert_eq!(h.kind(), MatrixKind::SplitComplexHermitian);
        let mut e = vec![Q::ZERO; 4];
        e[0] = Q::I;
        let m = SplitMatrix::new(2, e).unwrap();
        assert!(!m.is_split_hermitian(1e-12));
        let q = SplitMatrix::split_quaternion_2x2(1.0, 2.0, 0.1, 0.2, 0.3, 0.4);
        assert_eq!(q.kind(), MatrixKind::SplitHermitian);
        let mut rng = RngStream::new(5, 0);
        assert!(sample_gsqe(4, &mut rng).is_split_hermitian(0.0));
    }

    #[test]
    fn inner_product_cases() {
        let e0 = SplitVector::basis(3, 0);
        assert_eq!(inner_product(&e0, &e0).unwrap(), Q::ONE);
        let j = SplitVector::new(vec![Q::J]);
        assert_eq!(inner_product(&j, &j).unwrap(), Q::real(-1.0));
        assert!(matches!(
            inner_product(&e0, &SplitVector::basis(2, 0)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn adjoint_relation_of_inner_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let m = random_matrix(4, &mut rng);
            let u = random_vector(4, &mut rng);
            let v = random_vector(4, &mut rng);
            let lhs = inner_product(&u, &m.mul_vec(&v).unwrap()).unwrap();
            let rhs = inner_product(&m.adjoint().mul_vec(&u).unwrap(), &v).unwrap();
            assert!((lhs - rhs).max_abs() < 1e-12);
        }
    }

    #[test]
    fn complex_rep_cases() {
        let m = SplitMatrix::new(1, vec![Q::J]).unwrap();
        let r = m.complex_rep();
        assert_eq!(r[(0, 1)], Complex64::new(1.0, 0.0));
        assert_eq!(r[(1, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(r[(0, 0)], Complex64::new(0.0, 0.0));

        let (l1, l2, d, g) = (1.0, 2.0, 3.0, 4.0);
        let r = SplitMatrix::split_complex_2x2(l1, l2, d, g).complex_rep();
        let want = [
            [l1, 0.0, d, -g],
            [0.0, l1, -g, d],
            [d, g, l2, 0.0],
            [g, d, 0.0, l2],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(r[(i, j)], Complex64::new(want[i][j], 0.0));
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = random_matrix(3, &mut rng);
            let b = random_matrix(3, &mut rng);
            let lhs = (&a * &b).complex_rep();
            let rhs = a.complex_rep() * b.complex_rep();
            assert!(linalg::frobenius(&(lhs - rhs)) < 1e-12);
        }
    }

    #[test]
    fn reduced_char_poly_cases() {
        let (l1, l2, d, g) = (0.7, -1.3, 0.4, 0.9);
        let q = SplitMatrix::split_complex_2x2(l1, l2, d, g).reduced_char_poly().unwrap();
        let want = [l1 * l2 - d * d + g * g, -(l1 + l2), 1.0];
        for (a, b) in q.iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(SplitMatrix::zeros(3).reduced_char_poly().unwrap(), vec![0.0, 0.0, 0.0, 1.0]);

        // q² against an independent char poly of the embedding
        let mut rng = RngStream::new(11, 4);
        let m = sample_gsqe(3, &mut rng);
        let q = m.reduced_char_poly().unwrap();
        let ev = linalg::eigenvalues(&m.complex_rep()).unwrap();
        let full = linalg::poly_from_roots(&ev);
        let mut sq = vec![0.0; 7];
        for i in 0..4 {
            for j in 0..4 {
                sq[i + j] += q[i] * q[j];
            }
        }
        let scale = full.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for (a, b) in sq.iter().zip(&full) {
            assert!((a - b.re).abs() < 1e-8 * scale);
        }

        let general = SplitMatrix::from_fn(2, |_, _| Q::I);
        assert!(matches!(general.reduced_char_poly(), Err(Error::Domain(_))));
    }

    #[test]
    fn spectrum_cases() {
        let s = SplitMatrix::split_complex_2x2(0.0, 0.0, 0.0, 1.0).spectrum().unwrap();
        assert!(s.real_eigs.is_empty());
        assert_eq!(s.complex_pairs, vec![(0.0, 1.0)]);

        let s = SplitMatrix::split_complex_2x2(1.0, -1.0, 1.0, 0.0).spectrum().unwrap();
        let r2 = 2f64.sqrt();
        assert!((s.real_eigs[0] + r2).abs() < 1e-15 && (s.real_eigs[1] - r2).abs() < 1e-15);

        let s = SplitMatrix::split_complex_2x2(3.0, -2.0, 0.0, 0.0).spectrum().unwrap();
        assert_eq!(s.real_eigs, vec![-2.0, 3.0]);
    }

    #[test]
    fn spectrum_general_route_matches_embedding() {
        let mut rng = RngStream::new(8, 1);
        for n in [3, 4, 6] {
            for _ in 0..20 {
                let m = sample_gsqe(n, &mut rng);
                let s = m.spectrum().unwrap();
                assert_eq!(s.n, n);
                let mut doubled = s.eigenvalues();
                doubled.extend(s.eigenvalues());
                let emb = linalg::eigenvalues(&m.complex_rep()).unwrap();
                assert!(linalg::multiset_distance(&doubled, &emb).unwrap() < 1e-6);
            }
        }
    }

    #[test]
    fn eigenvectors() {
        let h = SplitMatrix::split_complex_2x2(2.0, -1.0, 0.0, 0.0);
        let u = h.eigenvector_reconstruct(2.0).unwrap();
        assert!(u.components[1].max_abs() < 1e-12);
        assert!(u.components[0].max_abs() > 0.1);

        let h = SplitMatrix::split_complex_2x2(1.0, -1.0, 1.0, 0.0);
        let l = 2f64.sqrt();
        let u = h.eigenvector_reconstruct(l).unwrap();
        assert!(h.eigen_residual(&u, l).unwrap() < 1e-10);

        assert!(matches!(h.eigenvector_reconstruct(0.3), Err(Error::Domain(_))));

        let mut rng = RngStream::new(21, 0);
        let mut checked = 0;
        while checked < 50 {
            let m = sample_gsqe(2, &mut rng);
            let s = m.spectrum().unwrap();
            if !s.is_all_real() {
                continue;
            }
            let u1 = m.eigenvector_reconstruct(s.real_eigs[0]).unwrap();
            let u2 = m.eigenvector_reconstruct(s.real_eigs[1]).unwrap();
            assert!(inner_product(&u1, &u2).unwrap().max_abs() < 1e-8);
            checked += 1;
        }
    }

    #[test]
    fn matrix_product_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = random_matrix(3, &mut rng);
        let b = random_matrix(3, &mut rng);
        let c = random_matrix(3, &mut rng);
        assert!(max_diff(&(&(&a * &b) * &c), &(&a * &(&b * &c))) < 1e-12);
    }
}
