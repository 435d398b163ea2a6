//! Split-complex and split-quaternion numbers.
//!
//! Split-complex numbers are `x + j y` with `j² = +1`. Split-quaternions
//! are `p0 + i p1 + j p2 + k p3` with `i² = -1`, `j² = k² = ijk = +1`.
//! Both carry an indefinite norm (`x² - y²`, resp. `p0² + p1² - p2² - p3²`)
//! and a faithful 2×2 matrix representation (real, resp. complex).
//!
//! The split-complex numbers sit inside the split-quaternions as the span of
//! `{1, j}`; [`SplitComplex::to_quaternion`] is that inclusion.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// `x + j y` with `j² = +1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SplitComplex {
    pub x: f64,
    pub y: f64,
}

impl SplitComplex {
    pub const ZERO: Self = Self { x: 0.0, y: 0.0 };
    pub const ONE: Self = Self { x: 1.0, y: 0.0 };
    pub const J: Self = Self { x: 0.0, y: 1.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn conj(self) -> Self {
        Self::new(self.x, -self.y)
    }

    /// Indefinite norm `z z̄ = x² - y²`; positive, null or negative.
    pub fn norm_sq(self) -> f64 {
        self.x * self.x - self.y * self.y
    }

    /// Conjugate together with the indefinite norm.
    pub fn conj_norm(self) -> (Self, f64) {
        (self.conj(), self.norm_sq())
    }

    /// Real matrix `[[x, y], [y, x]]`.
    pub fn real_rep(self) -> [[f64; 2]; 2] {
        [[self.x, self.y], [self.y, self.x]]
    }

    pub fn to_quaternion(self) -> SplitQuaternion {
        SplitQuaternion::new(self.x, 0.0, self.y, 0.0)
    }
}

impl Add for SplitComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for SplitComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for SplitComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl Mul for SplitComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.x * rhs.x + self.y * rhs.y,
            self.x * rhs.y + self.y * rhs.x,
        )
    }
}

impl Mul<f64> for SplitComplex {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.x * rhs, self.y * rhs)
    }
}

impl fmt::Display for SplitComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}j", self.x, self.y)
    }
}

/// `p0 + i p1 + j p2 + k p3` with `i² = -1`, `j² = k² = ijk = +1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SplitQuaternion {
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl SplitQuaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(p0: f64, p1: f64, p2: f64, p3: f64) -> Self {
        Self { p0, p1, p2, p3 }
    }

    pub const fn real(p0: f64) -> Self {
        Self::new(p0, 0.0, 0.0, 0.0)
    }

    /// Ordinary complex number `a + i b` as a split-quaternion.
    pub fn from_complex(z: Complex64) -> Self {
        Self::new(z.re, z.im, 0.0, 0.0)
    }

    pub fn components(self) -> [f64; 4] {
        [self.p0, self.p1, self.p2, self.p3]
    }

    pub fn conj(self) -> Self {
        Self::new(self.p0, -self.p1, -self.p2, -self.p3)
    }

    /// Conjugation with respect to `i` only: `(p0, -p1, p2, p3)`.
    pub fn conj_i(self) -> Self {
        Self::new(self.p0, -self.p1, self.p2, self.p3)
    }

    /// Indefinite norm `p̄ p = p0² + p1² - p2² - p3²`.
    pub fn norm_sq(self) -> f64 {
        self.p0 * self.p0 + self.p1 * self.p1 - self.p2 * self.p2 - self.p3 * self.p3
    }

    pub fn conj_norm(self) -> (Self, f64) {
        (self.conj(), self.norm_sq())
    }

    /// Sum of squares of all four components.
    pub fn euclid_sq(self) -> f64 {
        self.p0 * self.p0 + self.p1 * self.p1 + self.p2 * self.p2 + self.p3 * self.p3
    }

    /// Largest absolute component.
    pub fn max_abs(self) -> f64 {
        self.components().iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    pub fn is_real(self) -> bool {
        self.p1 == 0.0 && self.p2 == 0.0 && self.p3 == 0.0
    }

    /// True when the entry lies in the split-complex subalgebra span{1, j}.
    pub fn is_split_complex(self) -> bool {
        self.p1 == 0.0 && self.p3 == 0.0
    }

    /// Complex matrix `[[p0 + i p1, p2 + i p3], [p2 - i p3, p0 - i p1]]`.
    pub fn complex_rep(self) -> [[Complex64; 2]; 2] {
        [
            [
                Complex64::new(self.p0, self.p1),
                Complex64::new(self.p2, self.p3),
            ],
            [
                Complex64::new(self.p2, -self.p3),
                Complex64::new(self.p0, -self.p1),
            ],
        ]
    }

    /// Inverse of the first column of [`complex_rep`](Self::complex_rep):
    /// `(w0, w1) = (p0 + i p1, p2 - i p3)`.
    pub fn from_rep_column(w0: Complex64, w1: Complex64) -> Self {
        Self::new(w0.re, w0.im, w1.re, -w1.im)
    }
}

impl Add for SplitQuaternion {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.p0 + r.p0, self.p1 + r.p1, self.p2 + r.p2, self.p3 + r.p3)
    }
}

impl AddAssign for SplitQuaternion {
    fn add_assign(&mut self, r: Self) {
        *self = *self + r;
    }
}

impl Sub for SplitQuaternion {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.p0 - r.p0, self.p1 - r.p1, self.p2 - r.p2, self.p3 - r.p3)
    }
}

impl Neg for SplitQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.p0, -self.p1, -self.p2, -self.p3)
    }
}

// Table: ij = k, ji = -k, jk = -i, kj = i, ki = j, ik = -j.
impl Mul for SplitQuaternion {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        let p = self;
        Self::new(
            p.p0 * q.p0 - p.p1 * q.p1 + p.p2 * q.p2 + p.p3 * q.p3,
            p.p0 * q.p1 + p.p1 * q.p0 - p.p2 * q.p3 + p.p3 * q.p2,
            p.p0 * q.p2 + p.p2 * q.p0 + p.p3 * q.p1 - p.p1 * q.p3,
            p.p0 * q.p3 + p.p3 * q.p0 + p.p1 * q.p2 - p.p2 * q.p1,
        )
    }
}

impl Mul<f64> for SplitQuaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.p0 * s, self.p1 * s, self.p2 * s, self.p3 * s)
    }
}

impl From<SplitComplex> for SplitQuaternion {
    fn from(z: SplitComplex) -> Self {
        z.to_quaternion()
    }
}

impl fmt::Display for SplitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:+}i {:+}j {:+}k",
            self.p0, self.p1, self.p2, self.p3
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Q = SplitQuaternion;

    fn mat_mul2(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        out
    }

    fn rmat_mul2(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
        let mut out = [[0.0; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        out
    }

    fn max_diff(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> f64 {
        let mut m = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                m = m.max((a[r][c] - b[r][c]).norm());
            }
        }
        m
    }

    #[test]
    fn split_complex_products() {
        assert_eq!(SplitComplex::J * SplitComplex::J, SplitComplex::ONE);
        let z = SplitComplex::new(2.5, -1.25);
        assert_eq!(z * SplitComplex::ONE, z);
        // (1 + j)(1 - j) = 1 - j² = 0
        let zero = SplitComplex::new(1.0, 1.0) * SplitComplex::new(1.0, -1.0);
        assert_eq!(zero, SplitComplex::ZERO);
    }

    #[test]
    fn split_complex_conj_norm() {
        let (c, n) = SplitComplex::new(3.0, 2.0).conj_norm();
        assert_eq!(c, SplitComplex::new(3.0, -2.0));
        assert_eq!(n, 5.0);
        assert_eq!(SplitComplex::new(1.0, 1.0).norm_sq(), 0.0);
        assert_eq!(SplitComplex::new(0.0, 2.0).norm_sq(), -4.0);
        let z = SplitComplex::new(0.7, -1.9);
        assert_eq!(z * z.conj(), SplitComplex::new(z.norm_sq(), 0.0));
    }

    #[test]
    fn split_complex_real_rep() {
        assert_eq!(SplitComplex::new(0.3, 0.4).real_rep(), [[0.3, 0.4], [0.4, 0.3]]);
        assert_eq!(SplitComplex::ONE.real_rep(), [[1.0, 0.0], [0.0, 1.0]]);
        let r = SplitComplex::new(2.0, 1.0).real_rep();
        let det = r[0][0] * r[1][1] - r[0][1] * r[1][0];
        assert_eq!(det, 3.0);
        assert_eq!(det, SplitComplex::new(2.0, 1.0).norm_sq());
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(Q::I * Q::I, -Q::ONE);
        assert_eq!(Q::J * Q::J, Q::ONE);
        assert_eq!(Q::K * Q::K, Q::ONE);
        assert_eq!(Q::I * Q::J * Q::K, Q::ONE);
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::I, -Q::K);
        assert_eq!(Q::J * Q::K, -Q::I);
        assert_eq!(Q::K * Q::J, Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        assert_eq!(Q::I * Q::K, -Q::J);
    }

    #[test]
    fn table_agrees_with_complex_rep() {
        let basis = [Q::ONE, Q::I, Q::J, Q::K];
        for a in basis {
            for b in basis {
                let lhs = (a * b).complex_rep();
                let rhs = mat_mul2(a.complex_rep(), b.complex_rep());
                assert_eq!(max_diff(lhs, rhs), 0.0, "{a} * {b}");
            }
        }
    }

    #[test]
    fn quaternion_conj_norm() {
        let (c, n) = Q::ONE.conj_norm();
        assert_eq!(c, Q::ONE);
        assert_eq!(n, 1.0);
        assert_eq!(Q::J.norm_sq(), -1.0);
        assert_eq!(Q::new(1.0, 1.0, 1.0, 1.0).norm_sq(), 0.0);
    }

    #[test]
    fn complex_rep_layout() {
        let r = Q::new(1.0, 2.0, 3.0, 4.0).complex_rep();
        assert_eq!(r[0][0], Complex64::new(1.0, 2.0));
        assert_eq!(r[0][1], Complex64::new(3.0, 4.0));
        assert_eq!(r[1][0], Complex64::new(3.0, -4.0));
        assert_eq!(r[1][1], Complex64::new(1.0, -2.0));
        let one = Q::ONE.complex_rep();
        assert_eq!(one[0][0], Complex64::new(1.0, 0.0));
        assert_eq!(one[0][1], Complex64::new(0.0, 0.0));
        let q = Q::new(0.3, -1.2, 0.8, 2.0);
        let (w0, w1) = (q.complex_rep()[0][0], q.complex_rep()[1][0]);
        assert_eq!(Q::from_rep_column(w0, w1), q);
    }

    fn quat() -> impl Strategy<Value = Q> {
        (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64)
            .prop_map(|(a, b, c, d)| Q::new(a, b, c, d))
    }

    fn sc() -> impl Strategy<Value = SplitComplex> {
        (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(x, y)| SplitComplex::new(x, y))
    }

    fn close(a: Q, b: Q, tol: f64) -> bool {
        (a - b).max_abs() <= tol
    }

    proptest! {
        #[test]
        fn quaternion_rep_is_homomorphism(p in quat(), q in quat()) {
            let d = max_diff((p * q).complex_rep(), mat_mul2(p.complex_rep(), q.complex_rep()));
            prop_assert!(d < 1e-12);
            let r = p.complex_rep();
            let det = r[0][0] * r[1][1] - r[0][1] * r[1][0];
            prop_assert!((det.re - p.norm_sq()).abs() < 1e-12 && det.im.abs() < 1e-12);
            prop_assert!(((r[0][0] + r[1][1]).re - 2.0 * p.p0).abs() < 1e-12);
        }

        #[test]
        fn split_complex_rep_is_homomorphism(a in sc(), b in sc()) {
            let lhs = (a * b).real_rep();
            let rhs = rmat_mul2(a.real_rep(), b.real_rep());
            for r in 0..2 { for c in 0..2 { prop_assert!((lhs[r][c] - rhs[r][c]).abs() < 1e-12); } }
            prop_assert!(((a * b) - (b * a)).x == 0.0);
            // embedding into the split-quaternions is multiplicative
            prop_assert!(close((a * b).to_quaternion(), a.to_quaternion() * b.to_quaternion(), 1e-12));
        }

        #[test]
        fn norm_is_multiplicative(p in quat(), q in quat()) {
            let lhs = (p * q).norm_sq();
            let rhs = p.norm_sq() * q.norm_sq();
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()));
            prop_assert!(close(p.conj() * p, Q::real(p.norm_sq()), 1e-12));
        }

        #[test]
        fn conj_is_anti_automorphism(p in quat(), q in quat()) {
            prop_assert!(close((p * q).conj(), q.conj() * p.conj(), 1e-12));
        }

        #[test]
        fn associativity(p in quat(), q in quat(), r in quat()) {
            prop_assert!(close((p * q) * r, p * (q * r), 1e-12));
        }
    }
}
