//! Error functions. `erf`/`erfc` come from `libm` (musl's implementation,
//! sub-ulp on the real line); `erfcx` is built on top of them.

use std::f64::consts::PI;

pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Scaled complementary error function `exp(x²) erfc(x)`.
///
/// Stays finite where `exp(x²)` overflows and `erfc(x)` underflows. The
/// factor `exp(x²)` is evaluated as `exp(hi) (1 + lo)` from an exact split
/// `x² = hi + lo`, so the product keeps full relative accuracy.
pub fn erfcx(x: f64) -> f64 {
    if x < 0.0 {
        return 2.0 * exp_sq(x) - erfcx(-x);
    }
    if x < 26.0 {
        return exp_sq(x) * erfc(x);
    }
    // Asymptotic series 1/(x√π) Σ (−1)^k (2k−1)!! / (2x²)^k.
    let t = 1.0 / (2.0 * x * x);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..8 {
        term *= -((2 * k - 1) as f64) * t;
        sum += term;
    }
    sum / (x * PI.sqrt())
}

/// `exp(x²)` without the relative error from rounding `x²`.
fn exp_sq(x: f64) -> f64 {
    let hi = x * x;
    let lo = x.mul_add(x, -hi);
    hi.exp() * (1.0 + lo)
}
