//! Empirical statistics over Monte Carlo spectra and the numerical
//! integration used to normalize the analytic densities.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::matrix::Spectrum;

// 15-point Kronrod nodes on [-1, 1] (non-negative half) and weights; the odd
// indices are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_INTERVALS: usize = 50_000;

/// One Gauss–Kronrod (7, 15) panel: returns (Kronrod estimate, |K − G|).
fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Adaptive Gauss–Kronrod quadrature of `f` over `[a, b]` with absolute
/// error target `tol`. Intervals are bisected until each carries at most its
/// length-proportional share of the tolerance.
pub fn quad(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(domain("quadrature tolerance must be positive"));
    }
    if a == b {
        return Ok(0.0);
    }
    let (a, b, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let width = b - a;
    let mut stack = vec![(a, b)];
    let mut total = 0.0;
    let mut intervals = 0usize;
    while let Some((lo, hi)) = stack.pop() {
        intervals += 1;
        if intervals > MAX_INTERVALS {
            return Err(Error::Accuracy(format!(
                "quadrature on [{a}, {b}] exhausted its subdivision budget"
            )));
        }
        let (est, err) = gk15(&mut f, lo, hi);
        if !est.is_finite() {
            return Err(domain(format!("integrand not finite on [{lo}, {hi}]")));
        }
        let share = tol * (hi - lo) / width;
        let floor = 50.0 * f64::EPSILON * est.abs();
        let mid = 0.5 * (lo + hi);
        if err <= share.max(floor) || mid <= lo || mid >= hi {
            total += est;
        } else {
            stack.push((mid, hi));
            stack.push((lo, mid));
        }
    }
    Ok(sign * total)
}

/// Result of integrating over the real line after truncation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncatedIntegral {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
}

/// Point beyond which `|f| < 1e−16 · peak`, searching from `start` in steps
/// of `step` (negative steps search leftwards).
pub fn truncation_point(f: &impl Fn(f64) -> f64, peak: f64, start: f64, step: f64) -> f64 {
    let mut x = start;
    for _ in 0..10_000 {
        if f(x).abs() < 1e-16 * peak && f(x + step).abs() < 1e-16 * peak {
            return x;
        }
        x += step;
    }
    x
}

/// `∫_{−∞}^{∞} f`, truncated where the integrand falls below `1e−16` of its
/// peak, with a breakpoint at 0.
pub fn integrate_real_line(f: impl Fn(f64) -> f64, tol: f64) -> Result<TruncatedIntegral> {
    let peak = (-800..=800)
        .map(|i| f(i as f64 * 0.01).abs())
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let hi = truncation_point(&f, peak, 0.25, 0.25);
    let lo = truncation_point(&f, peak, -0.25, -0.25);
    let value = quad(&f, lo, 0.0, tol / 2.0)? + quad(&f, 0.0, hi, tol / 2.0)?;
    Ok(TruncatedIntegral { value, lo, hi })
}

/// `∫_0^∞ f` truncated as in [`integrate_real_line`].
pub fn integrate_half_line(f: impl Fn(f64) -> f64, tol: f64) -> Result<TruncatedIntegral> {
    let peak = (0..=800)
        .map(|i| f(i as f64 * 0.01).abs())
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let hi = truncation_point(&f, peak, 0.25, 0.25);
    Ok(TruncatedIntegral { value: quad(&f, 0.0, hi, tol)?, lo: 0.0, hi })
}

/// Equal-width histogram. Bins are half-open `[e_i, e_{i+1})` except the
/// last, which is closed; out-of-range values count toward `total` only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Histogram {
    pub fn new(bins: usize, lo: f64, hi: f64) -> Result<Self> {
        if bins == 0 || !(lo < hi) {
            return Err(domain("histogram needs bins >= 1 and lo < hi"));
        }
        let w = (hi - lo) / bins as f64;
        let mut edges: Vec<f64> = (0..=bins).map(|i| lo + w * i as f64).collect();
        edges[bins] = hi;
        Ok(Self { edges, counts: vec![0; bins], total: 0 })
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn lo(&self) -> f64 {
        self.edges[0]
    }

    pub fn hi(&self) -> f64 {
        self.edges[self.bins()]
    }

    pub fn width(&self) -> f64 {
        (self.hi() - self.lo()) / self.bins() as f64
    }

    pub fn bin_of(&self, x: f64) -> Option<usize> {
        if !(x >= self.lo() && x <= self.hi()) {
            return None;
        }
        let i = ((x - self.lo()) / self.width()) as usize;
        Some(i.min(self.bins() - 1))
    }

    pub fn add(&mut self, x: f64) {
        self.total += 1;
        if let Some(i) = self.bin_of(x) {
            self.counts[i] += 1;
        }
    }

    pub fn centers(&self) -> Vec<f64> {
        self.edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }

    /// `counts / (total · width)`; all zero when empty.
    pub fn density(&self) -> Vec<f64> {
        if self.total == 0 {
            return vec![0.0; self.bins()];
        }
        let norm = self.total as f64 * self.width();
        self.counts.iter().map(|&c| c as f64 / norm).collect()
    }

    /// Adds counts of a histogram with identical edges.
    pub fn merge(&mut self, other: &Histogram) -> Result<()> {
        if self.edges != other.edges {
            return Err(domain("histograms have different edges"));
        }
        self.counts.iter_mut().zip(&other.counts).for_each(|(a, b)| *a += b);
        self.total += other.total;
        Ok(())
    }
}

pub fn histogram(data: &[f64], bins: usize, range: (f64, f64)) -> Result<Histogram> {
    let mut h = Histogram::new(bins, range.0, range.1)?;
    data.iter().for_each(|&x| h.add(x));
    Ok(h)
}

/// Two-dimensional equal-width histogram, row-major over (x, y).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Histogram2d {
    pub x: Histogram,
    pub y: Histogram,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Histogram2d {
    pub fn new(bins: (usize, usize), xr: (f64, f64), yr: (f64, f64)) -> Result<Self> {
        let x = Histogram::new(bins.0, xr.0, xr.1)?;
        let y = Histogram::new(bins.1, yr.0, yr.1)?;
        Ok(Self { counts: vec![0; bins.0 * bins.1], x, y, total: 0 })
    }

    pub fn add(&mut self, px: f64, py: f64) {
        self.total += 1;
        if let (Some(i), Some(j)) = (self.x.bin_of(px), self.y.bin_of(py)) {
            self.counts[i * self.y.bins() + j] += 1;
        }
    }

    /// Adds a point to the bin counts only; `total` is managed by the
    /// caller (used when the density is normalized by a larger population).
    pub fn add_uncounted(&mut self, px: f64, py: f64) {
        if let (Some(i), Some(j)) = (self.x.bin_of(px), self.y.bin_of(py)) {
            self.counts[i * self.y.bins() + j] += 1;
        }
    }

    /// `counts / (total · cell area)`.
    pub fn density(&self) -> Vec<f64> {
        if self.total == 0 {
            return vec![0.0; self.counts.len()];
        }
        let norm = self.total as f64 * self.x.width() * self.y.width();
        self.counts.iter().map(|&c| c as f64 / norm).collect()
    }
}

/// Fraction of 2×2 spectra with two real eigenvalues.
pub fn empirical_real_fraction(spectra: &[Spectrum]) -> Result<f64> {
    if spectra.is_empty() {
        return Err(domain("no spectra"));
    }
    if spectra.iter().any(|s| s.n != 2) {
        return Err(domain("real fraction is defined for 2x2 spectra"));
    }
    let real = spectra.iter().filter(|s| s.is_all_real()).count();
    Ok(real as f64 / spectra.len() as f64)
}

/// Spacings `|λ₁ − λ₂|` of real 2×2 spectra, rescaled to unit mean.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpacingSample {
    pub raw: Vec<f64>,
    pub mean_raw: f64,
    pub normalized: Vec<f64>,
}

impl SpacingSample {
    pub fn from_raw(raw: Vec<f64>) -> Result<Self> {
        if raw.len() < 2 {
            return Err(domain("need at least two real spectra for spacings"));
        }
        let mean_raw = raw.iter().sum::<f64>() / raw.len() as f64;
        if !(mean_raw > 0.0) {
            return Err(domain("mean spacing is zero"));
        }
        let normalized = raw.iter().map(|s| s / mean_raw).collect();
        Ok(Self { raw, mean_raw, normalized })
    }
}

pub fn real_spacings(spectra: &[Spectrum]) -> Result<SpacingSample> {
    if spectra.iter().any(|s| s.n != 2) {
        return Err(domain("spacings are defined for 2x2 spectra"));
    }
    let raw = spectra
        .iter()
        .filter(|s| s.is_all_real())
        .map(|s| (s.real_eigs[1] - s.real_eigs[0]).abs())
        .collect();
    SpacingSample::from_raw(raw)
}

/// Kolmogorov–Smirnov distance between sorted samples and a CDF:
/// `max_i max(|i/n − F(x_i)|, |(i−1)/n − F(x_i)|)`.
pub fn ks_distance(sorted: &[f64], cdf: impl Fn(f64) -> f64) -> Result<f64> {
    if sorted.is_empty() {
        return Err(domain("no samples"));
    }
    let n = sorted.len() as f64;
    Ok(sorted.iter().enumerate().fold(0.0f64, |d, (i, &x)| {
        let f = cdf(x);
        d.max((((i + 1) as f64) / n - f).abs()).max((i as f64 / n - f).abs())
    }))
}

/// KS distance threshold `c / √m`; `c = 1.63` is the 99% band.
pub fn ks_threshold(c: f64, m: usize) -> f64 {
    c / (m as f64).sqrt()
}

/// A CDF tabulated from a density: cumulative mass by quadrature between
/// nodes, cubic Hermite interpolation in between (the density supplies the
/// slopes), normalized to the mass inside `[lo, hi]`.
#[derive(Clone, Debug)]
pub struct TabulatedCdf {
    nodes: Vec<f64>,
    cum: Vec<f64>,
    slope: Vec<f64>,
    pub mass: f64,
}

impl TabulatedCdf {
    pub fn from_density(f: impl Fn(f64) -> f64, lo: f64, hi: f64, intervals: usize) -> Result<Self> {
        if intervals == 0 || !(lo < hi) {
            return Err(domain("invalid tabulation range"));
        }
        let h = (hi - lo) / intervals as f64;
        let nodes: Vec<f64> = (0..=intervals).map(|i| lo + h * i as f64).collect();
        let mut cum = Vec::with_capacity(nodes.len());
        cum.push(0.0);
        for w in nodes.windows(2) {
            let step = quad(&f, w[0], w[1], 1e-15)?;
            cum.push(cum.last().unwrap() + step);
        }
        let mass = *cum.last().unwrap();
        if !(mass > 0.0) {
            return Err(domain("density has no mass on the range"));
        }
        cum.iter_mut().for_each(|c| *c /= mass);
        let slope = nodes.iter().map(|&x| f(x) / mass).collect();
        Ok(Self { nodes, cum, slope, mass })
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let n = self.nodes.len();
        if x <= self.nodes[0] {
            return 0.0;
        }
        if x >= self.nodes[n - 1] {
            return 1.0;
        }
        let h = self.nodes[1] - self.nodes[0];
        let i = (((x - self.nodes[0]) / h) as usize).min(n - 2);
        let t = (x - self.nodes[i]) / h;
        let (t2, t3) = (t * t, t * t * t);
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        (h00 * self.cum[i] + h10 * h * self.slope[i] + h01 * self.cum[i + 1] + h11 * h * self.slope[i + 1])
            .clamp(0.0, 1.0)
    }
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample variance.
pub fn variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() as f64 - 1.0)
}

pub fn correlation(xs: &[f64], ys: &[f64]) -> f64 {
    let (mx, my) = (mean(xs), mean(ys));
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    sxy / (sxx * syy).sqrt()
}
