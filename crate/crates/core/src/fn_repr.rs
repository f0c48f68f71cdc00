//! Representations of analytic functions on the unit disc.
//!
//! Three concrete forms are used throughout the crate:
//!
//! * [`PolyCoeffs`]: a finite Taylor coefficient sequence.
//! * [`StructuredExtremal`]: the candidate extremal form
//!   `C * prod_{j<=l} (lam_j - z)/(1 - conj(lam_j) z) * prod_{j<=k} (1 - conj(lam_j) z)^(2/p)`.
//! * [`BoundarySamples`]: values on a uniform grid of the unit circle.
//!
//! Anything that can be evaluated on the closed disc implements [`Analytic`].

use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest modulus accepted for a Blaschke zero.
pub const BLASCHKE_MAX_MODULUS: f64 = 1.0 - 1e-12;

const SLACK: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReprError {
    #[error("sample count {0} must be a power of two and at least 4")]
    BadSampleCount(usize),
    #[error("coefficient index {index} out of range for {n} samples")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("exponent p = {0} must be positive (or infinite)")]
    BadExponent(f64),
    #[error("zero count {l} exceeds the number of parameters {k}")]
    ZeroCountTooLarge { l: usize, k: usize },
    #[error("parameter lambda[{index}] = {value} lies outside the admissible disc")]
    LambdaOutOfDisc { index: usize, value: Complex64 },
    #[error("evaluation failed at z = {0}")]
    EvaluationFailed(Complex64),
    #[error("non-removable singularity on the boundary at sample {index} (theta = {theta})")]
    NonRemovable { index: usize, theta: f64 },
}

/// A function that can be evaluated on the closed unit disc.
pub trait Analytic: Sync {
    fn eval(&self, z: Complex64) -> Complex64;

    /// Raw values on the grid `e^{2 pi i m / n}`, `m = 0..n`. Non-finite
    /// entries are allowed here; [`sample_boundary`] repairs or rejects them.
    fn boundary_values(&self, n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|m| self.eval(Complex64::from_polar(1.0, TAU * m as f64 / n as f64)))
            .collect()
    }
}

impl<F> Analytic for F
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    fn eval(&self, z: Complex64) -> Complex64 {
        self(z)
    }
}

/// Finite Taylor coefficient sequence `a_0, ..., a_N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyCoeffs {
    pub coeffs: Vec<Complex64>,
}

impl PolyCoeffs {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Coefficients of `(1 + z)^n`.
    pub fn binomial(n: usize) -> Self {
        let mut c = vec![1.0f64; n + 1];
        for j in 1..n {
            c[j] = c[j - 1] * (n + 1 - j) as f64 / j as f64;
        }
        Self::from_real(&c)
    }

    /// Coefficients of `z^n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
        c[n] = Complex64::new(1.0, 0.0);
        Self::new(c)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the last non-zero coefficient, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| c.norm_sqr() > 0.0)
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![Complex64::default(); self.len() + other.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl Analytic for PolyCoeffs {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, &a| acc * z + a)
    }

    fn boundary_values(&self, n: usize) -> Vec<Complex64> {
        // Aliased inverse DFT: coefficient a_j lands in bin j mod n.
        let mut buf = vec![Complex64::default(); n];
        for (j, &a) in self.coeffs.iter().enumerate() {
            buf[j % n] += a;
        }
        FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
        buf
    }
}

/// Candidate extremal
/// `C * prod_{j<l} (lam_j - z)/(1 - conj(lam_j) z) * prod_{j<k} (1 - conj(lam_j) z)^(2/p)`.
///
/// The first `zero_count` parameters carry Blaschke factors and must lie
/// strictly inside the disc; the rest may touch the circle. `p` may be
/// `f64::INFINITY`, in which case the outer factors are identically one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructuredExtremal {
    scale: Complex64,
    p: f64,
    zero_count: usize,
    lambdas: Vec<Complex64>,
}

impl StructuredExtremal {
    pub fn new(scale: Complex64, p: f64, zero_count: usize, lambdas: Vec<Complex64>) -> Result<Self, ReprError> {
        if !(p > 0.0) {
            return Err(ReprError::BadExponent(p));
        }
        if zero_count > lambdas.len() {
            return Err(ReprError::ZeroCountTooLarge {
                l: zero_count,
                k: lambdas.len(),
            });
        }
        for (index, &value) in lambdas.iter().enumerate() {
            let r = value.norm();
            let ok = if index < zero_count { r < 1.0 } else { r <= 1.0 + SLACK };
            if !ok || !r.is_finite() {
                return Err(ReprError::LambdaOutOfDisc { index, value });
            }
        }
        Ok(Self {
            scale,
            p,
            zero_count,
            lambdas,
        })
    }

    pub fn scale(&self) -> Complex64 {
        self.scale
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn zero_count(&self) -> usize {
        self.zero_count
    }

    pub fn lambdas(&self) -> &[Complex64] {
        &self.lambdas
    }

    pub fn k(&self) -> usize {
        self.lambdas.len()
    }

    /// The function `e^{i phi} f(e^{i psi} z)`, again in structured form:
    /// every parameter rotates by `e^{-i psi}` and the scale picks up
    /// `e^{i phi} e^{i l psi}` from the Blaschke factors.
    pub fn rotated(&self, phi: f64, psi: f64) -> Self {
        let spin = Complex64::from_polar(1.0, -psi);
        Self {
            scale: self.scale * Complex64::from_polar(1.0, phi + self.zero_count as f64 * psi),
            p: self.p,
            zero_count: self.zero_count,
            lambdas: self.lambdas.iter().map(|l| l * spin).collect(),
        }
    }

    /// The function `f(z^m)`. Each parameter `lam` is replaced by the `m`
    /// roots of `mu^m = lam`; the scale absorbs the sign
    /// `(-1)^{(m+1) l}` produced by regrouping the Blaschke factors.
    pub fn compose_power(&self, m: usize) -> Self {
        assert!(m >= 1, "power must be positive");
        let mut lambdas = Vec::with_capacity(m * self.lambdas.len());
        for &lam in &self.lambdas {
            let (r, theta) = lam.to_polar();
            let root = r.powf(1.0 / m as f64);
            for j in 0..m {
                let arg = (theta + TAU * j as f64) / m as f64;
                lambdas.push(Complex64::from_polar(root, arg));
            }
        }
        let sign = if (m + 1) * self.zero_count % 2 == 1 { -1.0 } else { 1.0 };
        Self {
            scale: self.scale * sign,
            p: self.p,
            zero_count: m * self.zero_count,
            lambdas,
        }
    }

    /// Exponent `2/p` of the outer factors (zero for `p = inf`).
    pub fn outer_exponent(&self) -> f64 {
        2.0 / self.p
    }

    /// Evaluate, reporting non-finite results as an error.
    pub fn try_eval(&self, z: Complex64) -> Result<Complex64, ReprError> {
        let v = self.eval(z);
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(ReprError::EvaluationFailed(z))
        }
    }

    /// Taylor coefficients `a_0, ..., a_{n-1}` by exact power-series
    /// multiplication. Each Blaschke factor times its outer factor is
    /// expanded as `(lam - z)(1 - conj(lam) z)^(2/p - 1)`.
    pub fn taylor_coeffs(&self, n: usize) -> Vec<Complex64> {
        let mut series = vec![Complex64::default(); n];
        if n == 0 {
            return series;
        }
        series[0] = self.scale;
        let s = self.outer_exponent();
        for (j, &lam) in self.lambdas.iter().enumerate() {
            let w = lam.conj();
            if j < self.zero_count {
                mul_linear(&mut series, lam, Complex64::new(-1.0, 0.0));
                mul_binomial(&mut series, w, s - 1.0);
            } else {
                mul_binomial(&mut series, w, s);
            }
        }
        series
    }

    /// Coefficients of the polynomial `h(z) = prod_j (1 - conj(lam_j) z)`.
    pub fn outer_polynomial(&self) -> PolyCoeffs {
        outer_polynomial(&self.lambdas)
    }

    /// `||f||_{H^p}` from the identity `|f|^p = |C|^p |h|^2` on the circle.
    pub fn exact_norm(&self) -> f64 {
        if self.p.is_infinite() {
            return self.scale.norm();
        }
        let q = outer_norm_sqr(&self.lambdas);
        self.scale.norm() * q.powf(1.0 / self.p)
    }
}

impl Analytic for StructuredExtremal {
    fn eval(&self, z: Complex64) -> Complex64 {
        let s = self.outer_exponent();
        let one = Complex64::new(1.0, 0.0);
        let mut acc = self.scale;
        for (j, &lam) in self.lambdas.iter().enumerate() {
            let w = one - lam.conj() * z;
            if j < self.zero_count {
                acc *= (lam - z) / w;
            }
            if s != 0.0 {
                if w.norm_sqr() == 0.0 {
                    // tangency point: the outer factor vanishes
                    return Complex64::default();
                }
                acc *= w.powf(s);
            }
        }
        acc
    }
}

/// `series <- series * (a + b z)`, truncated.
fn mul_linear(series: &mut [Complex64], a: Complex64, b: Complex64) {
    for i in (0..series.len()).rev() {
        let prev = if i > 0 { series[i - 1] } else { Complex64::default() };
        series[i] = series[i] * a + prev * b;
    }
}

/// `series <- series * (1 - w z)^e`, truncated.
fn mul_binomial(series: &mut [Complex64], w: Complex64, e: f64) {
    let n = series.len();
    if e == 0.0 || w.norm_sqr() == 0.0 {
        return;
    }
    let mut factor = Vec::with_capacity(n);
    let mut c = Complex64::new(1.0, 0.0);
    factor.push(c);
    for m in 1..n {
        c *= -w * ((e - (m - 1) as f64) / m as f64);
        factor.push(c);
    }
    for i in (0..n).rev() {
        let mut acc = Complex64::default();
        for j in 0..=i {
            acc += series[j] * factor[i - j];
        }
        series[i] = acc;
    }
}

pub(crate) fn outer_polynomial(lambdas: &[Complex64]) -> PolyCoeffs {
    let mut h = vec![Complex64::default(); lambdas.len() + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for (deg, lam) in lambdas.iter().enumerate() {
        let w = lam.conj();
        for i in (1..=deg + 1).rev() {
            let prev = h[i - 1];
            h[i] -= w * prev;
        }
    }
    PolyCoeffs::new(h)
}

/// `||prod_j (1 - conj(lam_j) z)||_{H^2}^2`.
pub(crate) fn outer_norm_sqr(lambdas: &[Complex64]) -> f64 {
    outer_polynomial(lambdas).coeffs.iter().map(|c| c.norm_sqr()).sum()
}

/// Values of a function on `N` equispaced points of the unit circle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundarySamples {
    values: Vec<Complex64>,
}

impl BoundarySamples {
    pub fn new(values: Vec<Complex64>) -> Result<Self, ReprError> {
        check_sample_count(values.len())?;
        Ok(Self { values })
    }

    pub fn n_samples(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Discrete Cauchy integral `(1/N) sum_m f_m e^{-2 pi i m n / N}`.
    pub fn taylor_coeff(&self, n: usize) -> Result<Complex64, ReprError> {
        let len = self.values.len();
        if n >= len {
            return Err(ReprError::IndexOutOfRange { index: n, n: len });
        }
        let step = -TAU / len as f64;
        let sum: Complex64 = self
            .values
            .iter()
            .enumerate()
            .map(|(m, v)| v * Complex64::from_polar(1.0, step * ((m * n) % len) as f64))
            .sum();
        Ok(sum / len as f64)
    }

    /// All `N` discrete coefficients at once via FFT.
    pub fn taylor_coeffs(&self) -> Vec<Complex64> {
        let n = self.values.len();
        let mut buf = self.values.clone();
        FftPlanner::new().plan_fft_forward(n).process(&mut buf);
        buf.iter().map(|c| c / n as f64).collect()
    }
}

fn check_sample_count(n: usize) -> Result<(), ReprError> {
    if n < 4 || !n.is_power_of_two() {
        return Err(ReprError::BadSampleCount(n));
    }
    Ok(())
}

/// Sample `f` on the `n`-point boundary grid. Non-finite values are replaced
/// by the symmetric limit from neighbouring angles when that limit exists.
pub fn sample_boundary<F: Analytic + ?Sized>(f: &F, n: usize) -> Result<BoundarySamples, ReprError> {
    check_sample_count(n)?;
    let mut values = f.boundary_values(n);
    for (m, v) in values.iter_mut().enumerate() {
        if is_finite(*v) {
            continue;
        }
        let theta = TAU * m as f64 / n as f64;
        *v = boundary_limit(f, theta, TAU / n as f64).ok_or(ReprError::NonRemovable { index: m, theta })?;
    }
    Ok(BoundarySamples { values })
}

pub(crate) fn boundary_limit<F: Analytic + ?Sized>(f: &F, theta: f64, h: f64) -> Option<Complex64> {
    let mut prev: Option<Complex64> = None;
    // shrink the offset and require the two-sided average to settle
    for e in 1..=4 {
        let d = h * 10f64.powi(-2 * e);
        let a = f.eval(Complex64::from_polar(1.0, theta - d));
        let b = f.eval(Complex64::from_polar(1.0, theta + d));
        if !is_finite(a) || !is_finite(b) {
            return None;
        }
        let mid = (a + b) * 0.5;
        if (a - b).norm() > 1e-3 * (1.0 + mid.norm()) {
            prev = None;
            continue;
        }
        if let Some(q) = prev {
            if (q - mid).norm() <= 1e-6 * (1.0 + mid.norm()) {
                return Some(mid);
            }
        }
        prev = Some(mid);
    }
    None
}

pub(crate) fn is_finite(v: Complex64) -> bool {
    v.re.is_finite() && v.im.is_finite()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn structured_with_zero_lambda_is_constant() {
        let f = StructuredExtremal::new(c(1.0, 0.0), 2.0, 0, vec![c(0.0, 0.0)]).unwrap();
        assert_eq!(f.try_eval(c(0.5, 0.0)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn structured_moebius_outer_value_at_origin() {
        // f_1 from case (i): C = -(1+a^2)^{-1/p}, lambda = -a
        let (p, a) = (0.5, 0.3f64);
        let scale = -(1.0 + a * a).powf(-1.0 / p);
        let f = StructuredExtremal::new(c(scale, 0.0), p, 1, vec![c(-a, 0.0)]).unwrap();
        let v = f.try_eval(c(0.0, 0.0)).unwrap();
        assert!((v.re - a * (1.0 + a * a).powf(-1.0 / p)).abs() < 1e-15);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn structured_double_zero_at_origin() {
        let f = StructuredExtremal::new(c(1.0, 0.0), 1.0, 2, vec![c(0.0, 0.0); 2]).unwrap();
        let v = f.try_eval(c(0.3, 0.0)).unwrap();
        assert!((v - c(0.09, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn structured_rejects_bad_parameters() {
        assert!(matches!(
            StructuredExtremal::new(c(1.0, 0.0), 1.0, 1, vec![c(1.0, 0.0)]),
            Err(ReprError::LambdaOutOfDisc { index: 0, .. })
        ));
        assert!(StructuredExtremal::new(c(1.0, 0.0), 1.0, 0, vec![c(1.0, 0.0)]).is_ok());
        assert!(StructuredExtremal::new(c(1.0, 0.0), 1.0, 0, vec![c(1.1, 0.0)]).is_err());
        assert!(StructuredExtremal::new(c(1.0, 0.0), -1.0, 0, vec![]).is_err());
        assert!(StructuredExtremal::new(c(1.0, 0.0), 1.0, 2, vec![c(0.0, 0.0)]).is_err());
    }

    #[test]
    fn tangency_point_evaluates_to_zero() {
        let lam = Complex64::from_polar(1.0, 0.7);
        let f = StructuredExtremal::new(c(1.0, 0.0), 0.5, 0, vec![lam]).unwrap();
        let z = Complex64::from_polar(1.0, 0.7);
        assert_eq!(f.try_eval(z).unwrap(), Complex64::default());
        // and the neighbourhood is continuous
        let near = f.eval(Complex64::from_polar(1.0, 0.7 + 1e-6));
        assert!(near.norm() < 1e-20);
    }

    #[test]
    fn outer_power_is_continuous_along_circle() {
        let f = StructuredExtremal::new(c(1.0, 0.0), 0.3, 1, vec![c(0.6, 0.5), c(-0.9, 0.1)]).unwrap();
        let n = 1 << 14;
        let vals = f.boundary_values(n);
        let peak = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let mut worst = 0.0f64;
        for m in 0..n {
            let d = (vals[(m + 1) % n] - vals[m]).norm();
            worst = worst.max(d);
        }
        // a branch jump would be of order |f|; smooth steps are O(|f|/n)
        assert!(worst < 0.01 * peak, "jump {worst} vs peak {peak}");
    }

    #[test]
    fn series_matches_discrete_cauchy_integral() {
        let f = StructuredExtremal::new(c(0.7, 0.2), 0.7, 1, vec![c(0.3, -0.4), c(0.1, 0.5)]).unwrap();
        let exact = f.taylor_coeffs(6);
        let s = sample_boundary(&f, 1 << 10).unwrap();
        for (n, a) in exact.iter().enumerate() {
            assert!((s.taylor_coeff(n).unwrap() - a).norm() < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn rotation_acts_on_values() {
        let f = StructuredExtremal::new(c(0.7, 0.2), 0.8, 1, vec![c(0.3, -0.4), c(0.1, 0.5)]).unwrap();
        let (phi, psi) = (0.4, -1.1);
        let g = f.rotated(phi, psi);
        for z in [c(0.2, 0.3), c(-0.5, 0.1), c(0.0, 0.0)] {
            let want = Complex64::from_polar(1.0, phi) * f.eval(z * Complex64::from_polar(1.0, psi));
            assert!((g.eval(z) - want).norm() < 1e-13);
        }
    }

    #[test]
    fn compose_power_matches_substitution() {
        let f = StructuredExtremal::new(c(-0.7, 0.0), 0.6, 1, vec![c(-0.4, 0.0), c(0.2, 0.3)]).unwrap();
        for m in 1..=3 {
            let g = f.compose_power(m);
            assert_eq!(g.k(), 2 * m);
            assert_eq!(g.zero_count(), m);
            for z in [c(0.2, 0.3), c(-0.5, 0.1), c(0.6, -0.6)] {
                let want = f.eval(z.powu(m as u32));
                assert!((g.eval(z) - want).norm() < 1e-12, "m = {m}");
            }
            assert!((g.exact_norm() - f.exact_norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_norm_of_parseval_case() {
        // p = 2, lambda real: h = (1 - 0.5 z), f = C (1 - 0.5 z)
        let f = StructuredExtremal::new(c(2.0, 0.0), 2.0, 0, vec![c(0.5, 0.0)]).unwrap();
        assert!((f.exact_norm() - 2.0 * 1.25f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn sample_identity() {
        let s = sample_boundary(&|z: Complex64| z, 4).unwrap();
        let want = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        for (a, b) in s.values().iter().zip(want) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn sample_constant() {
        let s = sample_boundary(&|_z: Complex64| c(1.0, 0.0), 8).unwrap();
        assert!(s.values().iter().all(|v| *v == c(1.0, 0.0)));
    }

    #[test]
    fn sample_binomial_endpoints() {
        let f = PolyCoeffs::binomial(4);
        let s = sample_boundary(&f, 16).unwrap();
        assert!((s.values()[0] - c(16.0, 0.0)).norm() < 1e-12);
        assert!(s.values()[8].norm() < 1e-12);
        // pointwise and FFT sampling agree
        let g = |z: Complex64| f.eval(z);
        let t = sample_boundary(&g, 16).unwrap();
        for (a, b) in s.values().iter().zip(t.values()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn sample_rejects_bad_sizes() {
        let f = |z: Complex64| z;
        assert_eq!(sample_boundary(&f, 2).unwrap_err(), ReprError::BadSampleCount(2));
        assert_eq!(sample_boundary(&f, 12).unwrap_err(), ReprError::BadSampleCount(12));
    }

    #[test]
    fn removable_point_is_repaired() {
        // (z^2 - 1)/(z - 1) = z + 1 with a hole at z = 1
        let f = |z: Complex64| (z * z - 1.0) / (z - 1.0);
        let s = sample_boundary(&f, 8).unwrap();
        assert!((s.values()[0] - c(2.0, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn pole_is_rejected() {
        let f = |z: Complex64| 1.0 / (z - 1.0);
        assert!(matches!(
            sample_boundary(&f, 8),
            Err(ReprError::NonRemovable { index: 0, .. })
        ));
    }

    #[test]
    fn taylor_coeff_examples() {
        let s = sample_boundary(&PolyCoeffs::binomial(4), 16).unwrap();
        assert!((s.taylor_coeff(2).unwrap() - c(6.0, 0.0)).norm() < 1e-12);
        let one = sample_boundary(&|_z: Complex64| c(1.0, 0.0), 32).unwrap();
        assert!((one.taylor_coeff(0).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        let cube = sample_boundary(&PolyCoeffs::monomial(3), 8).unwrap();
        assert!(cube.taylor_coeff(1).unwrap().norm() < 1e-15);
        assert!(matches!(
            cube.taylor_coeff(8),
            Err(ReprError::IndexOutOfRange { index: 8, n: 8 })
        ));
    }

    #[test]
    fn fft_coefficients_match_direct_sum() {
        let f = PolyCoeffs::from_real(&[0.3, -1.0, 2.0, 0.5, 0.25]);
        let s = sample_boundary(&f, 8).unwrap();
        let all = s.taylor_coeffs();
        assert_eq!(all.len(), 8);
        for (n, &a) in all.iter().enumerate() {
            assert!((a - s.taylor_coeff(n).unwrap()).norm() < 1e-14);
            assert!((a - f.coeff(n)).norm() < 1e-14);
        }
    }
}
