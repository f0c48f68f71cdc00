//! F. Wiener's transform `W_k f(z) = (1/k) sum_j f(w^j z)`, `w = e^{2 pi i/k}`,
//! which keeps exactly the Taylor coefficients with index divisible by `k`.
//!
//! Besides the transform itself this module checks the sharp bound
//! `||W_k f||_p <= max(k^{1/p-1}, 1) ||f||_p` and evaluates the
//! near-singular family `f_eps(z) = ((1+eps) - z)^{-1/p}` whose ratio
//! `||W_k f_eps||_p^p / ||f_eps||_p^p` tends to `k^{1-p}`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fn_repr::{sample_boundary, Analytic, PolyCoeffs, ReprError};
use crate::hardy_norm::{graded_mean, norm, NormError, QuadConfig};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WienerError {
    #[error("transform order k = {0} must be at least 2")]
    BadOrder(usize),
    #[error("exponent p = {0} outside the admissible range")]
    BadExponent(f64),
    #[error("eps = {0} must be positive")]
    BadEps(f64),
    #[error("||f||_p vanishes; the ratio is undefined")]
    ZeroNorm,
    #[error("function is not inner: |f| deviates from 1 by {0:e} on the grid")]
    NotInner(f64),
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error(transparent)]
    Repr(#[from] ReprError),
}

fn check_order(k: usize) -> Result<(), WienerError> {
    if k < 2 {
        Err(WienerError::BadOrder(k))
    } else {
        Ok(())
    }
}

/// Coefficients of `W_k f`: keeps `a_{kn}`, zeroes the rest.
pub fn wiener_coeffs(c: &PolyCoeffs, k: usize) -> Result<PolyCoeffs, WienerError> {
    check_order(k)?;
    let coeffs = c
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, &a)| if n % k == 0 { a } else { Complex64::default() })
        .collect();
    Ok(PolyCoeffs::new(coeffs))
}

/// `W_k f(z)` by averaging over rotations.
pub fn wiener_eval<F: Analytic + ?Sized>(f: &F, k: usize, z: Complex64) -> Result<Complex64, WienerError> {
    check_order(k)?;
    let v = rotation_average(f, k, z);
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(ReprError::EvaluationFailed(z).into())
    }
}

fn rotation_average<F: Analytic + ?Sized>(f: &F, k: usize, z: Complex64) -> Complex64 {
    let sum: Complex64 = (0..k)
        .map(|j| f.eval(Complex64::from_polar(1.0, TAU * j as f64 / k as f64) * z))
        .sum();
    sum / k as f64
}

/// Lazy view of `W_k f` as an [`Analytic`] function.
pub struct WienerTransform<'a, F: ?Sized> {
    f: &'a F,
    k: usize,
}

impl<'a, F: Analytic + ?Sized> WienerTransform<'a, F> {
    pub fn new(f: &'a F, k: usize) -> Result<Self, WienerError> {
        check_order(k)?;
        Ok(Self { f, k })
    }
}

impl<F: Analytic + ?Sized> Analytic for WienerTransform<'_, F> {
    fn eval(&self, z: Complex64) -> Complex64 {
        rotation_average(self.f, self.k, z)
    }
}

/// Outcome of comparing `||W_k f||` with `||f||`.
///
/// For `p < 1` both `ratio` and `bound` are in the `p`-th power convention
/// (`||W_k f||^p / ||f||^p` against `k^{1-p}`); for `p >= 1` they are plain
/// norm ratios and the bound is one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WienerRatioReport {
    pub k: usize,
    pub p: f64,
    pub ratio: f64,
    pub bound: f64,
    pub norm_f: f64,
    pub norm_wf: f64,
    pub f_descriptor: String,
}

impl WienerRatioReport {
    /// `ratio <= bound * (1 + rel)`.
    pub fn within_bound(&self, rel: f64) -> bool {
        self.ratio <= self.bound * (1.0 + rel)
    }
}

/// The bound `max(k^{1/p-1}, 1)` in the convention of [`WienerRatioReport`].
pub fn wiener_bound(k: usize, p: f64) -> f64 {
    if p < 1.0 {
        (k as f64).powf(1.0 - p)
    } else {
        1.0
    }
}

pub fn wiener_bound_check<F: Analytic + ?Sized>(
    f: &F,
    k: usize,
    p: f64,
    cfg: &QuadConfig,
    descriptor: &str,
) -> Result<WienerRatioReport, WienerError> {
    check_order(k)?;
    if !(p > 0.0) {
        return Err(WienerError::BadExponent(p));
    }
    let wf = WienerTransform::new(f, k)?;
    let norm_f = norm(f, p, cfg)?;
    if norm_f == 0.0 {
        return Err(WienerError::ZeroNorm);
    }
    let norm_wf = norm(&wf, p, cfg)?;
    let plain = norm_wf / norm_f;
    let ratio = if p < 1.0 { plain.powf(p) } else { plain };
    Ok(WienerRatioReport {
        k,
        p,
        ratio,
        bound: wiener_bound(k, p),
        norm_f,
        norm_wf,
        f_descriptor: descriptor.to_string(),
    })
}

/// `f_eps(z) = ((1+eps) - z)^{-1/p}` on the principal branch, which is
/// analytic on the closed disc.
pub fn f_eps(p: f64, eps: f64) -> impl Fn(Complex64) -> Complex64 + Sync + Copy {
    let a = 1.0 + eps;
    move |z: Complex64| (Complex64::new(a, 0.0) - z).powf(-1.0 / p)
}

/// `||f_eps||_p^p = ∫ |e^{iθ} - (1+eps)|^{-1} dθ/2π`, with the modulus taken
/// from its real closed form.
pub fn f_eps_mean_power(eps: f64, cfg: &QuadConfig) -> Result<f64, WienerError> {
    if !(eps > 0.0) {
        return Err(WienerError::BadEps(eps));
    }
    let a = 1.0 + eps;
    let g = |theta: f64| {
        // |e^{iθ} - a|^2 = (a-1)^2 + 4a sin^2(θ/2)
        let s = (0.5 * theta).sin();
        1.0 / (eps * eps + 4.0 * a * s * s).sqrt()
    };
    Ok(graded_mean(&g, &[0.0], cfg)?)
}

/// `||W_k f_eps||_p^p / ||f_eps||_p^p`; tends to `k^{1-p}` as `eps -> 0+`.
pub fn sharpness_ratio(p: f64, k: usize, eps: f64, cfg: &QuadConfig) -> Result<f64, WienerError> {
    check_order(k)?;
    if !(p > 0.0 && p < 1.0) {
        return Err(WienerError::BadExponent(p));
    }
    let denom = f_eps_mean_power(eps, cfg)?;
    let f = f_eps(p, eps);
    let g = |theta: f64| {
        rotation_average(&f, k, Complex64::from_polar(1.0, theta))
            .norm()
            .powf(p)
    };
    // W_k f_eps peaks where some rotation of e^{iθ} hits 1
    let peaks: Vec<f64> = (0..k).map(|j| TAU * j as f64 / k as f64).collect();
    let num = graded_mean(&g, &peaks, cfg)?;
    Ok(num / denom)
}

/// Limit `k^{1-p}` of [`sharpness_ratio`].
pub fn sharpness_limit(p: f64, k: usize) -> f64 {
    (k as f64).powf(1.0 - p)
}

/// `max_θ |1 - |W_k f(e^{iθ})||` on an `n`-point grid, for `f` with unit
/// boundary modulus. If both `f` and `W_k f` are inner then `W_k f = f`, so a
/// vanishing defect with `W_k f != f` would be a contradiction.
pub fn inner_defect<F: Analytic + ?Sized>(f: &F, k: usize, n: usize) -> Result<f64, WienerError> {
    check_order(k)?;
    let s = sample_boundary(f, n)?;
    let dev = s.values().iter().map(|v| (v.norm() - 1.0).abs()).fold(0.0, f64::max);
    if dev > 1e-8 {
        return Err(WienerError::NotInner(dev));
    }
    let wf = WienerTransform::new(f, k)?;
    let ws = sample_boundary(&wf, n)?;
    Ok(ws.values().iter().map(|v| (1.0 - v.norm()).abs()).fold(0.0, f64::max))
}

/// Mass of `|f_eps|^p` on `|θ| < pi/k`, the part that concentrates as eps -> 0.
pub fn f_eps_central_mass(eps: f64, k: usize, cfg: &QuadConfig) -> Result<f64, WienerError> {
    let a = 1.0 + eps;
    let half = PI / k as f64;
    let g = |theta: f64| {
        if theta.rem_euclid(TAU) < half || theta.rem_euclid(TAU) > TAU - half {
            let s = (0.5 * theta).sin();
            1.0 / (eps * eps + 4.0 * a * s * s).sqrt()
        } else {
            0.0
        }
    };
    Ok(graded_mean(&g, &[0.0, half, -half], cfg)?)
}
