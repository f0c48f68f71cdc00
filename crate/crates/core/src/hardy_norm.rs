//! `H^p` norms and quasi-norms from boundary values.
//!
//! The base rule is the periodic trapezoid on a dyadic grid, doubled until two
//! successive estimates of `∫|f|^p dθ/2π` agree to `rel_tol`. When the
//! boundary function has zeros, `|f|^p` has a cusp there (Hölder with exponent
//! `p` for simple zeros) and spectral accuracy is lost; with `zero_split`
//! enabled the zeros are located and the circle is integrated by
//! Gauss-Legendre panels graded geometrically toward each zero.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fn_repr::{sample_boundary, Analytic, BoundarySamples, PolyCoeffs, ReprError};
use crate::quadrature::{golden_max, golden_min, graded_circle_mean};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub base_samples: usize,
    pub max_refinements: u32,
    pub rel_tol: f64,
    pub zero_split: bool,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            base_samples: 1 << 12,
            max_refinements: 8,
            rel_tol: 1e-9,
            zero_split: true,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<(), NormError> {
        if self.base_samples < 4 || !self.base_samples.is_power_of_two() || !(self.rel_tol > 0.0) {
            return Err(NormError::BadConfig(*self));
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NormError {
    #[error("exponent p = {0} must satisfy 0 < p < inf")]
    BadExponent(f64),
    #[error("invalid quadrature configuration {0:?}")]
    BadConfig(QuadConfig),
    #[error("quadrature did not converge: last estimates {previous} and {last}")]
    NotConverged { previous: f64, last: f64 },
    #[error(transparent)]
    Repr(#[from] ReprError),
}

/// Supremum of `|f|` on the circle together with an angle attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupNorm {
    pub value: f64,
    pub theta: f64,
}

/// `||f||_{H^p}` for `0 < p < inf`.
pub fn norm_hp<F: Analytic + ?Sized>(f: &F, p: f64, cfg: &QuadConfig) -> Result<f64, NormError> {
    Ok(mean_power(f, p, cfg)?.powf(1.0 / p))
}

/// `||f||_{H^p}` for `0 < p <= inf`, dispatching to [`norm_hinf`] for `p = inf`.
pub fn norm<F: Analytic + ?Sized>(f: &F, p: f64, cfg: &QuadConfig) -> Result<f64, NormError> {
    if p.is_infinite() && p > 0.0 {
        Ok(norm_hinf(f, cfg)?.value)
    } else {
        norm_hp(f, p, cfg)
    }
}

/// `∫_0^{2pi} |f(e^{iθ})|^p dθ/2π`, i.e. `||f||_{H^p}^p`.
pub fn mean_power<F: Analytic + ?Sized>(f: &F, p: f64, cfg: &QuadConfig) -> Result<f64, NormError> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(NormError::BadExponent(p));
    }
    cfg.validate()?;
    let mut n = cfg.base_samples;
    let samples = sample_boundary(f, n)?;
    if cfg.zero_split {
        let zeros = boundary_zeros(f, samples.values());
        if !zeros.is_empty() {
            return graded_mean_power(f, p, &zeros, cfg);
        }
    }
    let mut prev = trapezoid_mean_power(samples.values(), p);
    for _ in 0..cfg.max_refinements {
        n *= 2;
        let est = trapezoid_mean_power(sample_boundary(f, n)?.values(), p);
        if converged(prev, est, cfg.rel_tol) {
            return Ok(est);
        }
        prev = est;
    }
    let last = trapezoid_mean_power(sample_boundary(f, n * 2)?.values(), p);
    if converged(prev, last, cfg.rel_tol) {
        return Ok(last);
    }
    Err(NormError::NotConverged { previous: prev, last })
}

/// `||f||_{H^p}` from a fixed set of samples (single trapezoid, no refinement).
pub fn norm_hp_samples(s: &BoundarySamples, p: f64) -> Result<f64, NormError> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(NormError::BadExponent(p));
    }
    Ok(trapezoid_mean_power(s.values(), p).powf(1.0 / p))
}

/// `∫|f|^p dθ/2π` by graded Gauss-Legendre panels around the given angles,
/// doubling the panel subdivision until `rel_tol` is met.
pub fn graded_mean_power<F: Analytic + ?Sized>(
    f: &F,
    p: f64,
    breakpoints: &[f64],
    cfg: &QuadConfig,
) -> Result<f64, NormError> {
    let g = |theta: f64| f.eval(Complex64::from_polar(1.0, theta)).norm().powf(p);
    graded_mean(&g, breakpoints, cfg)
}

/// Graded circle mean of a real integrand with dyadic panel refinement.
pub fn graded_mean<G: Fn(f64) -> f64 + ?Sized>(g: &G, breakpoints: &[f64], cfg: &QuadConfig) -> Result<f64, NormError> {
    let mut pieces = 1;
    let mut prev = graded_circle_mean(g, breakpoints, pieces);
    for _ in 0..cfg.max_refinements {
        pieces *= 2;
        let est = graded_circle_mean(g, breakpoints, pieces);
        if !est.is_finite() {
            return Err(NormError::NotConverged {
                previous: prev,
                last: est,
            });
        }
        if converged(prev, est, cfg.rel_tol) {
            return Ok(est);
        }
        prev = est;
    }
    let last = graded_circle_mean(g, breakpoints, pieces * 2);
    if converged(prev, last, cfg.rel_tol) {
        return Ok(last);
    }
    Err(NormError::NotConverged { previous: prev, last })
}

fn converged(prev: f64, est: f64, rel_tol: f64) -> bool {
    est.is_finite() && (est - prev).abs() <= rel_tol * est.abs().max(f64::MIN_POSITIVE) || (est == 0.0 && prev == 0.0)
}

fn trapezoid_mean_power(values: &[Complex64], p: f64) -> f64 {
    let sum: f64 = values.iter().map(|v| v.norm().powf(p)).sum();
    sum / values.len() as f64
}

/// Angles of boundary zeros, located by golden-section minimisation of `|f|`
/// around small grid minima. A minimum counts as a zero when it falls below
/// `1e-6 * max|f|`.
pub fn boundary_zeros<F: Analytic + ?Sized>(f: &F, values: &[Complex64]) -> Vec<f64> {
    let n = values.len();
    let mods: Vec<f64> = values.iter().map(|v| v.norm()).collect();
    let max = mods.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return Vec::new();
    }
    let mut candidates: Vec<usize> = (0..n)
        .filter(|&m| {
            let (a, b) = (mods[(m + n - 1) % n], mods[(m + 1) % n]);
            mods[m] <= a && mods[m] <= b && mods[m] < 0.05 * max
        })
        .collect();
    candidates.sort_by(|&a, &b| mods[a].total_cmp(&mods[b]));
    candidates.truncate(64);
    let h = TAU / n as f64;
    let modulus = |theta: f64| f.eval(Complex64::from_polar(1.0, theta)).norm();
    let mut zeros: Vec<f64> = Vec::new();
    for m in candidates {
        let centre = h * m as f64;
        let (theta, v) = if mods[m] == 0.0 {
            (centre, 0.0)
        } else {
            golden_min(&modulus, centre - h, centre + h, 1e-15)
        };
        if v < 1e-6 * max && !zeros.iter().any(|z| (z - theta).abs() < 1e-12) {
            zeros.push(theta.rem_euclid(TAU));
        }
    }
    zeros
}

/// `||f||_{H^inf}`: grid maximum refined by golden-section search around
/// the leading local maxima of the grid.
pub fn norm_hinf<F: Analytic + ?Sized>(f: &F, cfg: &QuadConfig) -> Result<SupNorm, NormError> {
    cfg.validate()?;
    let n = cfg.base_samples * 2;
    let samples = sample_boundary(f, n)?;
    let mods: Vec<f64> = samples.values().iter().map(|v| v.norm()).collect();
    let mut peaks: Vec<usize> = (0..n)
        .filter(|&m| mods[m] >= mods[(m + n - 1) % n] && mods[m] >= mods[(m + 1) % n])
        .collect();
    peaks.sort_by(|&a, &b| mods[b].total_cmp(&mods[a]));
    peaks.truncate(8);
    let h = TAU / n as f64;
    let modulus = |theta: f64| f.eval(Complex64::from_polar(1.0, theta)).norm();
    let mut best = SupNorm { value: 0.0, theta: 0.0 };
    for (i, v) in mods.iter().enumerate() {
        if *v > best.value {
            best = SupNorm {
                value: *v,
                theta: h * i as f64,
            };
        }
    }
    for m in peaks {
        let centre = h * m as f64;
        let (theta, v) = golden_max(&modulus, centre - h, centre + h, 1e-13);
        if v.is_finite() && v > best.value {
            best = SupNorm {
                value: v,
                theta: theta.rem_euclid(TAU),
            };
        }
    }
    Ok(best)
}

/// `sqrt(sum |a_n|^2)`, the `H^2` norm by Parseval.
pub fn parseval_norm(c: &PolyCoeffs) -> f64 {
    c.coeffs.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn binomial_h1_norm_is_central_binomial() {
        let f = PolyCoeffs::binomial(4);
        let v = norm_hp(&f, 1.0, &cfg()).unwrap();
        assert!((v - 6.0).abs() < 1e-10, "{v}");
    }

    #[test]
    fn constant_norm() {
        let c = Complex64::new(-0.6, 0.8) * 3.0;
        for p in [0.3, 1.0, 2.5] {
            let v = norm_hp(&move |_z: Complex64| c, p, &cfg()).unwrap();
            assert!((v - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn linear_h2_norm_matches_parseval() {
        let t: f64 = 0.6;
        let f = PolyCoeffs::from_real(&[t, (1.0 - t * t).sqrt()]);
        assert!((norm_hp(&f, 2.0, &cfg()).unwrap() - 1.0).abs() < 1e-12);
        assert!((parseval_norm(&f) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn parseval_examples() {
        assert!((parseval_norm(&PolyCoeffs::from_real(&[0.6, 0.8])) - 1.0).abs() < 1e-15);
        assert_eq!(parseval_norm(&PolyCoeffs::from_real(&[1.0])), 1.0);
        let v = parseval_norm(&PolyCoeffs::binomial(4));
        assert!((v - 70f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn cusp_integrand_uses_zero_split() {
        // ||1 + z||_{1/2}^{1/2} = (1/2pi) ∫ |2 cos(θ/2)|^{1/2} dθ
        //   = 2^{1/2} Γ(3/4) / (sqrt(pi) Γ(5/4))
        let f = PolyCoeffs::from_real(&[1.0, 1.0]);
        let want = 2f64.sqrt() * 1.225_416_702_465_177_6 / (std::f64::consts::PI.sqrt() * 0.906_402_477_055_477);
        let v = mean_power(&f, 0.5, &cfg()).unwrap();
        assert!((v - want).abs() < 1e-10, "{v} vs {want}");
        // without zero splitting the plain trapezoid cannot reach 1e-9
        let plain = QuadConfig {
            zero_split: false,
            max_refinements: 2,
            ..cfg()
        };
        assert!(matches!(
            mean_power(&f, 0.5, &plain),
            Err(NormError::NotConverged { .. })
        ));
    }

    #[test]
    fn off_grid_zero_is_detected() {
        let root = Complex64::from_polar(1.0, 1.0);
        let f = move |z: Complex64| z - root;
        let s = sample_boundary(&f, 4096).unwrap();
        let zeros = boundary_zeros(&f, s.values());
        assert_eq!(zeros.len(), 1);
        assert!((zeros[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hinf_examples() {
        for k in [2usize, 3] {
            let f = move |z: Complex64| {
                let zk = z.powu(k as u32);
                (1.0 + zk).powu(2) - z * (1.0 - zk).powu(2)
            };
            let s = norm_hinf(&f, &cfg()).unwrap();
            assert!((s.value - 4.0).abs() < 1e-9, "k={k}: {}", s.value);
            assert!((f(Complex64::from_polar(1.0, s.theta)).norm() - s.value).abs() < 1e-12);
        }
        let z5 = PolyCoeffs::monomial(5);
        assert!((norm_hinf(&z5, &cfg()).unwrap().value - 1.0).abs() < 1e-12);
        let t = 0.5;
        let mob = move |z: Complex64| (t + z) / (1.0 + t * z);
        assert!((norm_hinf(&mob, &cfg()).unwrap().value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        let f = PolyCoeffs::binomial(2);
        assert!(matches!(norm_hp(&f, 0.0, &cfg()), Err(NormError::BadExponent(_))));
        assert!(matches!(
            norm_hp(&f, f64::INFINITY, &cfg()),
            Err(NormError::BadExponent(_))
        ));
        let bad = QuadConfig {
            base_samples: 100,
            ..cfg()
        };
        assert!(matches!(norm_hp(&f, 1.0, &bad), Err(NormError::BadConfig(_))));
    }

    #[test]
    fn sample_based_norm() {
        let s = sample_boundary(&PolyCoeffs::from_real(&[0.6, 0.8]), 64).unwrap();
        assert!((norm_hp_samples(&s, 2.0).unwrap() - 1.0).abs() < 1e-14);
    }
}
