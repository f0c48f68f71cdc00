//! Self-check suites: the Wiener bound, the sign pattern of the auxiliary
//! functions on `0 < p < 1`, and cross-checks between the closed forms, the
//! quadrature and the solver. Each check yields a named pass/fail line.

use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::closed_form::{self as cf, Regime};
use crate::figures;
use crate::fn_repr::PolyCoeffs;
use crate::hardy_norm::{norm, norm_hinf, norm_hp, parseval_norm, QuadConfig};
use crate::solver::{maximize_phik, sandwich_check, SolveConfig};
use crate::wiener::{wiener_bound_check, wiener_coeffs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Wiener,
    Appendix,
    Theorems,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "wiener" => Some(Suite::Wiener),
            "appendix" => Some(Suite::Appendix),
            "theorems" => Some(Suite::Theorems),
            "all" => Some(Suite::All),
            _ => None,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Wiener => "wiener",
            Suite::Appendix => "appendix",
            Suite::Theorems => "theorems",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Sizes of the randomised and gridded parts of the suites.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub random_polys: usize,
    pub max_degree: usize,
    pub appendix_points: usize,
    pub seed: u64,
    pub quad: QuadConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            random_polys: 200,
            max_degree: 32,
            appendix_points: 1000,
            seed: 2024,
            quad: QuadConfig::default(),
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let checks = match suite {
        Suite::Wiener => wiener_suite(opts),
        Suite::Appendix => appendix_suite(opts),
        Suite::Theorems => theorems_suite(opts),
        Suite::All => {
            let mut v = wiener_suite(opts);
            v.extend(appendix_suite(opts));
            v.extend(theorems_suite(opts));
            v
        }
    };
    VerifyReport { suite, checks }
}

/// Polynomial of uniformly random degree `0..=max_degree` with coefficients
/// uniform in the square `[-1, 1]^2`.
pub fn random_polynomial(rng: &mut impl Rng, max_degree: usize) -> PolyCoeffs {
    let degree = rng.gen_range(0..=max_degree);
    let coeffs = (0..=degree)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    PolyCoeffs::new(coeffs)
}

/// `g(z^k)` for a random `g`: a fixed point of `W_k`, hence an equality case.
pub fn random_lacunary(rng: &mut impl Rng, k: usize, max_degree: usize) -> PolyCoeffs {
    let g = random_polynomial(rng, (max_degree / k).max(1));
    let mut coeffs = vec![Complex64::default(); k * (g.len() - 1) + 1];
    for (j, &a) in g.coeffs.iter().enumerate() {
        coeffs[k * j] = a;
    }
    PolyCoeffs::new(coeffs)
}

pub const WIENER_ORDERS: [usize; 3] = [2, 3, 5];
pub const WIENER_EXPONENTS: [f64; 6] = [0.4, 0.7, 1.0, 2.0, 4.0, f64::INFINITY];

/// Worst ratio-to-bound excess and count of near-equality violations over
/// the random polynomial family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WienerSweep {
    pub cases: usize,
    pub worst_excess: f64,
    pub near_equalities: usize,
    pub near_equality_failures: usize,
    pub errors: usize,
}

pub fn wiener_sweep(opts: &VerifyOptions) -> WienerSweep {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut sweep = WienerSweep {
        cases: 0,
        worst_excess: f64::NEG_INFINITY,
        near_equalities: 0,
        near_equality_failures: 0,
        errors: 0,
    };
    for i in 0..opts.random_polys {
        for &k in &WIENER_ORDERS {
            // every fourth polynomial is lacunary so that equality cases occur
            let f = if i % 4 == 3 {
                random_lacunary(&mut rng, k, opts.max_degree)
            } else {
                random_polynomial(&mut rng, opts.max_degree)
            };
            if f.coeffs.iter().all(|c| c.norm() == 0.0) {
                continue;
            }
            for &p in &WIENER_EXPONENTS {
                sweep.cases += 1;
                let Ok(r) = wiener_bound_check(&f, k, p, &opts.quad, "random polynomial") else {
                    sweep.errors += 1;
                    continue;
                };
                sweep.worst_excess = sweep.worst_excess.max(r.ratio / r.bound - 1.0);
                if p > 1.0 && p.is_finite() && r.ratio >= 1.0 - 1e-9 {
                    sweep.near_equalities += 1;
                    let diff = wiener_coeffs(&f, k).map(|w| w.sub(&f));
                    let gap = diff.ok().and_then(|d| norm_hp(&d, p, &opts.quad).ok());
                    if !gap.is_some_and(|g| g < 1e-6) {
                        sweep.near_equality_failures += 1;
                    }
                }
            }
        }
    }
    sweep
}

fn wiener_suite(opts: &VerifyOptions) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let s = wiener_sweep(opts);
    out.push(CheckResult::new(
        "wiener bound on random polynomials",
        s.errors == 0 && s.worst_excess <= 1e-6,
        format!(
            "{} cases, worst ratio/bound - 1 = {:.3e}, {} errors",
            s.cases, s.worst_excess, s.errors
        ),
    ));
    out.push(CheckResult::new(
        "near-equality forces W_k f = f for 1 < p < inf",
        s.near_equality_failures == 0 && s.near_equalities > 0,
        format!(
            "{} near-equality cases, {} without W_k f = f",
            s.near_equalities, s.near_equality_failures
        ),
    ));
    for k in [2usize, 3] {
        let f = PolyCoeffs::binomial(2 * k);
        let r = wiener_bound_check(&f, k, 1.0, &opts.quad, "(1+z)^{2k}");
        let ok = r.as_ref().is_ok_and(|r| (r.ratio - 1.0).abs() <= 1e-7);
        out.push(CheckResult::new(
            &format!("equality for (1+z)^{} at p = 1", 2 * k),
            ok,
            format!("{:?}", r.map(|r| r.ratio)),
        ));
        let g = hinf_example(k);
        let h = norm_hinf(&g, &opts.quad).map(|s| s.value);
        out.push(CheckResult::new(
            &format!("sup norm of (1+z^{k})^2 - z(1-z^{k})^2 is 4"),
            h.as_ref().is_ok_and(|v| (v - 4.0).abs() <= 1e-9),
            format!("{h:?}"),
        ));
    }
    out
}

/// `(1 + z^k)^2 - z (1 - z^k)^2`, whose sup norm on the circle is 4 while
/// its `W_k` image has sup norm 4 as well.
pub fn hinf_example(k: usize) -> PolyCoeffs {
    let mut c = vec![Complex64::default(); 2 * k + 2];
    c[0] += 1.0;
    c[k] += 2.0;
    c[2 * k] += 1.0;
    c[1] -= 1.0;
    c[k + 1] += 2.0;
    c[2 * k + 1] -= 1.0;
    PolyCoeffs::new(c)
}

/// Sign pattern on the grid `p_i = i/(n+1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AppendixSweep {
    pub points: usize,
    pub h_positive: usize,
    pub k_negative: usize,
    pub f_alpha2_negative: usize,
    pub f_alpha1_positive: usize,
    pub root_residual_ok: usize,
    pub alpha_ordered: usize,
    pub band_ordered: usize,
    pub worst_root_residual: f64,
    pub errors: usize,
}

pub fn appendix_sweep(points: usize) -> AppendixSweep {
    let mut s = AppendixSweep {
        points,
        h_positive: 0,
        k_negative: 0,
        f_alpha2_negative: 0,
        f_alpha1_positive: 0,
        root_residual_ok: 0,
        alpha_ordered: 0,
        band_ordered: 0,
        worst_root_residual: 0.0,
        errors: 0,
    };
    for i in 1..=points {
        let p = i as f64 / (points + 1) as f64;
        s.h_positive += usize::from(cf::h_fn(p) > 0.0);
        s.k_negative += usize::from(cf::k_fn(p) < 0.0);
        let (Ok(a1), Ok(a2), Ok(ap), Ok(tp), Ok((lo, hi))) = (
            cf::alpha1(p),
            cf::alpha2(p),
            cf::alpha_p(p),
            cf::t_p(p),
            cf::t_p_band(p),
        ) else {
            s.errors += 1;
            continue;
        };
        s.f_alpha2_negative += usize::from(cf::f_p(p, a2) < 0.0);
        // a_1 underflows toward 2^{-1/p} for small p; the scaled form keeps the sign finite
        let f1 = cf::f_p(p, a1);
        let f1_positive = if f1.is_finite() {
            f1 > 0.0
        } else {
            cf::f_p_scaled(p, a1) > 0.0
        };
        s.f_alpha1_positive += usize::from(f1_positive);
        let res = cf::f_p(p, ap).abs();
        s.worst_root_residual = s.worst_root_residual.max(res);
        s.root_residual_ok += usize::from(res < 1e-12);
        s.alpha_ordered += usize::from(a1 < ap && ap < a2);
        s.band_ordered += usize::from(lo < tp && tp < hi);
    }
    s
}

fn appendix_suite(opts: &VerifyOptions) -> Vec<CheckResult> {
    let s = appendix_sweep(opts.appendix_points);
    let n = s.points;
    let line = |name: &str, count: usize| {
        CheckResult::new(name, count == n && s.errors == 0, format!("{count}/{n} grid points"))
    };
    vec![
        line("H(p) > 0", s.h_positive),
        line("K(p) < 0", s.k_negative),
        line("F_p(alpha_2) < 0", s.f_alpha2_negative),
        line("F_p(alpha_1) > 0", s.f_alpha1_positive),
        CheckResult::new(
            "|F_p(alpha_p)| < 1e-12",
            s.root_residual_ok == n,
            format!("{}/{n}, worst {:.3e}", s.root_residual_ok, s.worst_root_residual),
        ),
        line("alpha_1 < alpha_p < alpha_2", s.alpha_ordered),
        line("2^{-1/p} < t_p < 2^{-1/p} sqrt(p) (2-p)^{1/p-1/2}", s.band_ordered),
    ]
}

fn theorems_suite(opts: &VerifyOptions) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let grid: Vec<f64> = (0..1000).map(|i| i as f64 / 999.0).collect();
    let err2 = grid
        .iter()
        .map(|&t| (cf::phi1(2.0, t).map_or(f64::INFINITY, |r| r.value) - (1.0 - t * t).sqrt()).abs())
        .fold(0.0, f64::max);
    out.push(CheckResult::new(
        "Phi_1(2, t) = sqrt(1 - t^2)",
        err2 < 1e-12,
        format!("max error {err2:.3e}"),
    ));
    let erri = grid
        .iter()
        .map(|&t| (cf::phi1(f64::INFINITY, t).map_or(f64::INFINITY, |r| r.value) - (1.0 - t * t)).abs())
        .fold(0.0, f64::max);
    out.push(CheckResult::new(
        "Phi_1(inf, t) = 1 - t^2",
        erri < 1e-12,
        format!("max error {erri:.3e}"),
    ));

    let n4 = norm_hp(&PolyCoeffs::binomial(4), 1.0, &opts.quad);
    out.push(CheckResult::new(
        "||(1+z)^4||_1 = 6",
        n4.as_ref().is_ok_and(|v| (v - 6.0).abs() < 1e-8),
        format!("{n4:?}"),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let f = random_polynomial(&mut rng, 32);
        let q = norm(&f, 2.0, &opts.quad).unwrap_or(f64::INFINITY);
        worst = worst.max((q - parseval_norm(&f)).abs());
    }
    out.push(CheckResult::new(
        "quadrature agrees with Parseval at p = 2",
        worst < 1e-8,
        format!("max gap {worst:.3e}"),
    ));

    let shapes: Vec<String> = figures::FIGURE1_EXPONENTS
        .iter()
        .filter_map(|&p| match figures::phi1_curve(p, figures::FIGURE1_POINTS) {
            Ok(rows) => figures::check_phi1_shape(&rows).err(),
            Err(e) => Some(e.to_string()),
        })
        .collect();
    out.push(CheckResult::new(
        "Phi_1 curve shapes",
        shapes.is_empty(),
        shapes.join("; "),
    ));

    let r = cf::t_p(0.5).and_then(|tp| cf::phi1(0.5, tp));
    out.push(CheckResult::new(
        "both extremals at t_p",
        r.as_ref().is_ok_and(|r| r.regime == Regime::Both),
        format!("{r:?}"),
    ));

    let quick = |k: usize, p: f64, t: f64| SolveConfig {
        starts: 24,
        ..SolveConfig::new(k, p, t)
    };
    for (k, p, t) in [
        (1usize, 2.0, 0.6),
        (1, f64::INFINITY, 0.5),
        (1, 0.5, 0.3),
        (2, 1.0, 0.7),
        (2, 2.0, 0.4),
    ] {
        let want = cf::phi1(p, t).map(|r| r.value);
        let got = maximize_phik(&quick(k, p, t)).map(|s| s.value);
        let ok = matches!((&want, &got), (Ok(w), Ok(g)) if (w - g).abs() < 1e-5);
        out.push(CheckResult::new(
            &format!("solver Phi_{k}({p}, {t}) matches Phi_1"),
            ok,
            format!("closed form {want:?}, solver {got:?}"),
        ));
    }
    for t in [0.1, 0.9] {
        let r = sandwich_check(&quick(2, 0.5, t));
        out.push(CheckResult::new(
            &format!("sandwich at k = 2, p = 0.5, t = {t}"),
            r.is_ok(),
            format!("{r:?}"),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hinf_example_has_expected_endpoint_values() {
        use crate::fn_repr::Analytic;
        let f = hinf_example(2);
        assert!((f.eval(Complex64::new(1.0, 0.0)) - Complex64::new(4.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn lacunary_is_fixed_by_transform() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random_lacunary(&mut rng, 3, 12);
        assert_eq!(wiener_coeffs(&f, 3).unwrap(), f);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Wiener, Suite::Appendix, Suite::Theorems, Suite::All] {
            assert_eq!(Suite::parse(&s.to_string()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn small_appendix_sweep_passes() {
        let s = appendix_sweep(50);
        assert_eq!(s.errors, 0);
        assert_eq!(s.alpha_ordered, 50);
        assert_eq!(s.band_ordered, 50);
    }
}
