//! Acceptance criteria, one pass/fail line each. Exits non-zero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hardyx::closed_form::{self as cf};
use hardyx::figures;
use hardyx::fn_repr::PolyCoeffs;
use hardyx::hardy_norm::{norm_hinf, norm_hp, parseval_norm, QuadConfig};
use hardyx::solver::{maximize_phik, sandwich_check, t0_scan, zero_count_scan, SolveConfig};
use hardyx::verify::{appendix_sweep, hinf_example, random_polynomial, wiener_sweep, VerifyOptions};
use hardyx::wiener::{sharpness_limit, sharpness_ratio, wiener_bound_check};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn criterion(id: usize, name: &str, budget: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = run();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let passed = out.passed && in_time;
    let timing = if in_time {
        String::new()
    } else {
        format!(" [over budget {:.0?}]", budget)
    };
    println!(
        "{} {id:>2}. {name} ({:.2?}){timing}: {}",
        if passed { "PASS" } else { "FAIL" },
        elapsed,
        out.detail
    );
    passed
}

fn closed_form_cross_checks() -> Outcome {
    let grid: Vec<f64> = (0..1000).map(|i| i as f64 / 999.0).collect();
    let mut e2 = 0.0f64;
    let mut einf = 0.0f64;
    for &t in &grid {
        e2 = e2.max((cf::phi1(2.0, t).unwrap().value - (1.0 - t * t).sqrt()).abs());
        einf = einf.max((cf::phi1(f64::INFINITY, t).unwrap().value - (1.0 - t * t)).abs());
    }
    outcome(
        e2 < 1e-12 && einf < 1e-12,
        format!("max error p=2 {e2:.2e}, p=inf {einf:.2e}"),
    )
}

fn norm_oracle() -> Outcome {
    let cfg = QuadConfig::default();
    let n4 = norm_hp(&PolyCoeffs::binomial(4), 1.0, &cfg).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let f = random_polynomial(&mut rng, 32);
        let q = norm_hp(&f, 2.0, &cfg).unwrap();
        worst = worst.max((q - parseval_norm(&f)).abs());
    }
    outcome(
        (n4 - 6.0).abs() < 1e-8 && worst < 1e-8,
        format!("||(1+z)^4||_1 - 6 = {:.2e}, worst Parseval gap {worst:.2e}", n4 - 6.0),
    )
}

fn wiener_bound_suite() -> Outcome {
    let s = wiener_sweep(&VerifyOptions::default());
    outcome(
        s.errors == 0 && s.worst_excess <= 1e-6 && s.near_equality_failures == 0,
        format!(
            "{} cases, worst ratio/bound - 1 = {:.2e}, {} near-equality cases with {} failures, {} errors",
            s.cases, s.worst_excess, s.near_equalities, s.near_equality_failures, s.errors
        ),
    )
}

fn sharpness() -> Outcome {
    let cfg = QuadConfig::default();
    let eps = [1e-2, 1e-3, 1e-4, 1e-5];
    let ratios: Vec<f64> = eps.iter().map(|&e| sharpness_ratio(0.5, 2, e, &cfg).unwrap()).collect();
    let increasing = ratios.windows(2).all(|w| w[1] > w[0]);
    let target = 0.95 * sharpness_limit(0.5, 2);
    let last = *ratios.last().unwrap();
    outcome(
        increasing && last > target,
        format!(
            "ratios {:?}, increasing = {increasing}, ratio at 1e-5 = {last:.6} vs required {target:.6}",
            ratios.iter().map(|r| format!("{r:.6}")).collect::<Vec<_>>()
        ),
    )
}

fn equality_examples() -> Outcome {
    let cfg = QuadConfig::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for k in [2usize, 3] {
        let r = wiener_bound_check(&PolyCoeffs::binomial(2 * k), k, 1.0, &cfg, "binomial").unwrap();
        let h = norm_hinf(&hinf_example(k), &cfg).unwrap().value;
        ok &= (r.ratio - 1.0).abs() <= 1e-7 && (h - 4.0).abs() <= 1e-9;
        parts.push(format!("k={k}: ratio-1 {:.2e}, sup-4 {:.2e}", r.ratio - 1.0, h - 4.0));
    }
    outcome(ok, parts.join("; "))
}

fn appendix_suite() -> Outcome {
    let s = appendix_sweep(1000);
    let n = s.points;
    let ok = s.errors == 0
        && [
            s.h_positive,
            s.k_negative,
            s.f_alpha2_negative,
            s.f_alpha1_positive,
            s.root_residual_ok,
            s.alpha_ordered,
            s.band_ordered,
        ]
        .iter()
        .all(|&c| c == n);
    outcome(
        ok,
        format!(
            "H>0 {}/{n}, K<0 {}/{n}, F(a2)<0 {}/{n}, F(a1)>0 {}/{n}, |F(ap)|<1e-12 {}/{n} (worst {:.1e}), order {}/{n}, band {}/{n}",
            s.h_positive,
            s.k_negative,
            s.f_alpha2_negative,
            s.f_alpha1_positive,
            s.root_residual_ok,
            s.worst_root_residual,
            s.alpha_ordered,
            s.band_ordered
        ),
    )
}

fn solver_vs_closed_form() -> Outcome {
    let mut worst1 = 0.0f64;
    let mut worst2 = 0.0f64;
    let mut failures = Vec::new();
    let ts: Vec<f64> = (0..10).map(|j| (j as f64 + 0.5) / 10.0).collect();
    for p in [0.5, 1.0, 2.0, 4.0, f64::INFINITY] {
        for &t in &ts {
            let want = cf::phi1(p, t).unwrap().value;
            match maximize_phik(&SolveConfig::new(1, p, t)) {
                Ok(s) => worst1 = worst1.max((s.value - want).abs()),
                Err(e) => failures.push(format!("k=1 p={p} t={t}: {e}")),
            }
        }
    }
    for p in [1.0, 2.0, f64::INFINITY] {
        for t in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let want = cf::phi1(p, t).unwrap().value;
            match maximize_phik(&SolveConfig::new(2, p, t)) {
                Ok(s) => worst2 = worst2.max((s.value - want).abs()),
                Err(e) => failures.push(format!("k=2 p={p} t={t}: {e}")),
            }
        }
    }
    outcome(
        failures.is_empty() && worst1 < 1e-5 && worst2 < 1e-5,
        format!("50 pairs k=1 worst {worst1:.2e}; 15 pairs k=2 worst {worst2:.2e}; errors {failures:?}"),
    )
}

fn non_uniqueness() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for p in [0.4, 0.6] {
        let tp = cf::t_p(p).unwrap();
        let ap = cf::alpha_p(p).unwrap();
        let bp = cf::beta_of_alpha(p, ap).unwrap();
        let s = maximize_phik(&SolveConfig::new(1, p, tp)).unwrap();
        let case_i = cf::moebius_outer_extremal(p, ap);
        let case_ii = cf::outer_extremal(p, bp);
        let matches = |target: &hardyx::StructuredExtremal| {
            s.clusters.iter().any(|c| {
                c.representative.zero_count() == target.zero_count()
                    && (c.representative.scale() - target.scale()).norm() < 1e-4
                    && c.representative
                        .lambdas()
                        .iter()
                        .zip(target.lambdas())
                        .all(|(a, b)| (a - b).norm() < 1e-4)
            })
        };
        let (mi, mii) = (matches(&case_i), matches(&case_ii));
        ok &= s.cluster_count >= 2 && mi && mii;
        parts.push(format!(
            "p={p}: {} clusters, case (i) found {mi}, case (ii) found {mii}",
            s.cluster_count
        ));
    }
    outcome(ok, parts.join("; "))
}

fn exploration() -> Outcome {
    let (k, p) = (2usize, 0.5);
    let base = SolveConfig::new(k, p, 0.0);
    let grid: Vec<f64> = (0..20).map(|i| i as f64 / 19.0).collect();
    let mut breaches = Vec::new();
    for &t in &grid {
        if let Err(e) = sandwich_check(&base.with_t(t)) {
            breaches.push(format!("t={t:.3}: {e}"));
        }
    }
    let scan = zero_count_scan(&base, &grid);
    let (l_ok, ls) = match &scan {
        Ok(rows) => (
            rows.iter().all(|r| r.l <= 1),
            rows.iter().map(|r| r.l).collect::<Vec<_>>(),
        ),
        Err(_) => (false, Vec::new()),
    };
    let t0 = t0_scan(&base, 64);
    let (t0_ok, t0_detail) = match &t0 {
        Ok(r) => (
            r.threshold > 0.0 && r.threshold < 1.0 && r.consistent,
            format!(
                "threshold {:.4} (readings {:.4} / {:.4}), probes consistent {}",
                r.threshold, r.reading_negative, r.reading_positive, r.consistent
            ),
        ),
        Err(e) => (false, e.to_string()),
    };
    outcome(
        breaches.is_empty() && l_ok && t0_ok,
        format!("sandwich breaches {breaches:?}; winning l {ls:?}; {t0_detail}"),
    )
}

fn figures_check() -> Outcome {
    let a1 = figures::figure1_csv(&figures::figure1_rows().unwrap());
    let a2 = figures::figure2_csv(&figures::figure2_rows().unwrap());
    let b1 = figures::figure1_csv(&figures::figure1_rows().unwrap());
    let b2 = figures::figure2_csv(&figures::figure2_rows().unwrap());
    let stable = a1 == b1 && a2 == b2;
    let rows = figures::figure1_rows().unwrap();
    let mut shape_errors = Vec::new();
    for p in figures::FIGURE1_EXPONENTS {
        let curve: Vec<_> = rows.iter().copied().filter(|r| r.p == p).collect();
        if let Err(e) = figures::check_phi1_shape(&curve) {
            shape_errors.push(e);
        }
    }
    let band = figures::figure2_rows().unwrap();
    let band_ok = band.iter().all(|r| r.lower < r.t_p && r.t_p < r.upper);
    let t_p_increasing = band.windows(2).all(|w| w[1].t_p > w[0].t_p);
    outcome(
        stable && shape_errors.is_empty() && band_ok,
        format!(
            "byte-stable {stable}, shape errors {shape_errors:?}, band ordered {band_ok}, t_p increasing {t_p_increasing}"
        ),
    )
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "closed-form cross-checks", s(1), closed_form_cross_checks),
        criterion(2, "norm oracle", s(10), norm_oracle),
        criterion(3, "Wiener bound suite", s(60), wiener_bound_suite),
        criterion(4, "sharpness of the quasi-norm bound", s(30), sharpness),
        criterion(5, "equality examples", s(10), equality_examples),
        criterion(6, "auxiliary function sign pattern", s(10), appendix_suite),
        criterion(7, "solver vs closed form", s(600), solver_vs_closed_form),
        criterion(8, "non-uniqueness at t_p", s(600), non_uniqueness),
        criterion(9, "k = 2 exploration", s(1800), exploration),
        criterion(10, "figure data", s(60), figures_check),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
