//! Nelder-Mead simplex minimisation with dimension-adaptive coefficients
//! and restarts from the incumbent.
//!
//! Non-finite objective values are allowed and rank as worse than any finite
//! value, so the simplex can be used on objectives that report infeasible
//! points as `+inf`.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadConfig {
    /// Edge length of the initial simplex.
    pub initial_step: f64,
    /// Stop when the spread of simplex values falls below
    /// `f_tol * (1 + |f_best|)` and the simplex diameter below `x_tol`.
    pub f_tol: f64,
    pub x_tol: f64,
    pub max_evals: usize,
    /// Extra runs started from the incumbent with a fresh simplex.
    pub restarts: usize,
}

impl Default for NelderMeadConfig {
    fn default() -> Self {
        Self {
            initial_step: 0.25,
            f_tol: 1e-12,
            x_tol: 1e-9,
            max_evals: 4000,
            restarts: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NelderMeadResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub evals: usize,
    pub converged: bool,
}

fn rank(v: f64) -> f64 {
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

/// Minimise `f` from `x0`.
pub fn minimize<F: FnMut(&[f64]) -> f64>(mut f: F, x0: &[f64], cfg: &NelderMeadConfig) -> NelderMeadResult {
    let n = x0.len();
    if n == 0 {
        let value = rank(f(x0));
        return NelderMeadResult {
            x: Vec::new(),
            value,
            evals: 1,
            converged: true,
        };
    }
    let mut best = x0.to_vec();
    let mut best_value = rank(f(x0));
    let mut evals = 1;
    let mut converged = false;
    let mut step = cfg.initial_step;
    for _ in 0..=cfg.restarts {
        let run = simplex_run(&mut f, &best, step, cfg, cfg.max_evals.saturating_sub(evals));
        evals += run.evals;
        let improved = run.value < best_value - cfg.f_tol * (1.0 + best_value.abs());
        if run.value <= best_value {
            best = run.x;
            best_value = run.value;
        }
        converged = run.converged;
        if !improved || evals >= cfg.max_evals {
            break;
        }
        step = (0.1 * step).max(1e-4);
    }
    NelderMeadResult {
        x: best,
        value: best_value,
        evals,
        converged,
    }
}

fn simplex_run<F: FnMut(&[f64]) -> f64>(
    f: &mut F,
    x0: &[f64],
    step: f64,
    cfg: &NelderMeadConfig,
    budget: usize,
) -> NelderMeadResult {
    let n = x0.len();
    let nf = n as f64;
    // dimension-adaptive coefficients
    let (alpha, gamma) = (1.0, 1.0 + 2.0 / nf);
    let rho = 0.75 - 1.0 / (2.0 * nf);
    let sigma = 1.0 - 1.0 / nf;
    let sigma = if n == 1 { 0.5 } else { sigma };

    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    pts.push(x0.to_vec());
    for i in 0..n {
        let mut p = x0.to_vec();
        p[i] += step;
        pts.push(p);
    }
    let mut vals: Vec<f64> = pts.iter().map(|p| rank(f(p))).collect();
    let mut evals = n + 1;
    let mut converged = false;

    let mut order: Vec<usize> = (0..=n).collect();
    while evals < budget {
        order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        let (ib, iw, isw) = (order[0], order[n], order[n - 1]);
        let (fb, fw, fsw) = (vals[ib], vals[iw], vals[isw]);

        let spread = fw - fb;
        let diam = pts
            .iter()
            .map(|p| p.iter().zip(&pts[ib]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if fb.is_finite() && spread.is_finite() && spread <= cfg.f_tol * (1.0 + fb.abs()) && diam <= cfg.x_tol {
            converged = true;
            break;
        }
        if diam < 1e-15 {
            converged = fb.is_finite();
            break;
        }

        let mut centroid = vec![0.0; n];
        for &i in order.iter().take(n) {
            for (c, x) in centroid.iter_mut().zip(&pts[i]) {
                *c += x / nf;
            }
        }
        let along = |t: f64| -> Vec<f64> { centroid.iter().zip(&pts[iw]).map(|(c, w)| c + t * (c - w)).collect() };

        let xr = along(alpha);
        let fr = rank(f(&xr));
        evals += 1;
        if fr < fb {
            let xe = along(alpha * gamma);
            let fe = rank(f(&xe));
            evals += 1;
            if fe < fr {
                pts[iw] = xe;
                vals[iw] = fe;
            } else {
                pts[iw] = xr;
                vals[iw] = fr;
            }
            continue;
        }
        if fr < fsw {
            pts[iw] = xr;
            vals[iw] = fr;
            continue;
        }
        let (xc, fc) = if fr < fw {
            let xc = along(alpha * rho);
            let fc = rank(f(&xc));
            (xc, fc)
        } else {
            let xc = along(-rho);
            let fc = rank(f(&xc));
            (xc, fc)
        };
        evals += 1;
        if fc < fw.min(fr) {
            pts[iw] = xc;
            vals[iw] = fc;
            continue;
        }
        // shrink toward the best vertex
        let xb = pts[ib].clone();
        for i in 0..=n {
            if i == ib {
                continue;
            }
            for (x, b) in pts[i].iter_mut().zip(&xb) {
                *x = b + sigma * (*x - b);
            }
            vals[i] = rank(f(&pts[i]));
            evals += 1;
        }
    }
    let ib = (0..=n).min_by(|&a, &b| vals[a].total_cmp(&vals[b])).unwrap_or(0);
    NelderMeadResult {
        x: pts[ib].clone(),
        value: vals[ib],
        evals,
        converged,
    }
}
