//! Direct numerical maximisation of `Re a_k` over the unit ball of `H^p`
//! with `f(0) = t`, searched over the structured extremal family
//! `C prod_{j<l} (lam_j - z)/(1 - conj(lam_j) z) prod_{j<k} (1 - conj(lam_j) z)^{2/p}`.
//!
//! Reductions applied before any search:
//!
//! * the optimum has norm exactly one, and on the circle
//!   `|f|^p = |C|^p |prod (1 - conj(lam_j) z)|^2`, so `|C| = Q^{-1/p}` with
//!   `Q` the squared `H^2` norm of the outer polynomial;
//! * rotations `e^{i phi} f(e^{i psi} z)` preserve the norm and move
//!   `arg f(0)` and `arg a_k` independently, so maximising `Re a_k` with
//!   `f(0) = t` is maximising `|a_k|` with `|f(0)| = t`; the first free
//!   parameter is taken real to remove the remaining symmetry;
//! * `|f(0)| = t` is restored exactly after every trial step by rescaling
//!   the Blaschke parameters (all parameters when `l = 0`) along a ray.
//!
//! What remains is an unconstrained problem in `2k - 1` real variables,
//! solved by multistart Nelder-Mead. Parameters live in `R^2` and reach the
//! closed disc through `w -> w sin|w| / |w|`, which touches the unit circle
//! smoothly at `|w| = pi/2`.

pub mod nelder_mead;

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed_form::{self, ClosedFormError};
use crate::exec::map_indexed;
use crate::fn_repr::{outer_norm_sqr, Analytic, ReprError, StructuredExtremal};
use crate::hardy_norm::{norm, NormError, QuadConfig};
use crate::roots::RootBracket;
use nelder_mead::{minimize, NelderMeadConfig};

/// Blaschke parameters are kept at most this far out during the search.
pub const SEARCH_MAX_MODULUS: f64 = 1.0 - 1e-9;

/// Optima within this distance of the best value count toward clusters.
pub const CLUSTER_VALUE_TOL: f64 = 1e-6;

/// Two optima are the same function when their canonical Taylor
/// coefficients agree to this sup-distance (up to `k`-th root rotations).
pub const CLUSTER_COEFF_TOL: f64 = 1e-3;

/// Values closer than this across zero counts are ties; the smaller count wins.
pub const L_TIE_TOL: f64 = 1e-9;

pub const NORM_RESIDUAL_MAX: f64 = 1e-7;
pub const T_RESIDUAL_MAX: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("invalid solver configuration: {0}")]
    BadConfig(String),
    #[error("no feasible point found for any zero count in {0:?}")]
    Infeasible(Vec<usize>),
    #[error("optimum failed its feasibility check: norm residual {norm_residual:e}, t residual {t_residual:e}")]
    NotConverged { norm_residual: f64, t_residual: f64 },
    #[error("sandwich bound violated: {lower} <= {solved} <= {upper} fails")]
    SandwichBreach { lower: f64, upper: f64, solved: f64 },
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveConfig {
    pub k: usize,
    pub p: f64,
    pub t: f64,
    pub l_range: BTreeSet<usize>,
    pub starts: usize,
    pub seed: u64,
    pub opt_tol: f64,
    pub quad: QuadConfig,
}

impl SolveConfig {
    /// Defaults: every zero count `0..=k`, 64 starts, seed 0, tolerance `1e-10`.
    pub fn new(k: usize, p: f64, t: f64) -> Self {
        Self {
            k,
            p,
            t,
            l_range: (0..=k).collect(),
            starts: 64,
            seed: 0,
            opt_tol: 1e-10,
            quad: QuadConfig::default(),
        }
    }

    pub fn with_t(&self, t: f64) -> Self {
        Self { t, ..self.clone() }
    }

    pub fn validate(&self) -> Result<(), SolveError> {
        let bad = |m: String| Err(SolveError::BadConfig(m));
        if self.k == 0 {
            return bad("k must be at least 1".into());
        }
        if !(self.p > 0.0) {
            return bad(format!("p = {} must be positive", self.p));
        }
        if !(0.0..=1.0).contains(&self.t) {
            return bad(format!("t = {} must lie in [0, 1]", self.t));
        }
        if self.l_range.is_empty() {
            return bad("l_range must be non-empty".into());
        }
        if let Some(&l) = self.l_range.iter().find(|&&l| l > self.k) {
            return bad(format!("zero count {l} exceeds k = {}", self.k));
        }
        if self.starts == 0 {
            return bad("starts must be at least 1".into());
        }
        if !(self.opt_tol > 0.0) {
            return bad("opt_tol must be positive".into());
        }
        self.quad.validate()?;
        Ok(())
    }
}

/// A distinct optimal function found by the multistart search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub l: usize,
    pub value: f64,
    pub representative: StructuredExtremal,
    pub members: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub starts_run: usize,
    pub feasible_starts: usize,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalSolution {
    pub value: f64,
    pub best: StructuredExtremal,
    pub l_used: usize,
    pub norm_residual: f64,
    pub t_residual: f64,
    pub cluster_count: usize,
    pub per_l_values: BTreeMap<usize, f64>,
    pub clusters: Vec<Cluster>,
    pub stats: SolveStats,
}

/// One zero count's search space.
#[derive(Debug, Clone, Copy)]
struct Family {
    k: usize,
    p: f64,
    t: f64,
    l: usize,
    /// `t = 0`: the first Blaschke parameter is pinned at the origin.
    pinned: bool,
}

fn to_disc(a: f64, b: f64) -> Complex64 {
    let r = a.hypot(b);
    if r == 0.0 {
        return Complex64::default();
    }
    Complex64::new(a, b) * (r.sin() / r)
}

impl Family {
    fn first_free(&self) -> usize {
        usize::from(self.pinned)
    }

    fn dim(&self) -> usize {
        let free = self.k - self.first_free();
        if free == 0 {
            0
        } else {
            2 * free - 1
        }
    }

    fn raw_lambdas(&self, w: &[f64]) -> Vec<Complex64> {
        let mut lams = vec![Complex64::default(); self.k];
        let start = self.first_free();
        if start < self.k {
            lams[start] = Complex64::new(w[0].sin(), 0.0);
            for (slot, pair) in lams[start + 1..].iter_mut().zip(w[1..].chunks_exact(2)) {
                *slot = to_disc(pair[0], pair[1]);
            }
        }
        for lam in lams.iter_mut().take(self.l) {
            let r = lam.norm();
            if r > SEARCH_MAX_MODULUS {
                *lam *= SEARCH_MAX_MODULUS / r;
            }
        }
        lams
    }

    /// `ln |f(0)|` of the norm-one member with parameters `lams`.
    fn log_t(&self, lams: &[Complex64]) -> f64 {
        let zeros: f64 = lams[..self.l].iter().map(|z| z.norm().ln()).sum();
        if self.p.is_infinite() {
            zeros
        } else {
            zeros - outer_norm_sqr(lams).ln() / self.p
        }
    }

    /// Rescale parameters so that `|f(0)| = t` holds exactly.
    fn restore(&self, mut lams: Vec<Complex64>) -> Option<Vec<Complex64>> {
        if self.pinned {
            return Some(lams);
        }
        let target = self.t.ln();
        let moved = if self.l == 0 { self.k } else { self.l };
        let top = lams[..moved].iter().map(|z| z.norm()).fold(0.0, f64::max);
        let lowest = lams[..moved].iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
        if top == 0.0 || (self.l > 0 && lowest == 0.0) {
            return None;
        }
        let cap = if self.l == 0 { 1.0 } else { SEARCH_MAX_MODULUS };
        let s_max = cap / top;
        let base = lams.clone();
        let phi = |s: f64| -> f64 {
            let mut scaled = base.clone();
            for z in scaled.iter_mut().take(moved) {
                *z *= s;
            }
            self.log_t(&scaled) - target
        };
        let s = if self.l == 0 {
            if self.p.is_infinite() {
                return None;
            }
            // Q grows monotonically along the ray
            let b = RootBracket::new(&phi, 0.0, s_max).ok()?;
            b.bisect(&phi, 0.0)
        } else {
            // ln|f(0)| <= l ln s + sum ln|lam_j|, so phi < 0 below s_lo
            let log_prod: f64 = lams[..self.l].iter().map(|z| z.norm().ln()).sum();
            let s_lo = ((target - log_prod) / self.l as f64).exp();
            let a = 0.5 * s_lo;
            if a >= s_max {
                return None;
            }
            select_root(&phi, a, s_max)?
        };
        for z in lams.iter_mut().take(moved) {
            *z *= s;
        }
        Some(lams)
    }

    fn assemble(&self, w: &[f64]) -> Option<StructuredExtremal> {
        let lams = self.restore(self.raw_lambdas(w))?;
        let c = if self.p.is_infinite() {
            1.0
        } else {
            outer_norm_sqr(&lams).powf(-1.0 / self.p)
        };
        StructuredExtremal::new(Complex64::new(c, 0.0), self.p, self.l, lams).ok()
    }

    fn objective(&self, w: &[f64]) -> f64 {
        match self.assemble(w) {
            Some(f) => {
                let v = f.taylor_coeffs(self.k + 1)[self.k].norm();
                if v.is_finite() {
                    -v
                } else {
                    f64::INFINITY
                }
            }
            None => f64::INFINITY,
        }
    }
}

/// Root of `phi` on `[a, b]` (in `s`) closest to `s = 1` in log distance,
/// found from a logarithmic scan followed by bisection.
fn select_root<F: Fn(f64) -> f64>(phi: &F, a: f64, b: f64) -> Option<f64> {
    const SCAN: usize = 24;
    let (la, lb) = (a.ln(), b.ln());
    let mut grid: Vec<f64> = (0..=SCAN)
        .map(|i| (la + (lb - la) * i as f64 / SCAN as f64).exp())
        .collect();
    if a < 1.0 && 1.0 < b {
        grid.push(1.0);
        grid.sort_by(f64::total_cmp);
    }
    let vals: Vec<f64> = grid.iter().map(|&s| phi(s)).collect();
    let mut pick: Option<(f64, usize)> = None;
    for i in 0..grid.len() - 1 {
        let (u, v) = (vals[i], vals[i + 1]);
        if !(u.is_finite() && v.is_finite()) || (u < 0.0) == (v < 0.0) {
            continue;
        }
        let d = if grid[i] <= 1.0 && 1.0 <= grid[i + 1] {
            0.0
        } else {
            grid[i].ln().abs().min(grid[i + 1].ln().abs())
        };
        if pick.is_none_or(|(best, _)| d < best) {
            pick = Some((d, i));
        }
    }
    let (_, i) = pick?;
    let bracket = RootBracket::new(phi, grid[i], grid[i + 1]).ok()?;
    Some(bracket.bisect(phi, 0.0))
}

/// Rotate so that `f(0) >= 0` and `a_k >= 0`.
pub fn canonicalize(f: &StructuredExtremal) -> StructuredExtremal {
    let k = f.k().max(1);
    let a = f.taylor_coeffs(k + 1);
    let (a0, ak) = (a[0], a[k]);
    let (phi, psi) = if a0.norm() > 0.0 {
        let th0 = a0.arg();
        let psi = if ak.norm() > 0.0 {
            (th0 - ak.arg()) / k as f64
        } else {
            0.0
        };
        (-th0, psi)
    } else if ak.norm() > 0.0 {
        (-ak.arg(), 0.0)
    } else {
        (0.0, 0.0)
    };
    f.rotated(phi, psi)
}

/// Sup distance between the Taylor coefficients of two canonical forms,
/// minimised over the rotations `z -> e^{2 pi i j/k} z` that keep both
/// normalisations.
pub fn coefficient_distance(f: &StructuredExtremal, g: &StructuredExtremal, k: usize) -> f64 {
    let order = 2 * k + 3;
    let a = f.taylor_coeffs(order);
    let b = g.taylor_coeffs(order);
    (0..k.max(1))
        .map(|j| {
            let step = TAU * j as f64 / k.max(1) as f64;
            a.iter()
                .zip(&b)
                .enumerate()
                .map(|(n, (x, y))| (x - y * Complex64::from_polar(1.0, step * n as f64)).norm())
                .fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

#[derive(Debug, Clone)]
struct StartOutcome {
    l: usize,
    value: f64,
    extremal: StructuredExtremal,
}

fn run_start(fam: &Family, cfg: &SolveConfig, start: usize) -> (Option<StartOutcome>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(((fam.l as u64) << 32) | start as u64);
    let dim = fam.dim();
    let nm = NelderMeadConfig {
        initial_step: 0.3,
        f_tol: 1e-2 * cfg.opt_tol,
        x_tol: 1e-8,
        max_evals: 2000 + 1000 * dim,
        restarts: 3,
    };
    let mut evals = 0;
    for _ in 0..32 {
        let w0: Vec<f64> = (0..dim).map(|_| rng.gen_range(-FRAC_PI_2..FRAC_PI_2)).collect();
        evals += 1;
        if !fam.objective(&w0).is_finite() {
            continue;
        }
        let r = minimize(|w| fam.objective(w), &w0, &nm);
        evals += r.evals;
        let Some(f) = fam.assemble(&r.x) else { continue };
        let extremal = canonicalize(&f);
        let value = extremal.taylor_coeffs(fam.k + 1)[fam.k].re;
        return (
            Some(StartOutcome {
                l: fam.l,
                value,
                extremal,
            }),
            evals,
        );
    }
    (None, evals)
}

fn constant_one(cfg: &SolveConfig) -> Result<ExtremalSolution, SolveError> {
    let best = StructuredExtremal::new(Complex64::new(1.0, 0.0), cfg.p, 0, vec![Complex64::default(); cfg.k])?;
    let norm_residual = (norm(&best, cfg.p, &cfg.quad)? - 1.0).abs();
    Ok(ExtremalSolution {
        value: 0.0,
        best: best.clone(),
        l_used: 0,
        norm_residual,
        t_residual: (best.eval(Complex64::default()) - 1.0).norm(),
        cluster_count: 1,
        per_l_values: BTreeMap::from([(0, 0.0)]),
        clusters: vec![Cluster {
            l: 0,
            value: 0.0,
            representative: best,
            members: 1,
        }],
        stats: SolveStats {
            starts_run: 0,
            feasible_starts: 0,
            evaluations: 0,
        },
    })
}

/// `Phi_k(p, t)` by multistart search over every zero count in `cfg.l_range`.
///
/// `t = 1` forces `f = 1` and is answered directly. For `t = 0` the first
/// Blaschke parameter is pinned at the origin, and `l = 0` is infeasible.
pub fn maximize_phik(cfg: &SolveConfig) -> Result<ExtremalSolution, SolveError> {
    cfg.validate()?;
    if cfg.t == 1.0 {
        return constant_one(cfg);
    }
    let families: Vec<Family> = cfg
        .l_range
        .iter()
        .filter(|&&l| !(cfg.t == 0.0 && l == 0))
        .map(|&l| Family {
            k: cfg.k,
            p: cfg.p,
            t: cfg.t,
            l,
            pinned: cfg.t == 0.0,
        })
        .collect();
    let jobs: Vec<(usize, usize)> = (0..families.len())
        .flat_map(|f| (0..cfg.starts).map(move |s| (f, s)))
        .collect();
    let results = map_indexed(jobs.len(), |i| {
        let (f, s) = jobs[i];
        run_start(&families[f], cfg, s)
    });

    let mut stats = SolveStats {
        starts_run: jobs.len(),
        feasible_starts: 0,
        evaluations: 0,
    };
    let mut outcomes: Vec<StartOutcome> = Vec::new();
    for (o, e) in results {
        stats.evaluations += e;
        if let Some(o) = o {
            stats.feasible_starts += 1;
            outcomes.push(o);
        }
    }
    if outcomes.is_empty() {
        return Err(SolveError::Infeasible(cfg.l_range.iter().copied().collect()));
    }

    let mut per_l_values: BTreeMap<usize, f64> = BTreeMap::new();
    let mut per_l_best: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, o) in outcomes.iter().enumerate() {
        let better = per_l_values.get(&o.l).is_none_or(|&v| o.value > v);
        if better {
            per_l_values.insert(o.l, o.value);
            per_l_best.insert(o.l, i);
        }
    }
    let mut chosen: Option<(usize, f64)> = None;
    for (&l, &v) in &per_l_values {
        if chosen.is_none_or(|(_, best)| v > best + L_TIE_TOL) {
            chosen = Some((l, v));
        }
    }
    let (l_used, _) = chosen.expect("at least one feasible zero count");
    let top = per_l_values.values().copied().fold(f64::NEG_INFINITY, f64::max);
    let best_idx = per_l_best[&l_used];
    let best = outcomes[best_idx].extremal.clone();
    let value = outcomes[best_idx].value;

    let clusters = cluster(&outcomes, top, cfg.k);
    let norm_residual = (norm(&best, cfg.p, &cfg.quad)? - 1.0).abs();
    let t_residual = (best.eval(Complex64::default()) - cfg.t).norm();
    if !(norm_residual < NORM_RESIDUAL_MAX && t_residual < T_RESIDUAL_MAX) {
        return Err(SolveError::NotConverged {
            norm_residual,
            t_residual,
        });
    }
    Ok(ExtremalSolution {
        value: value.max(0.0),
        best,
        l_used,
        norm_residual,
        t_residual,
        cluster_count: clusters.len(),
        per_l_values,
        clusters,
        stats,
    })
}

fn cluster(outcomes: &[StartOutcome], top: f64, k: usize) -> Vec<Cluster> {
    let mut near: Vec<&StartOutcome> = outcomes.iter().filter(|o| o.value >= top - CLUSTER_VALUE_TOL).collect();
    // stable: value descending, then search order
    near.sort_by(|a, b| b.value.total_cmp(&a.value));
    let mut clusters: Vec<Cluster> = Vec::new();
    for o in near {
        match clusters
            .iter_mut()
            .find(|c| coefficient_distance(&c.representative, &o.extremal, k) < CLUSTER_COEFF_TOL)
        {
            Some(c) => c.members += 1,
            None => clusters.push(Cluster {
                l: o.l,
                value: o.value,
                representative: o.extremal.clone(),
                members: 1,
            }),
        }
    }
    clusters
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SandwichRecord {
    pub lower: f64,
    pub upper: f64,
    pub solved: f64,
}

/// Slack allowed on either side of the sandwich.
pub const SANDWICH_TOL: f64 = 1e-6;

/// Check `Phi_1 <= Phi_k <= k^{1/p - 1} Phi_1` at `(cfg.p, cfg.t)`.
pub fn sandwich_check(cfg: &SolveConfig) -> Result<SandwichRecord, SolveError> {
    let phi = closed_form::phi1(cfg.p, cfg.t)?.value;
    let factor = if cfg.p < 1.0 {
        (cfg.k as f64).powf(1.0 / cfg.p - 1.0)
    } else {
        1.0
    };
    let solved = maximize_phik(cfg)?.value;
    let rec = SandwichRecord {
        lower: phi,
        upper: factor * phi,
        solved,
    };
    if solved < rec.lower - SANDWICH_TOL || solved > rec.upper + SANDWICH_TOL {
        return Err(SolveError::SandwichBreach {
            lower: rec.lower,
            upper: rec.upper,
            solved,
        });
    }
    Ok(rec)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroCountEntry {
    pub t: f64,
    pub l: usize,
    pub value: f64,
    pub per_l_values: BTreeMap<usize, f64>,
}

/// Winning zero count at each `t`, searching every `l` in `0..=k`.
pub fn zero_count_scan(base: &SolveConfig, t_grid: &[f64]) -> Result<Vec<ZeroCountEntry>, SolveError> {
    if base.k < 2 {
        return Err(SolveError::BadConfig("zero count scan needs k >= 2".into()));
    }
    let full = SolveConfig {
        l_range: (0..=base.k).collect(),
        ..base.clone()
    };
    t_grid
        .iter()
        .map(|&t| {
            let s = maximize_phik(&full.with_t(t))?;
            Ok(ZeroCountEntry {
                t,
                l: s.l_used,
                value: s.value,
                per_l_values: s.per_l_values,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct T0Probe {
    pub t: f64,
    pub phik: f64,
    pub phi1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct T0ScanReport {
    /// Smallest grid value with `|Phi_k - Phi_1| < tol`.
    pub threshold: f64,
    /// `(1 + (p/(2-p))^2)^{-1/p}`.
    pub reading_negative: f64,
    /// `(1 + (p/(2-p))^2)^{1/p}`; exceeds one, so it is not a valid `t`.
    pub reading_positive: f64,
    pub grid_size: usize,
    pub probes: Vec<T0Probe>,
    /// Every probe above the threshold satisfies `|Phi_k - Phi_1| < tol`.
    pub consistent: bool,
}

/// Agreement tolerance used by [`t0_scan`].
pub const T0_TOL: f64 = 1e-6;

/// Binary search on the grid `i / grid_size` for the smallest `t` at which
/// `Phi_k(p, t)` coincides with `Phi_1(p, t)`, assuming agreement persists
/// once reached; then re-solve at five probes above the threshold.
pub fn t0_scan(base: &SolveConfig, grid_size: usize) -> Result<T0ScanReport, SolveError> {
    if !(base.p > 0.0 && base.p < 1.0) {
        return Err(SolveError::BadConfig("t0 scan needs 0 < p < 1".into()));
    }
    if grid_size < 2 {
        return Err(SolveError::BadConfig("grid needs at least two cells".into()));
    }
    let p = base.p;
    let agrees = |t: f64| -> Result<(bool, T0Probe), SolveError> {
        let phik = maximize_phik(&base.with_t(t))?.value;
        let phi1 = closed_form::phi1(p, t)?.value;
        Ok(((phik - phi1).abs() < T0_TOL, T0Probe { t, phik, phi1 }))
    };
    let t_at = |i: usize| i as f64 / grid_size as f64;
    let (mut lo, mut hi) = (0usize, grid_size);
    if agrees(t_at(0))?.0 {
        hi = 0;
    } else {
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if agrees(t_at(mid))?.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    let threshold = t_at(hi);
    let mut probes = Vec::with_capacity(5);
    let mut consistent = true;
    for j in 1..=5 {
        let t = threshold + (1.0 - threshold) * j as f64 / 6.0;
        let (ok, probe) = agrees(t)?;
        consistent &= ok;
        probes.push(probe);
    }
    let q = 1.0 + (p / (2.0 - p)).powi(2);
    Ok(T0ScanReport {
        threshold,
        reading_negative: q.powf(-1.0 / p),
        reading_positive: q.powf(1.0 / p),
        grid_size,
        probes,
        consistent,
    })
}
