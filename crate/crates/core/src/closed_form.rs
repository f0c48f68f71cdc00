//! Closed-form solution of the `k = 1` problem
//! `Phi_1(p, t) = sup { Re f'(0) : ||f||_{H^p} <= 1, f(0) = t }` for all
//! `0 < p <= inf`, together with the implicit parameters and the auxiliary
//! functions whose signs decide where the extremal switches form.
//!
//! Two extremal shapes compete:
//!
//! * Moebius-outer: `f_1 = (a+z)/(1+a z) * (1+a z)^{2/p} / (1+a^2)^{1/p}`,
//!   with `t = a (1+a^2)^{-1/p}`;
//! * outer: `f_2 = (1+b z)^{2/p} / (1+b^2)^{1/p}`, with `t = (1+b^2)^{-1/p}`.
//!
//! For `p >= 1` the switch happens at `t = 2^{-1/p}`. For `0 < p < 1` it
//! happens at `t_p = a_p (1+a_p^2)^{-1/p}`, where `a_p` is the unique root
//! of [`f_p`] in `(0, 1)`; there both shapes are extremal.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fn_repr::StructuredExtremal;
use crate::roots::{solve_bracketed, RootBracket, RootError};

/// Out-of-range slack absorbed by clamping at branch boundaries.
pub const CLAMP_TOL: f64 = 1e-14;

/// Half-width of the window around `t_p` reported as [`Regime::Both`].
pub const BOTH_TOL: f64 = 1e-14;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClosedFormError {
    #[error("exponent p = {0} outside the admissible range")]
    BadExponent(f64),
    #[error("t = {t} outside the branch range [{lo}, {hi}]")]
    OutOfRange { t: f64, lo: f64, hi: f64 },
    #[error("argument {0} outside the domain of the auxiliary function")]
    BadArgument(f64),
    #[error("root bracketing failed: {0}")]
    Bracket(#[from] RootError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Regime {
    /// Case (i): Moebius factor times outer factor.
    MoebiusOuter,
    /// Case (ii): pure outer factor.
    Outer,
    /// `t = t_p`, `0 < p < 1`: both shapes are extremal.
    Both,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::MoebiusOuter => "MOEBIUS_OUTER",
            Regime::Outer => "OUTER",
            Regime::Both => "BOTH",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormResult {
    pub value: f64,
    pub regime: Regime,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
}

fn check_p(p: f64) -> Result<(), ClosedFormError> {
    if p > 0.0 {
        Ok(())
    } else {
        Err(ClosedFormError::BadExponent(p))
    }
}

fn check_sub_one(p: f64) -> Result<(), ClosedFormError> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(ClosedFormError::BadExponent(p))
    }
}

fn inv_p(p: f64) -> f64 {
    if p.is_infinite() {
        0.0
    } else {
        1.0 / p
    }
}

/// `a (1 + a^2)^{-1/p}`, the value `f_1(0)`.
pub fn t_of_alpha(p: f64, alpha: f64) -> f64 {
    alpha * (1.0 + alpha * alpha).powf(-inv_p(p))
}

/// `(1 + b^2)^{-1/p}`, the value `f_2(0)`.
pub fn t_of_beta(p: f64, beta: f64) -> f64 {
    (1.0 + beta * beta).powf(-inv_p(p))
}

/// `f_1'(0) = (1+a^2)^{-1/p} (1 + (2/p - 1) a^2)`.
pub fn f1_slope(p: f64, alpha: f64) -> f64 {
    let ip = inv_p(p);
    (1.0 + alpha * alpha).powf(-ip) * (1.0 + (2.0 * ip - 1.0) * alpha * alpha)
}

/// `f_2'(0) = (1+b^2)^{-1/p} 2b/p`.
pub fn f2_slope(p: f64, beta: f64) -> f64 {
    t_of_beta(p, beta) * 2.0 * beta * inv_p(p)
}

/// Upper end of the increasing branch of `a -> a(1+a^2)^{-1/p}`.
fn alpha_branch_end(p: f64) -> f64 {
    if p < 1.0 {
        alpha2(p).unwrap_or(1.0)
    } else {
        1.0
    }
}

/// Root of `a (1+a^2)^{-1/p} = t` on the increasing branch: `[0, 1)` for
/// `p >= 1`, `[0, a_2]` with `a_2 = sqrt(p/(2-p))` for `p < 1`.
pub fn solve_alpha(p: f64, t: f64) -> Result<f64, ClosedFormError> {
    check_p(p)?;
    if p.is_infinite() {
        return if (0.0..1.0).contains(&t) {
            Ok(t)
        } else {
            Err(ClosedFormError::OutOfRange { t, lo: 0.0, hi: 1.0 })
        };
    }
    let end = alpha_branch_end(p);
    let t_max = t_of_alpha(p, end);
    let open_top = p >= 1.0;
    if t < 0.0 || t > t_max + CLAMP_TOL || (open_top && t >= t_max && t - t_max > CLAMP_TOL) || !t.is_finite() {
        return Err(ClosedFormError::OutOfRange { t, lo: 0.0, hi: t_max });
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    if t >= t_max {
        return Ok(end);
    }
    let ip = 1.0 / p;
    let g = |a: f64| t_of_alpha(p, a) - t;
    let dg = |a: f64| {
        let s = 1.0 + a * a;
        s.powf(-ip) * (1.0 - 2.0 * ip * a * a / s)
    };
    Ok(solve_bracketed(&g, &dg, 0.0, end, 0.0)?)
}

/// `b = sqrt(t^{-p} - 1)`, required to lie in `[0, 1]`.
pub fn solve_beta(p: f64, t: f64) -> Result<f64, ClosedFormError> {
    check_p(p)?;
    if p.is_infinite() {
        return if t == 1.0 {
            Ok(0.0)
        } else {
            Err(ClosedFormError::OutOfRange { t, lo: 1.0, hi: 1.0 })
        };
    }
    let lo = 2f64.powf(-1.0 / p);
    if !(t <= 1.0) || t < lo - CLAMP_TOL {
        return Err(ClosedFormError::OutOfRange { t, lo, hi: 1.0 });
    }
    let b2 = t.powf(-p) - 1.0;
    Ok(b2.max(0.0).sqrt().min(1.0))
}

/// `Phi_1(p, t)` with its regime and implicit parameter.
pub fn phi1(p: f64, t: f64) -> Result<ClosedFormResult, ClosedFormError> {
    check_p(p)?;
    if !(0.0..=1.0).contains(&t) {
        return Err(ClosedFormError::OutOfRange { t, lo: 0.0, hi: 1.0 });
    }
    if p >= 1.0 {
        let switch = 2f64.powf(-inv_p(p));
        return if t < switch {
            let alpha = solve_alpha(p, t)?;
            Ok(ClosedFormResult {
                value: f1_slope(p, alpha),
                regime: Regime::MoebiusOuter,
                alpha: Some(alpha),
                beta: None,
            })
        } else {
            let beta = solve_beta(p, t)?;
            Ok(ClosedFormResult {
                value: t * 2.0 * beta * inv_p(p),
                regime: Regime::Outer,
                alpha: None,
                beta: Some(beta),
            })
        };
    }
    let ap = alpha_p(p)?;
    let tp = t_of_alpha(p, ap);
    if (t - tp).abs() <= BOTH_TOL {
        let beta = beta_of_alpha(p, ap)?;
        return Ok(ClosedFormResult {
            value: tp * 2.0 * beta / p,
            regime: Regime::Both,
            alpha: Some(ap),
            beta: Some(beta),
        });
    }
    if t < tp {
        let alpha = solve_alpha(p, t)?;
        Ok(ClosedFormResult {
            value: f1_slope(p, alpha),
            regime: Regime::MoebiusOuter,
            alpha: Some(alpha),
            beta: None,
        })
    } else {
        let beta = solve_beta(p, t)?;
        Ok(ClosedFormResult {
            value: t * 2.0 * beta / p,
            regime: Regime::Outer,
            alpha: None,
            beta: Some(beta),
        })
    }
}

/// `Psi_1(p) = max_t Phi_1(p, t)`: `(1-p/2)^{1/p} 2/sqrt(p(2-p))` for
/// `p < 1`, and `1` (attained at `t = 0`) otherwise.
pub fn psi1(p: f64) -> Result<f64, ClosedFormError> {
    check_p(p)?;
    if p >= 1.0 {
        return Ok(1.0);
    }
    Ok((1.0 - 0.5 * p).powf(1.0 / p) * 2.0 / (p * (2.0 - p)).sqrt())
}

/// The maximising `t` of `Phi_1(p, .)`: `(1-p/2)^{1/p}` for `p < 1`, else `0`.
pub fn psi1_argmax(p: f64) -> Result<f64, ClosedFormError> {
    check_p(p)?;
    if p >= 1.0 {
        return Ok(0.0);
    }
    Ok((1.0 - 0.5 * p).powf(1.0 / p))
}

/// `F_p(a) = p^2 a^{-2} + 2p(2-p) + (2-p)^2 a^2 - 4(a^{-p} + a^{2-p} - 1)`.
pub fn f_p(p: f64, alpha: f64) -> f64 {
    let q = 2.0 - p;
    p * p / (alpha * alpha) + 2.0 * p * q + q * q * alpha * alpha - 4.0 * (alpha.powf(-p) + alpha.powf(q) - 1.0)
}

/// `a^2 F_p(a)`: same sign as `F_p` on `a > 0`, finite as `a -> 0`.
pub fn f_p_scaled(p: f64, alpha: f64) -> f64 {
    let q = 2.0 - p;
    let a2 = alpha * alpha;
    p * p + 2.0 * p * q * a2 + q * q * a2 * a2 - 4.0 * (alpha.powf(q) + alpha.powf(2.0 + q) - a2)
}

/// `F_p'(a) = -2p^2 a^{-3} + 2(2-p)^2 a + 4p a^{-p-1} - 4(2-p) a^{1-p}`.
pub fn f_p_prime(p: f64, alpha: f64) -> f64 {
    let q = 2.0 - p;
    -2.0 * p * p / alpha.powi(3) + 2.0 * q * q * alpha + 4.0 * p * alpha.powf(-p - 1.0) - 4.0 * q * alpha.powf(1.0 - p)
}

/// `J_p(a) = 1 - 2a^p + a^2`.
pub fn j_p(p: f64, alpha: f64) -> f64 {
    1.0 - 2.0 * alpha.powf(p) + alpha * alpha
}

/// Root in `(0, 1)` of `1 + a^2 = 2 a^p`. `J_p` decreases on
/// `(0, p^{1/(2-p)})` and increases to `J_p(1) = 0` afterwards, so the root
/// sits left of the minimiser; it is found by bisection in `log a`.
pub fn alpha1(p: f64) -> Result<f64, ClosedFormError> {
    check_sub_one(p)?;
    let j = |u: f64| 1.0 - 2.0 * (p * u).exp() + (2.0 * u).exp();
    let dj = |u: f64| -2.0 * p * (p * u).exp() + 2.0 * (2.0 * u).exp();
    let u_min = p.ln() / (2.0 - p);
    // 2 a^p < 1 below this point, so J_p > 0 there
    let u_lo = -(2f64.ln()) / p - 1.0;
    let u = solve_bracketed(&j, &dj, u_lo, u_min, 0.0)?;
    Ok(u.exp())
}

/// `a_2 = sqrt(p / (2 - p))`, the unique critical point of `F_p` in `(0, 1)`
/// and the turning point of `a -> a(1+a^2)^{-1/p}`.
pub fn alpha2(p: f64) -> Result<f64, ClosedFormError> {
    check_sub_one(p)?;
    Ok((p / (2.0 - p)).sqrt())
}

/// Unique root `a_p` of `F_p` in `(0, 1)`, bracketed by `[a_1, a_2]`.
pub fn alpha_p(p: f64) -> Result<f64, ClosedFormError> {
    let (a1, a2) = (alpha1(p)?, alpha2(p)?);
    let s = |a: f64| f_p_scaled(p, a);
    let bracket = RootBracket::new(&s, a1, a2)?;
    let mut a = bracket.bisect(&s, 0.0);
    // Newton on F_p itself picks up the last few ulps
    for _ in 0..2 {
        let (v, d) = (f_p(p, a), f_p_prime(p, a));
        let next = a - v / d;
        if next > a1 && next < a2 && f_p(p, next).abs() < v.abs() {
            a = next;
        } else {
            break;
        }
    }
    Ok(a)
}

/// `t_p = a_p (1 + a_p^2)^{-1/p}`.
pub fn t_p(p: f64) -> Result<f64, ClosedFormError> {
    let ap = alpha_p(p)?;
    Ok(t_of_alpha(p, ap))
}

/// Lower and upper estimates `2^{-1/p} < t_p < 2^{-1/p} sqrt(p) (2-p)^{1/p-1/2}`.
pub fn t_p_band(p: f64) -> Result<(f64, f64), ClosedFormError> {
    check_sub_one(p)?;
    let lower = 2f64.powf(-1.0 / p);
    let upper = lower * p.sqrt() * (2.0 - p).powf(1.0 / p - 0.5);
    Ok((lower, upper))
}

/// `b = sqrt((1 + a^2)/a^p - 1)`: the outer parameter with the same `t`.
pub fn beta_of_alpha(p: f64, alpha: f64) -> Result<f64, ClosedFormError> {
    check_p(p)?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(ClosedFormError::BadArgument(alpha));
    }
    Ok(((1.0 + alpha * alpha) / alpha.powf(p) - 1.0).max(0.0).sqrt())
}

/// Auxiliary functions used to pin down the sign pattern of `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AppendixValues {
    /// `G_p(x) = x^{1+p} F_p'(x) / (2(2-p))`
    pub g_p: f64,
    /// `H(p) = -(2-p)/4 a_2^p F_p(a_2)`
    pub h: f64,
    /// `I(p) = 4(1-p)/(1+2p-p^2) + log(p/(2-p))`
    pub i: f64,
    /// `J_p(x) = 1 - 2x^p + x^2`
    pub j_p: f64,
    /// `K(p) = 2 - 2p + p^2 - p^p (2-p)^{2-p}`
    pub k: f64,
}

pub fn g_p(p: f64, x: f64) -> f64 {
    let q = 2.0 - p;
    -p * p / q * x.powf(p - 2.0) + q * x.powf(2.0 + p) + 2.0 * p / q - 2.0 * x * x
}

pub fn h_fn(p: f64) -> f64 {
    let q = 2.0 - p;
    2.0 - (1.0 + 2.0 * p - p * p) * p.powf(0.5 * p) * q.powf(0.5 * q)
}

pub fn i_fn(p: f64) -> f64 {
    4.0 * (1.0 - p) / (1.0 + 2.0 * p - p * p) + (p / (2.0 - p)).ln()
}

pub fn k_fn(p: f64) -> f64 {
    let q = 2.0 - p;
    2.0 - 2.0 * p + p * p - p.powf(p) * q.powf(q)
}

pub fn appendix_functions(p: f64, x: f64) -> Result<AppendixValues, ClosedFormError> {
    check_sub_one(p)?;
    if !(x > 0.0 && x <= 1.0) {
        return Err(ClosedFormError::BadArgument(x));
    }
    Ok(AppendixValues {
        g_p: g_p(p, x),
        h: h_fn(p),
        i: i_fn(p),
        j_p: j_p(p, x),
        k: k_fn(p),
    })
}

/// Case (i) extremal `f_1` in structured form: `C = -(1+a^2)^{-1/p}`,
/// one Blaschke zero at `-a`.
pub fn moebius_outer_extremal(p: f64, alpha: f64) -> StructuredExtremal {
    let c = -(1.0 + alpha * alpha).powf(-inv_p(p));
    StructuredExtremal::new(Complex64::new(c, 0.0), p, 1, vec![Complex64::new(-alpha, 0.0)]).expect("alpha in [0, 1)")
}

/// Case (ii) extremal `f_2`: `C = (1+b^2)^{-1/p}`, outer parameter `-b`.
pub fn outer_extremal(p: f64, beta: f64) -> StructuredExtremal {
    let c = (1.0 + beta * beta).powf(-inv_p(p));
    StructuredExtremal::new(Complex64::new(c, 0.0), p, 0, vec![Complex64::new(-beta, 0.0)]).expect("beta in [0, 1]")
}

/// The extremal(s) of `Phi_1(p, t)` listed by the closed form. At `t_p`
/// both shapes are returned.
pub fn phi1_extremals(p: f64, t: f64) -> Result<Vec<StructuredExtremal>, ClosedFormError> {
    let r = phi1(p, t)?;
    let mut out = Vec::new();
    if let Some(a) = r.alpha {
        out.push(moebius_outer_extremal(p, a));
    }
    if let Some(b) = r.beta {
        out.push(outer_extremal(p, b));
    }
    Ok(out)
}
