//! Data behind the two standard plots: the curves `t -> Phi_1(p, t)` and
//! the curve `p -> t_p` with its elementary two-sided estimate, emitted as
//! byte-stable CSV (17 significant digits, `\n` line endings).

use serde::{Deserialize, Serialize};

use crate::closed_form::{self, ClosedFormError};
use crate::exec::map_indexed;

/// Exponents plotted in the `Phi_1` figure.
pub const FIGURE1_EXPONENTS: [f64; 4] = [0.5, 1.0, 2.0, f64::INFINITY];
/// Points of the uniform `t` grid on `[0, 1]`.
pub const FIGURE1_POINTS: usize = 512;
/// Interior points of the uniform `p` grid on `(0, 1)`.
pub const FIGURE2_POINTS: usize = 256;

pub const FIGURE1_HEADER: &str = "p,t,phi1";
pub const FIGURE2_HEADER: &str = "p,t_p,lower,upper";

/// C-style `%.{prec}g`: shortest of fixed and exponential notation with
/// `prec` significant digits and trailing zeros removed. Infinities print as
/// `inf`/`-inf`.
pub fn format_g(x: f64, prec: usize) -> String {
    let prec = prec.max(1);
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.*e}", prec - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= prec as i32 {
        let m = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (prec as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `%.17g`, enough digits to round-trip any `f64`.
pub fn g17(x: f64) -> String {
    format_g(x, 17)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Figure1Row {
    pub p: f64,
    pub t: f64,
    pub phi1: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Figure2Row {
    pub p: f64,
    pub t_p: f64,
    pub lower: f64,
    pub upper: f64,
}

/// `Phi_1(p, t_i)` on `t_i = i/(n-1)`, `i = 0..n`.
pub fn phi1_curve(p: f64, n: usize) -> Result<Vec<Figure1Row>, ClosedFormError> {
    let denom = (n.max(2) - 1) as f64;
    map_indexed(n, |i| {
        let t = i as f64 / denom;
        closed_form::phi1(p, t).map(|r| Figure1Row { p, t, phi1: r.value })
    })
    .into_iter()
    .collect()
}

/// `t_p` and its band on `p_i = i/(n+1)`, `i = 1..=n`.
pub fn t_p_curve(n: usize) -> Result<Vec<Figure2Row>, ClosedFormError> {
    let denom = (n + 1) as f64;
    map_indexed(n, |i| {
        let p = (i + 1) as f64 / denom;
        let t_p = closed_form::t_p(p)?;
        let (lower, upper) = closed_form::t_p_band(p)?;
        Ok(Figure2Row { p, t_p, lower, upper })
    })
    .into_iter()
    .collect()
}

pub fn figure1_rows() -> Result<Vec<Figure1Row>, ClosedFormError> {
    let mut rows = Vec::with_capacity(FIGURE1_EXPONENTS.len() * FIGURE1_POINTS);
    for p in FIGURE1_EXPONENTS {
        rows.extend(phi1_curve(p, FIGURE1_POINTS)?);
    }
    Ok(rows)
}

pub fn figure2_rows() -> Result<Vec<Figure2Row>, ClosedFormError> {
    t_p_curve(FIGURE2_POINTS)
}

pub fn figure1_csv(rows: &[Figure1Row]) -> String {
    let mut out = String::with_capacity(48 * (rows.len() + 1));
    out.push_str(FIGURE1_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{}\n", g17(r.p), g17(r.t), g17(r.phi1)));
    }
    out
}

pub fn figure2_csv(rows: &[Figure2Row]) -> String {
    let mut out = String::with_capacity(80 * (rows.len() + 1));
    out.push_str(FIGURE2_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            g17(r.p),
            g17(r.t_p),
            g17(r.lower),
            g17(r.upper)
        ));
    }
    out
}

/// Shape checks on one `Phi_1` curve: non-increasing for `p >= 1`; for
/// `p < 1` non-decreasing up to the grid maximum and non-increasing after,
/// with the maximum next to `(1 - p/2)^{1/p}`. Returns a description of the
/// first violation.
pub fn check_phi1_shape(rows: &[Figure1Row]) -> Result<(), String> {
    let Some(first) = rows.first() else { return Ok(()) };
    let p = first.p;
    let slack = 1e-15;
    let mut peak = 0;
    for (i, r) in rows.iter().enumerate() {
        if r.phi1 > rows[peak].phi1 + slack {
            peak = i;
        }
    }
    if p >= 1.0 && peak != 0 {
        return Err(format!("p = {p}: maximum at t = {} instead of t = 0", rows[peak].t));
    }
    for (i, w) in rows.windows(2).enumerate() {
        let rising = i < peak;
        let d = w[1].phi1 - w[0].phi1;
        if (rising && d < -slack) || (!rising && d > slack) {
            return Err(format!(
                "p = {p}: shape broken between t = {} and t = {}",
                w[0].t, w[1].t
            ));
        }
    }
    if p < 1.0 {
        let argmax = closed_form::psi1_argmax(p).unwrap_or(0.0);
        let h = rows.get(1).map_or(1.0, |r| r.t - first.t);
        if (rows[peak].t - argmax).abs() > h {
            return Err(format!(
                "p = {p}: maximum at {} but expected near {argmax}",
                rows[peak].t
            ));
        }
    }
    Ok(())
}
