//! Browser bindings: the `Phi_1` curves, the switching point `t_p` with its
//! two-sided estimate, and the sharpness ratios of the Wiener bound. Arrays
//! cross the boundary as `Float64Array`s.

use hardyx::closed_form as cf;
use hardyx::figures;
use hardyx::hardy_norm::QuadConfig;
use hardyx::wiener;
use wasm_bindgen::prelude::*;

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// `[value, regime, alpha, beta]` at one point; regime is 0 for the
/// Moebius-outer branch, 1 for the outer branch, 2 when both attain it.
/// Missing parameters are NaN.
#[wasm_bindgen]
pub fn phi1_point(p: f64, t: f64) -> Result<Vec<f64>, JsError> {
    let r = cf::phi1(p, t).map_err(js_err)?;
    let regime = match r.regime {
        cf::Regime::MoebiusOuter => 0.0,
        cf::Regime::Outer => 1.0,
        cf::Regime::Both => 2.0,
    };
    Ok(vec![
        r.value,
        regime,
        r.alpha.unwrap_or(f64::NAN),
        r.beta.unwrap_or(f64::NAN),
    ])
}

/// `Phi_1(p, t_i)` on `t_i = i/(n-1)`.
#[wasm_bindgen]
pub fn phi1_curve(p: f64, n: usize) -> Result<Vec<f64>, JsError> {
    Ok(figures::phi1_curve(p, n.max(2))
        .map_err(js_err)?
        .into_iter()
        .map(|r| r.phi1)
        .collect())
}

/// `t_p` for `0 < p < 1`.
#[wasm_bindgen]
pub fn t_p(p: f64) -> Result<f64, JsError> {
    cf::t_p(p).map_err(js_err)
}

/// Interleaved `[p, t_p, lower, upper]` rows on `p_i = i/(n+1)`.
#[wasm_bindgen]
pub fn t_p_band_curve(n: usize) -> Result<Vec<f64>, JsError> {
    let rows = figures::t_p_curve(n.max(1)).map_err(js_err)?;
    Ok(rows.into_iter().flat_map(|r| [r.p, r.t_p, r.lower, r.upper]).collect())
}

/// Sharpness ratios for each `eps`, in order.
#[wasm_bindgen]
pub fn sharpness_ratios(p: f64, k: usize, eps: &[f64]) -> Result<Vec<f64>, JsError> {
    let cfg = QuadConfig::default();
    eps.iter()
        .map(|&e| wiener::sharpness_ratio(p, k, e, &cfg).map_err(js_err))
        .collect()
}

/// The limit `k^{1-p}` the sharpness ratios approach.
#[wasm_bindgen]
pub fn sharpness_limit(p: f64, k: usize) -> f64 {
    wiener::sharpness_limit(p, k)
}
