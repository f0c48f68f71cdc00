//! Bracketed scalar root finding: bisection followed by a Newton polish.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum RootError {
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("function is not finite at x = {0}")]
    NotFinite(f64),
}

/// An interval `[lo, hi]` on which a continuous function changes sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl RootBracket {
    pub fn new<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<Self, RootError> {
        let (f_lo, f_hi) = (f(lo), f(hi));
        if !f_lo.is_finite() {
            return Err(RootError::NotFinite(lo));
        }
        if !f_hi.is_finite() {
            return Err(RootError::NotFinite(hi));
        }
        if !(lo < hi) || f_lo * f_hi > 0.0 {
            return Err(RootError::NoSignChange { lo, hi, f_lo, f_hi });
        }
        Ok(Self { lo, hi, f_lo, f_hi })
    }

    /// Bisect until the bracket is narrower than `xtol` (or an exact zero is
    /// hit). Returns the bracket endpoint with the smaller residual.
    pub fn bisect<F: Fn(f64) -> f64>(mut self, f: &F, xtol: f64) -> f64 {
        if self.f_lo == 0.0 {
            return self.lo;
        }
        if self.f_hi == 0.0 {
            return self.hi;
        }
        for _ in 0..2000 {
            let mid = 0.5 * (self.lo + self.hi);
            if self.hi - self.lo <= xtol || mid <= self.lo || mid >= self.hi {
                break;
            }
            let fm = f(mid);
            if fm == 0.0 {
                return mid;
            }
            if (fm < 0.0) == (self.f_lo < 0.0) {
                self.lo = mid;
                self.f_lo = fm;
            } else {
                self.hi = mid;
                self.f_hi = fm;
            }
        }
        if self.f_lo.abs() <= self.f_hi.abs() {
            self.lo
        } else {
            self.hi
        }
    }
}

/// Bisection to `xtol`, then one Newton step with derivative `df`, kept only
/// when it stays inside the original bracket and lowers the residual.
pub fn solve_bracketed<F, D>(f: &F, df: &D, lo: f64, hi: f64, xtol: f64) -> Result<f64, RootError>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let bracket = RootBracket::new(f, lo, hi)?;
    let x = bracket.bisect(f, xtol);
    let fx = f(x);
    let d = df(x);
    if fx != 0.0 && d.is_finite() && d != 0.0 {
        let y = x - fx / d;
        if y >= lo && y <= hi && f(y).abs() < fx.abs() {
            return Ok(y);
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt2() {
        let f = |x: f64| x * x - 2.0;
        let x = solve_bracketed(&f, &|x| 2.0 * x, 0.0, 2.0, 1e-13).unwrap();
        assert!((x - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_missing_sign_change() {
        let f = |x: f64| x * x + 1.0;
        assert!(matches!(
            RootBracket::new(&f, -1.0, 1.0),
            Err(RootError::NoSignChange { .. })
        ));
        assert!(matches!(
            RootBracket::new(&f, 1.0, -1.0),
            Err(RootError::NoSignChange { .. })
        ));
    }

    #[test]
    fn exact_endpoint_root() {
        let f = |x: f64| x;
        assert_eq!(RootBracket::new(&f, 0.0, 1.0).unwrap().bisect(&f, 1e-12), 0.0);
    }
}
