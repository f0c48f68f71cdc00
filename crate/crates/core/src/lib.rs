//! Coefficient extremal problems for analytic functions in Hardy spaces.
//!
//! The crate computes `Phi_k(p, t) = sup { Re a_k : ||f||_{H^p} <= 1, f(0) = t }`
//! in closed form for `k = 1`, numerically for general `k` through a
//! structured multistart search, and ships the supporting machinery: boundary
//! quadrature of `H^p` norms, the Wiener transform `W_k`, and the auxiliary
//! functions whose signs govern the `0 < p < 1` regime switch.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closed_form;
mod exec;
pub mod figures;
pub mod fn_repr;
pub mod hardy_norm;
pub mod quadrature;
pub mod roots;
pub mod solver;
pub mod verify;
pub mod wiener;

pub use closed_form::{phi1, psi1, t_p, ClosedFormError, ClosedFormResult, Regime};
pub use fn_repr::{Analytic, BoundarySamples, PolyCoeffs, ReprError, StructuredExtremal};
pub use hardy_norm::{norm, norm_hp, NormError, QuadConfig};
pub use solver::{maximize_phik, ExtremalSolution, SolveConfig, SolveError};
pub use wiener::{wiener_coeffs, WienerError};
