//! Analysis of the open-door solution q_c of q + zq'/q = h_c with q(0) = 1,
//! where h_c(z) = 1 + c·arctanh z maps the unit disk onto the strip
//! |Im w| < πc/4.
//!
//! The crate has an exact half and a floating half:
//!
//! - exact: arbitrary-precision rationals, polynomials in the strip
//!   parameter c, the series coefficients b_n(c) of q_c, Toeplitz
//!   determinants Δ_n(q_c) with rigorous signs, and certified brackets for
//!   their smallest positive roots ρ_n;
//! - floating: the dilogarithm/χ₂ layer, q_c through its integral
//!   representation, direct ODE integration along boundary rays, boundary
//!   curve tracing, and the starlikeness constants γ(SS_α) = πc_α/4.

pub mod analytic;
pub mod det;
pub mod dilog;
pub mod error;
pub mod geometry;
pub mod isolate;
pub mod ode;
pub mod parampoly;
pub mod quad;
pub mod rational;
pub mod series;
pub mod toeplitz;

pub use analytic::{
    f_eval, h_c_boundary, h_c_eval, qc_at_minus_one, qc_at_one, qc_eval, theta_c, EvalConfig,
};
pub use dilog::{chi2, dilog};
pub use error::{Error, Result};
pub use geometry::{
    boundary_grid, c0_bracket, c_alpha, g_lower, gamma_curve, gamma_upper, max_arg,
    nonuniform_derivative, tangent_angle, trace_boundary, BoundarySample, GammaCurvePoint,
    THETA_MARGIN,
};
pub use ode::ode_ray;
pub use parampoly::ParamPoly;
pub use rational::{format_ratio, rat, rat_from_f64, rat_int, rat_sign, rat_to_f64, Rational};
pub use series::{
    horner, horner_derivative, qc_coeffs_numeric, qc_series, series_eval, series_pow, QcSeries,
};
pub use toeplitz::{
    delta2_fractional, delta_at, delta_symbolic, rho, RootBracket, RHO_MAX_N, SYMBOLIC_MAX_N,
};

/// Double-precision complex value used throughout the floating layer.
pub type ComplexVal = num_complex::Complex64;
