//! Floating-point evaluation of h_c, q_c and F.
//!
//! The method of record for q_c is the integral representation
//!
//! ```text
//! 1/q_c(z) = ∫₀¹ exp( c·[χ₂(tz) − χ₂(z)] ) dt
//! ```
//!
//! whose integrand is analytic in t on [0, 1] for z away from ±1, so
//! Gauss–Legendre quadrature with node doubling converges geometrically.
//! Points within 1e-3 of the logarithmic singularities at ±1 are rejected;
//! the endpoint values q_c(±1) themselves are finite and are computed
//! separately with a clustering substitution that tames the weak endpoint
//! singularity of the integrand.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::dilog::chi2;
use crate::error::{invalid, Error, Result};
use crate::quad::integrate_adaptive;

/// Exclusion radius around z = ±1.
pub const SINGULAR_RADIUS: f64 = 1e-3;

/// Knobs for the floating evaluators.
#[derive(Clone, Copy, Debug)]
pub struct EvalConfig {
    /// Gauss–Legendre node count for the first quadrature level.
    pub quad_nodes: usize,
    /// Agreement threshold between successive quadrature levels, and the
    /// accuracy target of the dilogarithm layer (which itself evaluates to
    /// machine precision, well inside any admissible value).
    pub dilog_tol: f64,
    /// Local error tolerance per adaptive ODE step.
    pub ode_step_tol: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            quad_nodes: 64,
            dilog_tol: 1e-12,
            ode_step_tol: 1e-10,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if self.quad_nodes < 8 {
            return Err(invalid("EvalConfig: quad_nodes must be >= 8"));
        }
        for (name, t) in [("dilog_tol", self.dilog_tol), ("ode_step_tol", self.ode_step_tol)] {
            if !(t > 0.0 && t <= 1e-4) {
                return Err(invalid(format!("EvalConfig: {name} must be in (0, 1e-4]")));
            }
        }
        Ok(())
    }
}

pub(crate) fn require_positive_c(c: f64) -> Result<()> {
    if c.is_finite() && c > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("parameter c must be finite and > 0, got {c}")))
    }
}

fn check_disk_point(z: Complex64) -> Result<()> {
    if (z - Complex64::new(1.0, 0.0)).norm() < SINGULAR_RADIUS
        || (z + Complex64::new(1.0, 0.0)).norm() < SINGULAR_RADIUS
    {
        return Err(Error::NearSingularity(z));
    }
    if z.norm() > 1.0 + 1e-12 {
        return Err(invalid(format!("z = {z} lies outside the closed unit disk")));
    }
    Ok(())
}

/// h_c(z) = 1 + (c/2)·Log((1+z)/(1−z)), the conformal map of the disk onto
/// the strip |Im w| < πc/4.
pub fn h_c_eval(c: f64, z: Complex64) -> Result<Complex64> {
    require_positive_c(c)?;
    if (z - Complex64::new(1.0, 0.0)).norm() < 1e-14
        || (z + Complex64::new(1.0, 0.0)).norm() < 1e-14
    {
        return Err(Error::NearSingularity(z));
    }
    let ratio = (Complex64::new(1.0, 0.0) + z) / (Complex64::new(1.0, 0.0) - z);
    Ok(Complex64::new(1.0, 0.0) + ratio.ln() * (c / 2.0))
}

/// θ_c = 2·arctan(e^{2/c}) ∈ (π/2, π), strictly decreasing in c.
pub fn theta_c(c: f64) -> f64 {
    assert!(c > 0.0, "theta_c requires c > 0");
    2.0 * (2.0 / c).exp().atan()
}

/// q_c(z) through the integral representation. Accurate to roughly the
/// quadrature agreement threshold; the sign-critical digits near the
/// Re F(c) zero crossing are far above it.
pub fn qc_eval(c: f64, z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    cfg.validate()?;
    require_positive_c(c)?;
    check_disk_point(z)?;
    let chi_z = chi2(z)?;
    let f = |t: f64| Ok((c * (chi2(t * z)? - chi_z)).exp());
    let integral = integrate_adaptive(&f, cfg.quad_nodes, cfg.dilog_tol)?;
    if !integral.re.is_finite() || !integral.im.is_finite() || integral == Complex64::ZERO {
        return Err(Error::NonFinite("qc_eval integral"));
    }
    Ok(integral.inv())
}

/// F(c) = q_c(e^{iθ_c}), the boundary value whose first zero of the real
/// part characterizes c₀.
pub fn f_eval(c: f64, cfg: &EvalConfig) -> Result<Complex64> {
    require_positive_c(c)?;
    let th = theta_c(c);
    qc_eval(c, Complex64::from_polar(1.0, th), cfg)
}

/// Real endpoint values q_c(1) and q_c(-1).
///
/// At z = ±1 the integrand is continuous but its derivative has a
/// logarithmic endpoint singularity, so plain Gauss–Legendre stalls. The
/// cubic substitution t = 1 − (1−x)³ clusters nodes there and restores
/// fast convergence.
fn qc_real_endpoint(c: f64, at_plus_one: bool, cfg: &EvalConfig) -> Result<f64> {
    cfg.validate()?;
    require_positive_c(c)?;
    let chi_end = PI * PI / 8.0 * if at_plus_one { 1.0 } else { -1.0 };
    let sgn = if at_plus_one { 1.0 } else { -1.0 };
    let f = |x: f64| {
        let u = 1.0 - x;
        let t = 1.0 - u * u * u;
        let chi = chi2(Complex64::new(sgn * t, 0.0))?.re;
        Ok(Complex64::new(3.0 * u * u * (c * (chi - chi_end)).exp(), 0.0))
    };
    let integral = integrate_adaptive(&f, cfg.quad_nodes, cfg.dilog_tol)?;
    if !integral.re.is_finite() || integral.re <= 0.0 {
        return Err(Error::NonFinite("qc endpoint integral"));
    }
    Ok(1.0 / integral.re)
}

/// q_c(1), the maximum of |q_c| over the closed disk.
pub fn qc_at_one(c: f64, cfg: &EvalConfig) -> Result<f64> {
    qc_real_endpoint(c, true, cfg)
}

/// q_c(-1), the minimum of |q_c| over the closed disk.
pub fn qc_at_minus_one(c: f64, cfg: &EvalConfig) -> Result<f64> {
    qc_real_endpoint(c, false, cfg)
}

/// Boundary value of h_c on the upper arc: 1 + (c/2)(log cot(θ/2) + iπ/2).
pub fn h_c_boundary(c: f64, theta: f64) -> Complex64 {
    debug_assert!(theta > 0.0 && theta < PI);
    Complex64::new(1.0 + c / 2.0 * (1.0 / (theta / 2.0).tan()).ln(), c * FRAC_PI_2 / 2.0)
}
