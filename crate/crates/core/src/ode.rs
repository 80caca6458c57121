//! Direct integration of the defining ODE along a boundary ray.
//!
//! v(t) = q_c(t·e^{iθ}) satisfies t·v' = v·(h_c(t e^{iθ}) − v) with v(0) = 1.
//! The point t = 0 is a regular singular point, so the first stretch
//! [0, 0.1] is bridged with the truncated power series (tail there is far
//! below double precision) and an embedded Cash–Karp 4(5) pair integrates
//! the rest to t = 1. This is the cross-check route; the integral
//! representation remains the method of record.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::analytic::{h_c_eval, require_positive_c, EvalConfig};
use crate::error::{invalid, Error, Result};
use crate::series::{horner, qc_coeffs_numeric};

const BRIDGE_T: f64 = 0.1;
const BRIDGE_ORDER: usize = 30;
const MIN_STEP: f64 = 1e-13;
const MAX_STEPS: usize = 2_000_000;

/// Cash–Karp tableau.
const A: [[f64; 5]; 5] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0],
    [3.0 / 10.0, -9.0 / 10.0, 6.0 / 5.0, 0.0, 0.0],
    [-11.0 / 54.0, 5.0 / 2.0, -70.0 / 27.0, 35.0 / 27.0, 0.0],
    [
        1631.0 / 55296.0,
        175.0 / 512.0,
        575.0 / 13824.0,
        44275.0 / 110592.0,
        253.0 / 4096.0,
    ],
];
const C: [f64; 6] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 3.0 / 5.0, 1.0, 7.0 / 8.0];
const B5: [f64; 6] = [
    37.0 / 378.0,
    0.0,
    250.0 / 621.0,
    125.0 / 594.0,
    0.0,
    512.0 / 1771.0,
];
const B4: [f64; 6] = [
    2825.0 / 27648.0,
    0.0,
    18575.0 / 48384.0,
    13525.0 / 55296.0,
    277.0 / 14336.0,
    1.0 / 4.0,
];

/// q_c(e^{iθ}) by adaptive integration of the ray ODE from t = 0 to 1.
pub fn ode_ray(c: f64, theta: f64, cfg: &EvalConfig) -> Result<Complex64> {
    cfg.validate()?;
    require_positive_c(c)?;
    if !(theta > 0.0 && theta < PI) {
        return Err(invalid(format!("ode_ray: theta must be in (0, pi), got {theta}")));
    }
    let dir = Complex64::from_polar(1.0, theta);
    let rhs = |t: f64, v: Complex64| -> Result<Complex64> {
        let h = h_c_eval(c, dir * t)?;
        Ok(v * (h - v) / t)
    };

    let coeffs = qc_coeffs_numeric(c, BRIDGE_ORDER);
    let mut t = BRIDGE_T;
    let mut v = horner(&coeffs, dir * BRIDGE_T);
    let mut dt = 1e-3;
    let tol = cfg.ode_step_tol;

    for _ in 0..MAX_STEPS {
        if t >= 1.0 {
            return Ok(v);
        }
        if dt > 1.0 - t {
            dt = 1.0 - t;
        }
        let mut k = [Complex64::ZERO; 6];
        k[0] = rhs(t, v)?;
        let mut failed = false;
        for s in 1..6 {
            let mut y = v;
            for (j, kj) in k.iter().enumerate().take(s) {
                y += *kj * (A[s - 1][j] * dt);
            }
            match rhs(t + C[s] * dt, y) {
                Ok(val) => k[s] = val,
                Err(_) => {
                    failed = true;
                    break;
                }
            }
        }
        let (v5, v4) = if failed {
            (Complex64::new(f64::NAN, 0.0), Complex64::ZERO)
        } else {
            let mut v5 = v;
            let mut v4 = v;
            for s in 0..6 {
                v5 += k[s] * (B5[s] * dt);
                v4 += k[s] * (B4[s] * dt);
            }
            (v5, v4)
        };
        let err = (v5 - v4).norm();
        let scale = tol * v.norm().max(1.0);
        if !failed && err <= scale && v5.re.is_finite() && v5.im.is_finite() {
            t += dt;
            v = v5;
            let grow = if err == 0.0 {
                5.0
            } else {
                (0.9 * (scale / err).powf(0.2)).clamp(1.0, 5.0)
            };
            dt *= grow;
        } else {
            let shrink = if failed || err == 0.0 {
                0.25
            } else {
                (0.9 * (scale / err).powf(0.25)).clamp(0.1, 0.9)
            };
            dt *= shrink;
            if dt < MIN_STEP {
                return Err(Error::StepUnderflow(t));
            }
        }
    }
    Err(Error::NonFinite("ode_ray: step budget exhausted"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{f_eval, qc_eval, theta_c};

    #[test]
    fn small_c_is_a_perturbation_of_one() {
        // smallest c whose theta_c is still representably below pi in f64;
        // below c ~ 0.1 the ray angle collapses onto pi itself
        let cfg = EvalConfig::default();
        let c = 0.1;
        let v = ode_ray(c, theta_c(c), &cfg).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 2.0 * c);
    }

    #[test]
    fn agrees_with_integral_representation_at_theta_c() {
        let cfg = EvalConfig::default();
        for &c in &[1.0, 3.0] {
            let via_ode = ode_ray(c, theta_c(c), &cfg).unwrap();
            let via_int = f_eval(c, &cfg).unwrap();
            assert!(
                (via_ode - via_int).norm() < 1e-6,
                "c={c}: {via_ode} vs {via_int}"
            );
        }
    }

    #[test]
    fn agrees_with_integral_representation_at_i() {
        let cfg = EvalConfig::default();
        let via_ode = ode_ray(2.0, PI / 2.0, &cfg).unwrap();
        let via_int = qc_eval(2.0, Complex64::new(0.0, 1.0), &cfg).unwrap();
        assert!((via_ode - via_int).norm() < 1e-6);
    }

    #[test]
    fn rejects_bad_rays() {
        let cfg = EvalConfig::default();
        assert!(ode_ray(2.0, 0.0, &cfg).is_err());
        assert!(ode_ray(2.0, PI, &cfg).is_err());
        assert!(ode_ray(2.0, -0.5, &cfg).is_err());
        assert!(ode_ray(0.0, 1.0, &cfg).is_err());
    }
}
