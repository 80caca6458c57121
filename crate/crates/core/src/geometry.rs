//! Boundary geometry of q_c: traced curves, tangent angles, the maximal
//! argument, and the constants c_α behind the γ bounds.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::analytic::{
    f_eval, h_c_eval, qc_eval, require_positive_c, EvalConfig,
};
use crate::error::{invalid, Error, Result};

/// Exclusion half-width δ around θ = 0 and θ = π. Inside these bands the
/// logarithmic blow-up of h_c makes boundary numerics unreliable; endpoint
/// behaviour is supplied analytically instead.
pub const THETA_MARGIN: f64 = 1e-3;

const MAX_ARG_GRID: usize = 1024;
const DEGENERATE_EPS: f64 = 1e-12;

/// One point of the traced boundary curve u(θ) = R(θ)·e^{iΘ(θ)} = q_c(e^{iθ}).
#[derive(Clone, Copy, Debug)]
pub struct BoundarySample {
    pub theta: f64,
    /// R(θ) = |q_c(e^{iθ})| > 0
    pub modulus: f64,
    /// Θ(θ) = arg q_c(e^{iθ}) on the continuous branch with Θ(0⁺) → 0
    pub argument: f64,
    /// tangent angle β(θ) on a continuous branch starting near π/2
    pub tangent: f64,
    pub value: Complex64,
}

/// One point of the γ(SS_α) curve together with its proven bounds.
#[derive(Clone, Copy, Debug)]
pub struct GammaCurvePoint {
    pub alpha: f64,
    /// πc_α/4
    pub gamma: f64,
    /// lower bound g(α)
    pub lower: f64,
    /// upper bound √3πα/√(3+α)
    pub upper: f64,
}

/// Smallest admissible grid angle: the point e^{iθ} must stay a chordal
/// distance of at least `SINGULAR_RADIUS` away from 1, and the chord
/// 2·sin(θ/2) is slightly shorter than θ itself.
fn grid_margin() -> f64 {
    2.0 * (0.5 * crate::analytic::SINGULAR_RADIUS).asin() * (1.0 + 1e-9)
}

/// Symmetric grid on [δ, π−δ], log-spaced toward both ends so that the
/// spacing stays proportional to the distance from the endpoint. This keeps
/// finite-difference errors of the boundary quantities uniformly small in
/// spite of their log-type endpoint blow-up.
pub fn boundary_grid(m: usize) -> Vec<f64> {
    assert!(m >= 16, "grid size must be >= 16");
    let half = m / 2;
    let lo = grid_margin().ln();
    let span = (PI / 2.0).ln() - lo;
    // chosen so the gap across the grid centre equals the local spacing
    let denom = if m % 2 == 0 {
        half as f64 - 0.5
    } else {
        half as f64
    };
    let mut grid: Vec<f64> = (0..half)
        .map(|k| (lo + span * k as f64 / denom).exp())
        .collect();
    if m % 2 == 1 {
        grid.push(PI / 2.0);
    }
    for k in (0..half).rev() {
        let mirrored = PI - grid[k];
        grid.push(mirrored);
    }
    grid
}

/// Nearest 2π-translate of `raw` to `prev`.
fn unwrap_near(prev: f64, raw: f64) -> f64 {
    let mut v = raw;
    while v - prev > PI {
        v -= 2.0 * PI;
    }
    while prev - v > PI {
        v += 2.0 * PI;
    }
    v
}

/// Three-point first derivative on a nonuniform grid (exact for quadratics).
pub fn nonuniform_derivative(x: &[f64], y: &[f64], k: usize) -> f64 {
    let hm = x[k] - x[k - 1];
    let hp = x[k + 1] - x[k];
    (hm * hm * y[k + 1] - hp * hp * y[k - 1] + (hp * hp - hm * hm) * y[k])
        / (hm * hp * (hm + hp))
}

fn tangent_from_values(q: Complex64, h: Complex64, theta: f64) -> Result<f64> {
    let diff = h - q;
    if diff.norm() < DEGENERATE_EPS {
        return Err(Error::DegenerateTangent(diff.norm(), theta));
    }
    Ok(q.arg() + diff.arg() + FRAC_PI_2)
}

/// Tangent angle β(θ) of the boundary curve, from
/// β = arg q + arg(h_c − q) + π/2 on 0 < θ < π.
///
/// At θ = 0 and θ = π the curve meets the positive real axis with a
/// vertical tangent line and the limit value π/2 is returned (at θ = π the
/// directed tangent points along −i, i.e. along the same vertical line).
/// Interior values are principal-branch; `trace_boundary` unwraps them to a
/// continuous branch.
pub fn tangent_angle(c: f64, theta: f64, cfg: &EvalConfig) -> Result<f64> {
    require_positive_c(c)?;
    if theta.abs() < 1e-12 || (theta - PI).abs() < 1e-12 {
        return Ok(FRAC_PI_2);
    }
    if !(theta > 0.0 && theta < PI) {
        return Err(invalid(format!(
            "tangent_angle: theta must be in [0, pi], got {theta}"
        )));
    }
    let z = Complex64::from_polar(1.0, theta);
    let q = qc_eval(c, z, cfg)?;
    let h = h_c_eval(c, z)?;
    tangent_from_values(q, h, theta)
}

/// Traces θ ↦ q_c(e^{iθ}) over the grid of `boundary_grid(m)`, with the
/// argument and the tangent angle tracked on continuous branches.
pub fn trace_boundary(c: f64, m: usize, cfg: &EvalConfig) -> Result<Vec<BoundarySample>> {
    require_positive_c(c)?;
    cfg.validate()?;
    if m < 16 {
        return Err(invalid("trace_boundary: grid size must be >= 16"));
    }
    let grid = boundary_grid(m);
    let raw: Vec<(f64, Complex64, f64)> = grid
        .par_iter()
        .map(|&theta| -> Result<(f64, Complex64, f64)> {
            let z = Complex64::from_polar(1.0, theta);
            let q = qc_eval(c, z, cfg)?;
            let h = h_c_eval(c, z)?;
            let beta = tangent_from_values(q, h, theta)?;
            Ok((theta, q, beta))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut samples = Vec::with_capacity(raw.len());
    let mut prev_arg = 0.0;
    let mut prev_beta = FRAC_PI_2;
    for (theta, q, beta_raw) in raw {
        let argument = unwrap_near(prev_arg, q.arg());
        let tangent = unwrap_near(prev_beta, beta_raw);
        prev_arg = argument;
        prev_beta = tangent;
        samples.push(BoundarySample {
            theta,
            modulus: q.norm(),
            argument,
            tangent,
            value: q,
        });
    }
    Ok(samples)
}

fn boundary_arg(c: f64, theta: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(qc_eval(c, Complex64::from_polar(1.0, theta), cfg)?.arg())
}

/// max_θ Θ(θ) over the boundary; by the maximum principle for the harmonic
/// function arg q_c this is also the supremum over the disk. Grid scan plus
/// golden-section refinement around the grid maximizer.
pub fn max_arg(c: f64, cfg: &EvalConfig) -> Result<f64> {
    require_positive_c(c)?;
    cfg.validate()?;
    let grid = boundary_grid(MAX_ARG_GRID);
    let args: Vec<f64> = grid
        .par_iter()
        .map(|&theta| boundary_arg(c, theta, cfg))
        .collect::<Result<Vec<_>>>()?;
    let mut unwrapped = Vec::with_capacity(args.len());
    let mut prev = 0.0;
    for raw in args {
        let v = unwrap_near(prev, raw);
        unwrapped.push(v);
        prev = v;
    }
    let (k_best, &best) = unwrapped
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty grid");

    let mut a = grid[k_best.saturating_sub(1)];
    let mut b = grid[(k_best + 1).min(grid.len() - 1)];
    let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = boundary_arg(c, x1, cfg)?;
    let mut f2 = boundary_arg(c, x2, cfg)?;
    let mut best = best;
    for _ in 0..80 {
        if b - a < 1e-12 {
            break;
        }
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = boundary_arg(c, x2, cfg)?;
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = boundary_arg(c, x1, cfg)?;
        }
        best = best.max(f1.max(f2));
    }
    Ok(best)
}

/// Bisection bracket [lo, hi] around the first zero of c ↦ Re F(c), grown
/// by a coarse positive-side scan so the smallest zero is the one caught.
pub fn c0_bracket(tol: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    if !(tol > 0.0) {
        return Err(invalid("c0_bracket: tol must be > 0"));
    }
    cfg.validate()?;
    let g = |c: f64| -> Result<f64> { Ok(f_eval(c, cfg)?.re) };
    let mut lo = 0.5;
    if g(lo)? <= 0.0 {
        return Err(Error::BracketFailure("c0: Re F(0.5) not positive"));
    }
    let mut hi = None;
    let mut x = lo;
    while x < 4.0 {
        x += 0.25;
        if g(x)? < 0.0 {
            hi = Some(x);
            break;
        }
        lo = x;
    }
    let Some(mut hi) = hi else {
        return Err(Error::BracketFailure("c0: no sign change of Re F in [0.5, 4]"));
    };
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if g(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// The largest c with |arg q_c| < πα/2 on the disk, to within tol.
///
/// For α < 1 this bisects c ↦ max_arg(c) − πα/2 on a bracket grown from
/// [0.1, 4]; a coarse first-crossing scan guards against multimodality.
/// For α = 1 the better-conditioned Re F(c) = 0 characterization is used.
pub fn c_alpha(alpha: f64, tol: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid(format!("c_alpha: alpha must be in (0, 1], got {alpha}")));
    }
    if !(tol > 0.0) {
        return Err(invalid("c_alpha: tol must be > 0"));
    }
    cfg.validate()?;
    if alpha == 1.0 {
        let (lo, hi) = c0_bracket(tol, cfg)?;
        return Ok(0.5 * (lo + hi));
    }
    let target = FRAC_PI_2 * alpha;
    let f = |c: f64| -> Result<f64> { Ok(max_arg(c, cfg)? - target) };

    let mut lo = 0.1;
    let mut flo = f(lo)?;
    while flo > 0.0 && lo > 1e-6 {
        lo /= 2.0;
        flo = f(lo)?;
    }
    let mut hi = 4.0;
    let mut fhi = f(hi)?;
    while fhi < 0.0 && hi < 64.0 {
        hi *= 1.5;
        fhi = f(hi)?;
    }
    if flo > 0.0 || fhi < 0.0 {
        return Err(Error::BracketFailure("c_alpha: could not bracket max_arg crossing"));
    }

    // keep the first crossing if there are several
    const PARTS: usize = 8;
    let mut cut = lo;
    for k in 1..=PARTS {
        let x = lo + (hi - lo) * k as f64 / PARTS as f64;
        if f(x)? >= 0.0 {
            hi = x;
            lo = cut;
            break;
        }
        cut = x;
    }

    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if f(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Lower bound g(α) = [α + (1+α)·sin(πα/2)] / √(1 + 2·sin(πα/2)).
pub fn g_lower(alpha: f64) -> f64 {
    assert!(alpha > 0.0 && alpha <= 1.0, "alpha must be in (0, 1]");
    let s = (FRAC_PI_2 * alpha).sin();
    (alpha + (1.0 + alpha) * s) / (1.0 + 2.0 * s).sqrt()
}

/// Upper bound √3πα/√(3+α).
pub fn gamma_upper(alpha: f64) -> f64 {
    assert!(alpha > 0.0 && alpha <= 1.0, "alpha must be in (0, 1]");
    3f64.sqrt() * PI * alpha / (3.0 + alpha).sqrt()
}

/// γ(SS_α) = πc_α/4 together with its lower and upper bounds, over a grid.
pub fn gamma_curve(alphas: &[f64], tol: f64, cfg: &EvalConfig) -> Result<Vec<GammaCurvePoint>> {
    if alphas.iter().any(|&a| !(a > 0.0 && a <= 1.0)) {
        return Err(invalid("gamma_curve: grid must lie in (0, 1]"));
    }
    alphas
        .par_iter()
        .map(|&alpha| {
            let c = c_alpha(alpha, tol, cfg)?;
            Ok(GammaCurvePoint {
                alpha,
                gamma: PI * c / 4.0,
                lower: g_lower(alpha),
                upper: gamma_upper(alpha),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::theta_c;

    #[test]
    fn grid_points_are_evaluable() {
        // every grid point must clear the chordal exclusion radius around ±1
        let cfg = EvalConfig::default();
        let g = boundary_grid(16);
        for &theta in &[g[0], g[15]] {
            assert!(qc_eval(1.0, Complex64::from_polar(1.0, theta), &cfg).is_ok());
        }
    }

    #[test]
    fn grid_shape() {
        for &m in &[16usize, 33, 512] {
            let g = boundary_grid(m);
            assert_eq!(g.len(), m);
            assert!(g[0] >= THETA_MARGIN);
            assert!(g[m - 1] <= PI - THETA_MARGIN + 1e-15);
            assert!(g.windows(2).all(|w| w[0] < w[1]), "sorted, m={m}");
            // symmetry under theta -> pi - theta
            for k in 0..m {
                assert!((g[k] + g[m - 1 - k] - PI).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn derivative_stencil_is_exact_for_quadratics() {
        let x = [0.0, 1.0, 3.0];
        let y: Vec<f64> = x.iter().map(|&t| 2.0 * t * t - t + 1.0).collect();
        let d = nonuniform_derivative(&x, &y, 1);
        assert!((d - (4.0 * x[1] - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn tangent_endpoints_are_vertical() {
        let cfg = EvalConfig::default();
        assert_eq!(tangent_angle(2.0, 0.0, &cfg).unwrap(), FRAC_PI_2);
        assert_eq!(tangent_angle(2.0, PI, &cfg).unwrap(), FRAC_PI_2);
        assert!(tangent_angle(2.0, -0.3, &cfg).is_err());
        assert!(tangent_angle(2.0, PI + 0.3, &cfg).is_err());
    }

    #[test]
    fn tangent_matches_finite_difference() {
        // centered difference of theta -> q_c(e^{i theta}) at theta = pi/3
        let cfg = EvalConfig::default();
        let c = 2.0;
        let theta = PI / 3.0;
        let h = 1e-5;
        let qp = qc_eval(c, Complex64::from_polar(1.0, theta + h), &cfg).unwrap();
        let qm = qc_eval(c, Complex64::from_polar(1.0, theta - h), &cfg).unwrap();
        let fd = ((qp - qm) / (2.0 * h)).arg();
        let formula = tangent_angle(c, theta, &cfg).unwrap();
        let diff = (formula - fd).rem_euclid(2.0 * PI);
        let dist = diff.min(2.0 * PI - diff);
        assert!(dist < 1e-4, "formula {formula} vs fd {fd}");
    }

    #[test]
    fn trace_decreasing_modulus_and_half_plane_argument() {
        let cfg = EvalConfig::default();
        let samples = trace_boundary(3.0, 256, &cfg).unwrap();
        assert_eq!(samples.len(), 256);
        assert!(samples.windows(2).all(|w| w[0].theta < w[1].theta));
        for w in samples.windows(2) {
            assert!(w[1].modulus < w[0].modulus, "R strictly decreasing");
        }
        for s in &samples {
            assert!(s.modulus > 0.0);
            assert!(
                s.argument > 0.0 && s.argument <= FRAC_PI_2 + 1e-9,
                "Theta in (0, pi/2] at theta = {}",
                s.theta
            );
        }
        // beta continuous from pi/2 toward 3pi/2
        for w in samples.windows(2) {
            assert!((w[1].tangent - w[0].tangent).abs() < 0.2);
        }
        let first = samples.first().unwrap();
        let last = samples.last().unwrap();
        assert!((first.tangent - FRAC_PI_2).abs() < 0.45);
        assert!((last.tangent - 3.0 * FRAC_PI_2).abs() < 0.45);
    }

    #[test]
    fn argument_reaches_right_angle_at_theta_c_for_c0() {
        let cfg = EvalConfig::default();
        let c = 3.0276;
        let arg = boundary_arg(c, theta_c(c), &cfg).unwrap();
        assert!((arg - FRAC_PI_2).abs() < 1e-3, "Theta(theta_c) = {arg}");
    }

    #[test]
    fn reflection_symmetry_on_boundary() {
        let cfg = EvalConfig::default();
        for &theta in &[0.4, 1.1, 2.6] {
            let up = qc_eval(1.0, Complex64::from_polar(1.0, theta), &cfg).unwrap();
            let down = qc_eval(1.0, Complex64::from_polar(1.0, -theta), &cfg).unwrap();
            assert!((up.conj() - down).norm() < 1e-13);
        }
    }

    #[test]
    fn max_arg_small_c_and_monotone() {
        let cfg = EvalConfig::default();
        let tiny = max_arg(0.05, &cfg).unwrap();
        assert!(tiny > 0.0 && tiny < 0.03, "max_arg(0.05) = {tiny}");
        let at2 = max_arg(2.0, &cfg).unwrap();
        let at3 = max_arg(3.0, &cfg).unwrap();
        assert!(at2 < at3);
        // 25-digit references from the integral representation
        assert!((at2 - 0.957_674_108_761_074).abs() < 1e-9, "max_arg(2) = {at2}");
        assert!((at3 - 1.553_014_147_145_371).abs() < 1e-9, "max_arg(3) = {at3}");
    }

    #[test]
    fn bounds_closed_forms() {
        assert!((g_lower(1.0) - 3f64.sqrt()).abs() < 1e-12);
        assert!((g_lower(0.5) - 1.004_431_9).abs() < 1e-6);
        assert!(g_lower(1e-6) < 1e-5);
        assert!((gamma_upper(1.0) - 3f64.sqrt() * PI / 2.0).abs() < 1e-12);
        let a = 0.5;
        assert!((gamma_upper(a) - 3f64.sqrt() * PI * a / 3.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn g_lower_is_strictly_concave_on_grid() {
        let n = 40;
        let g: Vec<f64> = (1..n)
            .map(|k| g_lower(k as f64 / n as f64))
            .collect();
        for w in g.windows(3) {
            assert!(w[2] - 2.0 * w[1] + w[0] < 0.0);
        }
    }
}
