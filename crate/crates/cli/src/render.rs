//! Builders for the textual command outputs.
//!
//! Everything here returns a complete output document as a `String`, so the
//! emitters are trivially testable and byte-determinism is a property of
//! the builders themselves, not of the I/O layer. CSV floats are printed
//! with fixed 8-decimal formatting; JSON carries full double precision.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde_json::json;

use opendoor::{
    c0_bracket, f_eval, gamma_curve, qc_at_minus_one, qc_at_one, qc_eval, qc_series,
    rat_from_f64, rho, trace_boundary, ComplexVal, EvalConfig, Rational,
};

use crate::svg::{emit_svg, Curve, LineStyle};
use crate::AppError;

fn f8(x: f64) -> String {
    format!("{x:.8}")
}

fn rational_tol(tol: f64) -> Result<Rational, AppError> {
    if !(tol > 0.0) {
        return Err(AppError::Usage("tolerance must be positive".into()));
    }
    rat_from_f64(tol).ok_or_else(|| AppError::Usage("tolerance must be finite".into()))
}

pub fn coeffs_json(n_max: usize) -> String {
    let series = qc_series(n_max);
    let mut out = serde_json::to_string_pretty(&json!({
        "n_max": n_max,
        "b": series.coeff_strings(),
    }))
    .expect("static JSON");
    out.push('\n');
    out
}

pub fn eval_json(c: f64, z: ComplexVal, cfg: &EvalConfig) -> Result<String, AppError> {
    let q = qc_eval(c, z, cfg)?;
    let mut out = serde_json::to_string_pretty(&json!({
        "c": c,
        "z": [z.re, z.im],
        "q": [q.re, q.im],
    }))
    .expect("static JSON");
    out.push('\n');
    Ok(out)
}

pub fn table1_csv(n_max: usize, tol: f64, deep: bool) -> Result<String, AppError> {
    if n_max == 0 || n_max > opendoor::RHO_MAX_N {
        return Err(AppError::Usage(format!(
            "--n-max must be in 1..={}",
            opendoor::RHO_MAX_N
        )));
    }
    let tol = rational_tol(tol)?;
    let mut rows: Vec<usize> = (1..=n_max).collect();
    if deep && n_max < 30 {
        rows.push(30);
    }
    let brackets = rows
        .par_iter()
        .map(|&n| rho(n, &tol))
        .collect::<opendoor::Result<Vec<_>>>()?;
    let mut out = String::from("n,rho_n,gamma_n,delta_gamma_n\n");
    let mut prev_gamma: Option<f64> = None;
    for (n, b) in rows.iter().zip(&brackets) {
        let r = b.midpoint_f64();
        let gamma = PI * r / 4.0;
        let delta = prev_gamma.map(|p| f8(gamma - p)).unwrap_or_default();
        out.push_str(&format!("{n},{},{},{delta}\n", f8(r), f8(gamma)));
        prev_gamma = Some(gamma);
    }
    Ok(out)
}

pub fn find_c0_json(tol: f64, cfg: &EvalConfig) -> Result<String, AppError> {
    if !(tol > 0.0) {
        return Err(AppError::Usage("tolerance must be positive".into()));
    }
    let (lo, hi) = c0_bracket(tol, cfg)?;
    let c0 = 0.5 * (lo + hi);
    let mut out = serde_json::to_string_pretty(&json!({
        "c0": c0,
        "gamma_star": PI * c0 / 4.0,
        "bracket": [lo, hi],
    }))
    .expect("static JSON");
    out.push('\n');
    Ok(out)
}

pub fn trace_csv(c: f64, m: usize, cfg: &EvalConfig) -> Result<String, AppError> {
    let samples = trace_boundary(c, m, cfg)?;
    let mut out = String::from("theta,R,Theta,beta,re,im\n");
    for s in samples {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            f8(s.theta),
            f8(s.modulus),
            f8(s.argument),
            f8(s.tangent),
            f8(s.value.re),
            f8(s.value.im)
        ));
    }
    Ok(out)
}

pub fn bounds_csv(grid: usize, tol: f64, cfg: &EvalConfig) -> Result<String, AppError> {
    if grid < 16 {
        return Err(AppError::Usage("--grid must be at least 16".into()));
    }
    if !(tol > 0.0) {
        return Err(AppError::Usage("tolerance must be positive".into()));
    }
    let alphas: Vec<f64> = (1..=grid).map(|k| k as f64 / (grid + 1) as f64).collect();
    let points = gamma_curve(&alphas, tol, cfg)?;
    let mut out = String::from("alpha,lower,gamma,upper\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{}\n",
            f8(p.alpha),
            f8(p.lower),
            f8(p.gamma),
            f8(p.upper)
        ));
    }
    Ok(out)
}

/// Closed image of the unit circle under q_c: upper traced arc joined to
/// its reflection through the endpoint values q_c(±1). The curve starts
/// and ends on the positive real axis at q_c(1) and crosses it again at
/// q_c(-1).
pub fn boundary_closed_points(
    c: f64,
    m: usize,
    cfg: &EvalConfig,
) -> Result<Vec<(f64, f64)>, AppError> {
    let samples = trace_boundary(c, m, cfg)?;
    let q1 = qc_at_one(c, cfg)?;
    let qm1 = qc_at_minus_one(c, cfg)?;
    let mut points = Vec::with_capacity(2 * samples.len() + 3);
    points.push((q1, 0.0));
    points.extend(samples.iter().map(|s| (s.value.re, s.value.im)));
    points.push((qm1, 0.0));
    points.extend(samples.iter().rev().map(|s| (s.value.re, -s.value.im)));
    points.push((q1, 0.0));
    Ok(points)
}

pub fn plot_boundary_svg(c: f64, m: usize, cfg: &EvalConfig) -> Result<String, AppError> {
    let curve = Curve {
        label: format!("image of |z|=1 under q_c, c={c}"),
        style: LineStyle::Solid,
        points: boundary_closed_points(c, m, cfg)?,
    };
    emit_svg(
        &format!("Conformal image of the unit disk boundary, c = {c}"),
        "Re q",
        "Im q",
        &[curve],
        true,
    )
    .map_err(AppError::Compute)
}

/// Graph of c ↦ Re F(c); the first zero crossing marks c₀.
pub fn plot_fgraph_svg(
    c_min: f64,
    c_max: f64,
    samples: usize,
    cfg: &EvalConfig,
) -> Result<String, AppError> {
    if !(c_min > 0.0 && c_max > c_min) {
        return Err(AppError::Usage("need 0 < --c-min < --c-max".into()));
    }
    if samples < 16 {
        return Err(AppError::Usage("--samples must be at least 16".into()));
    }
    let cs: Vec<f64> = (0..samples)
        .map(|k| c_min + (c_max - c_min) * k as f64 / (samples - 1) as f64)
        .collect();
    let values = cs
        .par_iter()
        .map(|&c| Ok((c, f_eval(c, cfg)?.re)))
        .collect::<opendoor::Result<Vec<_>>>()?;
    let curve = Curve {
        label: "Re F(c)".into(),
        style: LineStyle::Solid,
        points: values,
    };
    emit_svg("Re F(c) along the critical ray", "c", "Re F", &[curve], false)
        .map_err(AppError::Compute)
}

/// γ(SS_α) between its lower and upper bounds (solid/dashed/dotted).
pub fn plot_gamma_svg(grid: usize, tol: f64, cfg: &EvalConfig) -> Result<String, AppError> {
    if grid < 16 {
        return Err(AppError::Usage("--grid must be at least 16".into()));
    }
    if !(tol > 0.0) {
        return Err(AppError::Usage("tolerance must be positive".into()));
    }
    let alphas: Vec<f64> = (1..=grid).map(|k| k as f64 / (grid + 1) as f64).collect();
    let points = gamma_curve(&alphas, tol, cfg)?;
    let curves = [
        Curve {
            label: "gamma(SS_alpha)".into(),
            style: LineStyle::Solid,
            points: points.iter().map(|p| (p.alpha, p.gamma)).collect(),
        },
        Curve {
            label: "lower bound g(alpha)".into(),
            style: LineStyle::Dashed,
            points: points.iter().map(|p| (p.alpha, p.lower)).collect(),
        },
        Curve {
            label: "upper bound".into(),
            style: LineStyle::Dotted,
            points: points.iter().map(|p| (p.alpha, p.upper)).collect(),
        },
    ];
    emit_svg(
        "Strip half-width for strong starlikeness of order alpha",
        "alpha",
        "gamma",
        &curves,
        false,
    )
    .map_err(AppError::Compute)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coeffs_payload_is_reduced_and_shaped() {
        let text = coeffs_json(7);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["n_max"], 7);
        let b = v["b"].as_array().unwrap();
        assert_eq!(b.len(), 8);
        assert_eq!(b[0].as_array().unwrap().len(), 1);
        assert_eq!(b[0][0], "1/1");
        // b_7 = (1620 c + 189 c^3 - 7 c^5)/90720 in lowest terms
        let b7: Vec<&str> = b[7].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
        assert_eq!(b7, ["0/1", "1/56", "0/1", "1/480", "0/1", "-1/12960"]);
    }

    #[test]
    fn table_csv_is_deterministic_and_self_consistent() {
        let a = table1_csv(5, 1e-8, false).unwrap();
        let b = table1_csv(5, 1e-8, false).unwrap();
        assert_eq!(a, b);
        let lines: Vec<&str> = a.trim_end().lines().collect();
        assert_eq!(lines[0], "n,rho_n,gamma_n,delta_gamma_n");
        assert_eq!(lines.len(), 6);
        let mut prev_gamma: Option<f64> = None;
        for line in &lines[1..] {
            let f: Vec<&str> = line.split(',').collect();
            assert_eq!(f.len(), 4);
            let rho: f64 = f[1].parse().unwrap();
            let gamma: f64 = f[2].parse().unwrap();
            assert!((gamma - std::f64::consts::PI * rho / 4.0).abs() < 1e-7);
            match prev_gamma {
                None => assert!(f[3].is_empty()),
                Some(p) => {
                    let delta: f64 = f[3].parse().unwrap();
                    // column re-derivable from the gamma column (rounded prints)
                    assert!((delta - (gamma - p)).abs() < 2e-8, "{delta} vs {}", gamma - p);
                }
            }
            prev_gamma = Some(gamma);
        }
    }

    #[test]
    fn table_rejects_bad_parameters() {
        assert!(matches!(table1_csv(0, 1e-8, false), Err(AppError::Usage(_))));
        assert!(matches!(table1_csv(31, 1e-8, false), Err(AppError::Usage(_))));
        assert!(matches!(table1_csv(3, -1.0, false), Err(AppError::Usage(_))));
    }

    #[test]
    fn boundary_curve_is_closed_and_crosses_the_real_axis() {
        let cfg = EvalConfig::default();
        let c = 3.0276;
        let pts = boundary_closed_points(c, 64, &cfg).unwrap();
        assert_eq!(pts.first(), pts.last());
        let q1 = qc_at_one(c, &cfg).unwrap();
        let qm1 = qc_at_minus_one(c, &cfg).unwrap();
        assert_eq!(pts[0], (q1, 0.0));
        assert!(pts.contains(&(qm1, 0.0)));
        // reflection symmetry of the closed curve
        let n = pts.len();
        for k in 1..n / 2 {
            let (xu, yu) = pts[k];
            let (xl, yl) = pts[n - 1 - k];
            assert!((xu - xl).abs() < 1e-12 && (yu + yl).abs() < 1e-12);
        }
    }

    #[test]
    fn trace_csv_shape() {
        let cfg = EvalConfig::default();
        let text = trace_csv(1.0, 32, &cfg).unwrap();
        let lines: Vec<&str> = text.trim_end().lines().collect();
        assert_eq!(lines[0], "theta,R,Theta,beta,re,im");
        assert_eq!(lines.len(), 33);
        let thetas: Vec<f64> = lines[1..]
            .iter()
            .map(|l| l.split(',').next().unwrap().parse().unwrap())
            .collect();
        assert!(thetas.windows(2).all(|w| w[0] < w[1]));
    }
}
