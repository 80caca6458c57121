//! Power-series coefficients of q_c.
//!
//! Writing q_c(z) = 1 + Σ b_n(c) zⁿ and h_c(z) − 1 = Σ a_n zⁿ with
//! a_n = c/n for odd n and 0 for even n, the equation q + zq'/q = h_c is
//! equivalent to zq' = q(h_c − q), and comparing coefficients gives
//!
//! ```text
//! (n+1)·b_n = a_n + Σ_{j=1}^{n-1} b_j (a_{n-j} − b_{n-j})
//! ```
//!
//! Each b_n is computed exactly as a `ParamPoly` in c; a parallel floating
//! path produces the coefficient values at a fixed numeric c for the
//! evaluators that do not need exactness.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::parampoly::ParamPoly;
use crate::rational::{format_ratio, rat, rat_to_f64, Rational};

/// Exact coefficients b_0..b_{n_max} of q_c as polynomials in c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcSeries {
    coeffs: Vec<ParamPoly>,
}

impl QcSeries {
    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &ParamPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    /// Per-coefficient "num/den" strings, one inner list per b_n
    /// (index k = coefficient of c^k). This is the wire form used by the
    /// `coeffs` CLI command.
    pub fn coeff_strings(&self) -> Vec<Vec<String>> {
        self.coeffs
            .iter()
            .map(|p| {
                if p.is_zero() {
                    vec![format_ratio(&Rational::zero())]
                } else {
                    p.coeffs().iter().map(format_ratio).collect()
                }
            })
            .collect()
    }
}

/// Coefficient of zⁿ in h_c(z) − 1, as a polynomial in c.
fn h_coeff(n: usize) -> ParamPoly {
    if n % 2 == 1 {
        ParamPoly::monomial(1, rat(1, n as i64))
    } else {
        ParamPoly::zero()
    }
}

/// Exact series coefficients of q_c up to zⁿ_max.
pub fn qc_series(n_max: usize) -> QcSeries {
    let mut b: Vec<ParamPoly> = Vec::with_capacity(n_max + 1);
    b.push(ParamPoly::one());
    for n in 1..=n_max {
        let mut acc = h_coeff(n);
        for j in 1..n {
            let d = &h_coeff(n - j) - &b[n - j];
            acc = &acc + &(&b[j] * &d);
        }
        b.push(acc.scaled(&rat(1, n as i64 + 1)));
    }
    QcSeries { coeffs: b }
}

/// Σ b_n(c) zⁿ with each b_n evaluated exactly at the rational c, then a
/// single rounding to f64 per coefficient and Horner in z.
pub fn series_eval(s: &QcSeries, c: &Rational, z: Complex64) -> Complex64 {
    let vals: Vec<f64> = s.coeffs.iter().map(|p| rat_to_f64(&p.eval(c))).collect();
    horner(&vals, z)
}

/// Floating coefficients b_0..b_{n_max} at a fixed numeric c, by the same
/// recurrence.
pub fn qc_coeffs_numeric(c: f64, n_max: usize) -> Vec<f64> {
    let a = |k: usize| if k % 2 == 1 { c / k as f64 } else { 0.0 };
    let mut b = vec![0.0; n_max + 1];
    b[0] = 1.0;
    for n in 1..=n_max {
        let mut acc = a(n);
        for j in 1..n {
            acc += b[j] * (a(n - j) - b[n - j]);
        }
        b[n] = acc / (n as f64 + 1.0);
    }
    b
}

/// Horner evaluation of Σ coeffs[n] zⁿ.
pub fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::ZERO, |acc, &k| acc * z + k)
}

/// Horner evaluation of the derivative Σ n·coeffs[n] z^{n-1}.
pub fn horner_derivative(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::ZERO;
    for n in (1..coeffs.len()).rev() {
        acc = acc * z + coeffs[n] * n as f64;
    }
    acc
}

const UNIT_CONSTANT_TOL: f64 = 1e-12;

/// log of a power series with constant term 1: l_n = q_n − (1/n)Σ k l_k q_{n-k}.
fn series_log(q: &[f64]) -> Vec<f64> {
    let mut l = vec![0.0; q.len()];
    for n in 1..q.len() {
        let mut s = 0.0;
        for k in 1..n {
            s += k as f64 * l[k] * q[n - k];
        }
        l[n] = q[n] - s / n as f64;
    }
    l
}

/// exp of a power series with constant term 0: n p_n = Σ k l_k p_{n-k}.
fn series_exp(l: &[f64]) -> Vec<f64> {
    let mut p = vec![0.0; l.len()];
    p[0] = 1.0;
    for n in 1..l.len() {
        let mut s = 0.0;
        for k in 1..=n {
            s += k as f64 * l[k] * p[n - k];
        }
        p[n] = s / n as f64;
    }
    p
}

/// Coefficients of (Σ coeffs[n] zⁿ)^exponent, truncated to the same order,
/// via exp(exponent · log series). The constant term must be 1.
pub fn series_pow(coeffs: &[f64], exponent: f64) -> Result<Vec<f64>> {
    let Some(&c0) = coeffs.first() else {
        return Err(invalid("series_pow: empty series"));
    };
    if (c0 - 1.0).abs() > UNIT_CONSTANT_TOL {
        return Err(invalid(format!(
            "series_pow: constant term must be 1, got {c0}"
        )));
    }
    if !exponent.is_finite() {
        return Err(invalid("series_pow: exponent must be finite"));
    }
    let mut l = series_log(coeffs);
    for v in &mut l {
        *v *= exponent;
    }
    Ok(series_exp(&l))
}
