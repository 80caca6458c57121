//! Complex dilogarithm Li₂ and Legendre's chi-function χ₂.
//!
//! The argument is first moved into a fast-convergence region by the
//! standard functional equations
//!
//! ```text
//! Li₂(z) = −Li₂(1/z) − π²/6 − log²(−z)/2          (|z| > 1)
//! Li₂(z) = −Li₂(1−z) + π²/6 − log(z)·log(1−z)     (Re z > 1/2)
//! ```
//!
//! and the remaining piece is summed by the Bernoulli expansion in
//! u = −log(1−z):
//!
//! ```text
//! Li₂(z) = Σ_{k≥0} B_k u^{k+1}/(k+1)! = u − u²/4 + Σ_{j≥1} C_j u^{2j+1}
//! ```
//!
//! After the reductions |u| ≤ ~1.72, so successive terms shrink by
//! |u/2π|² ≈ 0.075 and about twenty terms reach double precision. The raw
//! defining series Σ zⁿ/n² is never used on the boundary, where its tail
//! only decays like 1/n.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const PI2_6: f64 = PI * PI / 6.0;

/// C_j = B_{2j}/(2j+1)!
const BERNOULLI_OVER_FACTORIAL: [f64; 22] = [
    0.027777777777777777778,
    -0.00027777777777777777778,
    4.7241118669690098262e-6,
    -9.1857730746619635509e-8,
    1.8978869988970999072e-9,
    -4.0647616451442255268e-11,
    8.9216910204564525552e-13,
    -1.9939295860721075687e-14,
    4.5189800296199181917e-16,
    -1.0356517612181247014e-17,
    2.3952186210261867457e-19,
    -5.5817858743250093363e-21,
    1.3091507554183212858e-22,
    -3.0874198024267402932e-24,
    7.3159756527022034204e-26,
    -1.7408456572340007410e-27,
    4.1576356446138997196e-29,
    -9.9621484882846221032e-31,
    2.3940344248961653005e-32,
    -5.7683473553673900843e-34,
    1.3931794796470079778e-35,
    -3.3721219654850894705e-37,
];

fn bernoulli_series(w: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - w).ln();
    let u2 = u * u;
    let mut sum = u - u2 * 0.25;
    let mut upow = u * u2;
    for c in BERNOULLI_OVER_FACTORIAL {
        let term = upow * c;
        sum += term;
        if term.norm_sqr() <= sum.norm_sqr() * 1e-34 {
            break;
        }
        upow *= u2;
    }
    sum
}

/// Principal-branch dilogarithm. Rejects arguments on the cut [1, ∞).
pub fn dilog(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re >= 1.0 {
        if z.re == 1.0 {
            return Ok(Complex64::new(PI2_6, 0.0));
        }
        return Err(Error::BranchCut(z));
    }
    if z == Complex64::ZERO {
        return Ok(Complex64::ZERO);
    }
    if z.im == 0.0 && z.re == -1.0 {
        return Ok(Complex64::new(-PI2_6 / 2.0, 0.0));
    }

    let mut w = z;
    let mut sign = 1.0;
    let mut shift = Complex64::ZERO;
    if w.norm_sqr() > 1.0 {
        let lw = (-w).ln();
        shift -= Complex64::new(PI2_6, 0.0) + lw * lw * 0.5;
        sign = -sign;
        w = w.inv();
    }
    if w.re > 0.5 {
        let onemw = Complex64::new(1.0, 0.0) - w;
        shift += sign * (Complex64::new(PI2_6, 0.0) - w.ln() * onemw.ln());
        sign = -sign;
        w = onemw;
    }
    Ok(sign * bernoulli_series(w) + shift)
}

/// Legendre chi-function χ₂(z) = [Li₂(z) − Li₂(−z)]/2.
pub fn chi2(z: Complex64) -> Result<Complex64> {
    Ok((dilog(z)? - dilog(-z)?) * 0.5)
}
