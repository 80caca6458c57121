//! Carathéodory–Toeplitz determinants Δ_n(q_c) and certified root brackets.
//!
//! The coefficients b_k(c) of q_c are real polynomials, so the bordered
//! Toeplitz matrix of the positivity criterion is real symmetric with
//! diagonal 2:
//!
//! ```text
//! Δ_n = det [ 2      b_1     b_2  …  b_n    ]
//!           [ b_1    2       b_1  …  b_{n-1}]
//!           [ …                             ]
//!           [ b_n    b_{n-1}      …  2      ]
//! ```
//!
//! Δ_n is computed two ways: symbolically over `ParamPoly` for small n, and
//! exactly at a fixed rational c for the Table-1 range. Either way the sign
//! of the result is rigorous, which is what the root bracketing needs.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::det::{bareiss_int, bareiss_poly};
use crate::error::{invalid, Error, Result};
use crate::isolate::{smallest_root_in, IntPoly, SmallestRoot};
use crate::parampoly::ParamPoly;
use crate::rational::{rat, rat_int, rat_sign, rat_to_f64, Rational};
use crate::series::qc_series;

/// Largest n for which Δ_n is expanded symbolically.
pub const SYMBOLIC_MAX_N: usize = 8;
/// Largest n supported by the exact-at-rational-c evaluation.
pub const RHO_MAX_N: usize = 30;

/// Certified bracket around the smallest positive root of Δ_n:
/// Δ_n(lo) > 0 and Δ_n(hi) < 0 as exact rational signs.
#[derive(Clone, Debug)]
pub struct RootBracket {
    pub lo: Rational,
    pub hi: Rational,
    pub n: usize,
}

impl RootBracket {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn midpoint_f64(&self) -> f64 {
        rat_to_f64(&self.midpoint())
    }
}

fn cached_series() -> &'static [ParamPoly] {
    static SERIES: OnceLock<Vec<ParamPoly>> = OnceLock::new();
    SERIES
        .get_or_init(|| qc_series(RHO_MAX_N).coeffs().to_vec())
        .as_slice()
}

/// Δ_n(q_c) as an exact polynomial in c (n ≤ 8).
pub fn delta_symbolic(n: usize) -> Result<ParamPoly> {
    if n == 0 || n > SYMBOLIC_MAX_N {
        return Err(invalid(format!(
            "delta_symbolic: n must be in 1..={SYMBOLIC_MAX_N}, got {n}"
        )));
    }
    let b = cached_series();
    let two = ParamPoly::from_integers(&[2]);
    let size = n + 1;
    let m: Vec<Vec<ParamPoly>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        two.clone()
                    } else {
                        b[i.abs_diff(j)].clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(bareiss_poly(m))
}

fn check_args(op: &'static str, n: usize, c: &Rational) -> Result<()> {
    if n == 0 || n > RHO_MAX_N {
        return Err(invalid(format!("{op}: n must be in 1..={RHO_MAX_N}, got {n}")));
    }
    if c.is_negative() {
        return Err(invalid(format!("{op}: c must be >= 0")));
    }
    Ok(())
}

/// Integer matrix with the same minor signs as the Toeplitz section at c:
/// each row is scaled by the (positive) lcm of its denominators. The second
/// return value is the product of the row multipliers.
fn scaled_toeplitz(n: usize, c: &Rational) -> (Vec<Vec<BigInt>>, BigInt) {
    let b = cached_series();
    let vals: Vec<Rational> = (1..=n).map(|k| b[k].eval(c)).collect();
    let two = rat(2, 1);
    let size = n + 1;
    let entry = |i: usize, j: usize| -> &Rational {
        if i == j {
            &two
        } else {
            &vals[i.abs_diff(j) - 1]
        }
    };
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(size);
    for i in 0..size {
        let mut row_lcm = BigInt::one();
        for j in 0..size {
            row_lcm = row_lcm.lcm(entry(i, j).denom());
        }
        let row = (0..size)
            .map(|j| {
                let e = entry(i, j);
                e.numer() * (&row_lcm / e.denom())
            })
            .collect();
        scale *= &row_lcm;
        m.push(row);
    }
    (m, scale)
}

/// Exact value of Δ_n(q_c) at a rational c (n ≤ 30). The sign is rigorous.
pub fn delta_at(n: usize, c: &Rational) -> Result<Rational> {
    check_args("delta_at", n, c)?;
    // Row scaling multiplies the determinant by the product of the
    // (positive) multipliers; dividing back restores the exact value.
    let (m, scale) = scaled_toeplitz(n, c);
    let det = bareiss_int(m);
    Ok(Rational::new(det, scale))
}

/// Δ_n(q_c) as an exact integer polynomial in u = c², up to a positive
/// rational factor.
///
/// Δ_n is even in c (b_k(−c) = (−1)^k b_k(c) conjugates the matrix by a
/// sign flip) of degree at most ⌊(n+1)²/2⌋, so it is reconstructed by
/// Newton interpolation in u from exact determinant values at c = 0..D.
/// The interpolant is validated against direct determinant values at
/// non-node points before use.
pub(crate) fn delta_even_poly(n: usize) -> Result<IntPoly> {
    let d = (n + 1) * (n + 1) / 4; // degree bound in u
    let nodes: Vec<Rational> = (0..=d).map(|j| rat_int((j * j) as i64)).collect();
    let mut dd: Vec<Rational> = (0..=d)
        .map(|j| delta_at(n, &rat_int(j as i64)))
        .collect::<Result<_>>()?;
    for level in 1..=d {
        for i in (level..=d).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - level]);
        }
    }
    // expand the Newton form into monomial coefficients
    let mut poly = vec![dd[d].clone()];
    for i in (0..d).rev() {
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (k, a) in poly.iter().enumerate() {
            next[k + 1] = &next[k + 1] + a;
            next[k] = &next[k] - &(a * &nodes[i]);
        }
        next[0] = &next[0] + &dd[i];
        poly = next;
    }
    for c in [rat(1, 3), rat(5, 2)] {
        let u = &c * &c;
        let mut val = Rational::zero();
        for a in poly.iter().rev() {
            val = &(&val * &u) + a;
        }
        if val != delta_at(n, &c)? {
            return Err(Error::BracketFailure(
                "interpolated determinant polynomial failed validation",
            ));
        }
    }
    let mut lcm = BigInt::one();
    for c in &poly {
        lcm = lcm.lcm(c.denom());
    }
    let ints = poly.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    Ok(IntPoly::from_coeffs(ints))
}

/// Dyadic bracket of width ≤ tol around ρ = √u* for u* inside (ua, ub),
/// with both endpoint signs certified directly by `delta_at`.
fn dyadic_c_bracket(
    n: usize,
    ua: &Rational,
    ub: &Rational,
    tol: &Rational,
) -> Result<RootBracket> {
    let quarter = tol / rat_int(4);
    let mut step = rat(1, 4);
    let mut k: i32 = 2;
    while step > quarter {
        step = step / rat_int(2);
        k += 1;
    }
    let scale = 2f64.powi(k);
    let r_lo = rat_to_f64(ua).sqrt();
    let r_hi = rat_to_f64(ub).sqrt();
    let to_dyadic = |x: f64| -> Rational {
        Rational::from_float(x).expect("finite dyadic") / Rational::from_float(scale).unwrap()
    };
    let mut c_lo = to_dyadic((r_lo * scale).floor());
    let mut c_hi = to_dyadic((r_hi * scale).ceil());
    // floor/ceil in f64 can land on or just past the root; back off a step
    // at a time (an exactly-dyadic root like rho_1 = 4 needs one nudge)
    for _ in 0..4 {
        if rat_sign(&delta_at(n, &c_lo)?) > 0 {
            break;
        }
        c_lo = &c_lo - &step;
    }
    for _ in 0..4 {
        if rat_sign(&delta_at(n, &c_hi)?) < 0 {
            break;
        }
        c_hi = &c_hi + &step;
    }
    let ok = rat_sign(&delta_at(n, &c_lo)?) > 0
        && rat_sign(&delta_at(n, &c_hi)?) < 0
        && &c_hi - &c_lo <= *tol
        && !c_lo.is_negative();
    if !ok {
        return Err(Error::BracketFailure("rho: could not certify a dyadic bracket"));
    }
    Ok(RootBracket { lo: c_lo, hi: c_hi, n })
}

/// Certified bracket of width ≤ tol around the smallest positive root ρ_n
/// of Δ_n(q_c) in c.
///
/// The first negative window of Δ_n narrows rapidly with n (well below
/// 1e-6 already at n = 15), so no fixed-step sign scan can locate the
/// smallest root reliably. Instead the exact polynomial Δ_n in u = c² is
/// reconstructed and its leftmost root on (0, 16] isolated by exact
/// Descartes bisection; the final dyadic bracket is then certified by
/// direct determinant signs, which keeps the RootBracket invariant
/// independent of the interpolation machinery.
pub fn rho(n: usize, tol: &Rational) -> Result<RootBracket> {
    if !tol.is_positive() {
        return Err(invalid("rho: tol must be > 0"));
    }
    let p = delta_even_poly(n)?;
    let u_hi = rat_int(16); // c ranges over (0, 4]
    let found = smallest_root_in(&p, &u_hi)?;
    let (mut ua, mut ub) = match found {
        Some(SmallestRoot::Exact(u)) => (u.clone(), u),
        Some(SmallestRoot::Bracket(a, b)) => (a, b),
        None => {
            if p.sign_at(&u_hi) == 0 {
                (u_hi.clone(), u_hi)
            } else {
                return Err(Error::BracketFailure("rho: no root of Delta_n in (0, 4]"));
            }
        }
    };
    // tighten in u until the mapped c-interval is well under tol
    let tol_f = rat_to_f64(tol);
    while rat_to_f64(&ub).sqrt() - rat_to_f64(&ua).sqrt() > 0.25 * tol_f {
        let mid = (&ua + &ub) / rat_int(2);
        match p.sign_at(&mid) {
            1 => ua = mid,
            -1 => ub = mid,
            _ => {
                ua = mid.clone();
                ub = mid;
                break;
            }
        }
    }
    dyadic_c_bracket(n, &ua, &ub, tol)
}

/// Closed form of Δ_2 for p = [q_c]^{1/α}:
/// ((9 − α²)c⁴ − 288α²c² + 2304α⁴) / (288α⁴).
pub fn delta2_fractional(alpha: f64, c: f64) -> f64 {
    assert!(alpha > 0.0 && alpha <= 1.0, "alpha must be in (0, 1]");
    let a2 = alpha * alpha;
    let c2 = c * c;
    ((9.0 - a2) * c2 * c2 - 288.0 * a2 * c2 + 2304.0 * a2 * a2) / (288.0 * a2 * a2)
}
