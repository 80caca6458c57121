//! Fraction-free (Bareiss) determinants over exact rings.
//!
//! The one-step Bareiss recurrence keeps every intermediate entry in the
//! ring: the division by the previous pivot is always exact. Row swaps are
//! tracked by sign; a column with no usable pivot means the determinant is
//! zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::parampoly::ParamPoly;

/// Exact determinant of a square integer matrix.
pub fn bareiss_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact determinant of a square matrix of polynomials in c.
pub fn bareiss_poly(mut m: Vec<Vec<ParamPoly>>) -> ParamPoly {
    let n = m.len();
    if n == 0 {
        return ParamPoly::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i8;
    let mut prev = ParamPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return ParamPoly::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t
                    .div_exact(&prev)
                    .expect("Bareiss division is exact by construction");
            }
            m[i][k] = ParamPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -&det
    } else {
        det
    }
}
