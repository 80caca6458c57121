//! Polynomials in the strip parameter c with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rational::{rat_to_f64, Rational};

/// Polynomial in c over the rationals, stored densely: `coeffs[k]` is the
/// coefficient of c^k. Canonical form has no trailing zeros, so the zero
/// polynomial is the empty list and its degree is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ParamPoly {
    coeffs: Vec<Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::from_integer(1.into()))
    }

    pub fn constant(r: Rational) -> Self {
        Self::from_coeffs(vec![r])
    }

    /// coeff · c^degree
    pub fn monomial(degree: usize, coeff: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::from_coeffs(coeffs)
    }

    /// Builds from low-to-high coefficients, trimming to canonical form.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficient list, low to high.
    pub fn from_integers(ints: &[i64]) -> Self {
        Self::from_coeffs(
            ints.iter()
                .map(|&n| Rational::from_integer(n.into()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of c^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact evaluation by Horner's scheme.
    pub fn eval(&self, c: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for k in self.coeffs.iter().rev() {
            acc = &(&acc * c) + k;
        }
        acc
    }

    /// Floating evaluation (each coefficient rounded once, then Horner).
    pub fn eval_f64(&self, c: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, k| acc * c + rat_to_f64(k))
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// p(-c): negates odd-degree coefficients.
    pub fn substitute_neg(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Exact polynomial quotient; `None` if the division leaves a remainder
    /// or the divisor is zero.
    pub fn div_exact(&self, divisor: &ParamPoly) -> Option<ParamPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(ParamPoly::zero());
        }
        let nd = self.degree().expect("nonzero");
        if nd < dd {
            return None;
        }
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if !q.is_zero() {
                for j in 0..=dd {
                    rem[k + j] = &rem[k + j] - &(&q * &divisor.coeffs[j]);
                }
            }
            quo[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(ParamPoly::from_coeffs(quo))
        } else {
            None
        }
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        ParamPoly::from_coeffs(coeffs)
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        ParamPoly::from_coeffs(coeffs)
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        // Schoolbook; degrees stay small enough that anything fancier is noise.
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        ParamPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: &ParamPoly) -> ParamPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})c")?,
                _ => write!(f, "({a})c^{k}")?,
            }
        }
        Ok(())
    }
}
