//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision signed fraction kept in lowest terms
//! with a positive denominator; all arithmetic is exact. The representation
//! is `num_rational::BigRational`, which maintains both invariants on every
//! construction and operation.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Fraction n/d. Panics if d = 0.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer n as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact rational value of a finite f64.
pub fn rat_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Nearest f64 (rounding happens only here, never in rational arithmetic).
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Canonical "num/den" form used by the JSON emitters, e.g. "-7/90720".
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Sign of an exact rational: -1, 0 or +1.
pub fn rat_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
