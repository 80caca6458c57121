//! Exact isolation of the smallest positive root of an integer polynomial.
//!
//! Vincent–Collins–Akritas bisection: the Descartes bound counts the sign
//! variations of (1+x)^d·P(1/(1+x)) to bound the number of roots in (0, 1);
//! zero variations prove there is no root, one variation proves exactly one
//! simple root. Splitting left-first finds the leftmost root without
//! touching the rest of the spectrum, which is what makes thin sign
//! windows (a pair of nearby roots) tractable where plain sign scanning
//! cannot see them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense integer polynomial, index k = coefficient of x^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact sign at a rational point: sign of Σ a_k p^k q^{d-k} for x = p/q.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let d = match self.degree() {
            Some(d) => d,
            None => return 0,
        };
        let p = x.numer();
        let q = x.denom();
        // Horner in p with a trailing power of q
        let mut acc = self.coeffs[d].clone();
        for k in (0..d).rev() {
            acc = acc * p + &self.coeffs[k] * q.pow((d - k) as u32);
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Minus => -1,
        }
    }

    /// Divides by the gcd of the coefficients (keeps bit sizes in check
    /// along the bisection tree; signs are unaffected).
    fn primitive(mut self) -> Self {
        let mut content = BigInt::zero();
        for c in &self.coeffs {
            content = content.gcd(c);
            if content.is_one() {
                return self;
            }
        }
        if content.is_zero() || content.is_one() {
            return self;
        }
        for c in &mut self.coeffs {
            *c = &*c / &content;
        }
        self
    }

    /// P(x + 1) by repeated synthetic division (Pascal scheme), O(d²).
    fn taylor_shift_one(&self) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = c[j + 1].clone();
                c[j] += add;
            }
        }
        // the loop above accumulates binomials in place; rebuild canonical
        IntPoly::from_coeffs(c)
    }

    /// 2^d · P(x/2): a_k ← a_k · 2^{d-k}.
    fn half_scale(&self) -> Self {
        let d = self.coeffs.len().saturating_sub(1);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a << (d - k))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// x^d · P(1/x) (coefficient reversal; drops a root at 0 if present).
    fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::from_coeffs(c)
    }

    /// Descartes bound for the number of roots in the open interval (0, 1):
    /// sign variations of (1+x)^d · P(1/(1+x)).
    fn variations_in_unit_interval(&self) -> usize {
        let q = self.reversed().taylor_shift_one();
        let mut count = 0;
        let mut last: i8 = 0;
        for c in &q.coeffs {
            let s = match c.sign() {
                num_bigint::Sign::Plus => 1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Minus => -1,
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }
}

/// Location of the smallest root of a polynomial on an interval.
#[derive(Clone, Debug)]
pub enum SmallestRoot {
    /// Exact rational root.
    Exact(Rational),
    /// Open interval (lo, hi) containing exactly one simple root.
    Bracket(Rational, Rational),
}

const MAX_DEPTH: usize = 96;

/// Smallest root of P in the open interval (0, hi), if any. P must not
/// vanish at 0 or hi (check endpoints separately).
pub fn smallest_root_in(p: &IntPoly, hi: &Rational) -> Result<Option<SmallestRoot>> {
    // map (0, hi) onto (0, 1): Q(x) = P(hi·x), cleared of denominators
    let d = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return Ok(None),
    };
    let num = hi.numer();
    let den = hi.denom();
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| a * num.pow(k as u32) * den.pow((d - k) as u32))
        .collect();
    let q = IntPoly::from_coeffs(coeffs).primitive();
    Ok(leftmost(&q, Rational::zero(), Rational::one(), 0)?.map(|root| match root {
        SmallestRoot::Exact(x) => SmallestRoot::Exact(x * hi),
        SmallestRoot::Bracket(a, b) => SmallestRoot::Bracket(a * hi, b * hi),
    }))
}

/// Leftmost root of q in (0, 1), reported in the (a, b) coordinates of the
/// original interval. q is the original polynomial transplanted onto (a, b).
fn leftmost(
    q: &IntPoly,
    a: Rational,
    b: Rational,
    depth: usize,
) -> Result<Option<SmallestRoot>> {
    match q.variations_in_unit_interval() {
        0 => return Ok(None),
        1 => return Ok(Some(SmallestRoot::Bracket(a, b))),
        _ => {}
    }
    if depth >= MAX_DEPTH {
        return Err(Error::BracketFailure(
            "root isolation depth exhausted (multiple root suspected)",
        ));
    }
    let mid = (&a + &b) / Rational::from_integer(2.into());
    let left = q.half_scale().primitive();
    // left half first: the smallest root wins
    if let Some(found) = leftmost(&left, a, mid.clone(), depth + 1)? {
        return Ok(Some(found));
    }
    if left.sign_at(&Rational::one()) == 0 {
        return Ok(Some(SmallestRoot::Exact(mid)));
    }
    let right = left.taylor_shift_one().primitive();
    leftmost(&right, mid, b, depth + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int, rat_to_f64};

    fn poly(ints: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(ints.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn assert_bracket_around(res: Option<SmallestRoot>, want: f64) {
        match res.expect("root expected") {
            SmallestRoot::Exact(x) => assert!((rat_to_f64(&x) - want).abs() < 1e-12),
            SmallestRoot::Bracket(a, b) => {
                let (a, b) = (rat_to_f64(&a), rat_to_f64(&b));
                assert!(a < want && want < b, "want {want} in ({a}, {b})");
            }
        }
    }

    #[test]
    fn sign_evaluation() {
        let p = poly(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        assert_eq!(p.sign_at(&rat(1, 2)), -1);
        assert_eq!(p.sign_at(&rat(3, 2)), 1);
        assert_eq!(p.sign_at(&rat_int(2)), 0);
        assert_eq!(p.sign_at(&rat(7, 2)), 1);
    }

    #[test]
    fn simple_roots_found_in_order() {
        let p = poly(&[-6, 11, -6, 1]); // roots 1, 2, 3
        let r = smallest_root_in(&p, &rat_int(10)).unwrap();
        assert_bracket_around(r, 1.0);
        // none below the first root
        assert!(smallest_root_in(&p, &rat(9, 10)).unwrap().is_none());
    }

    #[test]
    fn exact_dyadic_root() {
        let p = poly(&[-1, 2]); // root 1/2
        let r = smallest_root_in(&p, &rat_int(1)).unwrap();
        match r.unwrap() {
            SmallestRoot::Exact(x) => assert_eq!(x, rat(1, 2)),
            SmallestRoot::Bracket(a, b) => {
                assert!(a < rat(1, 2) && rat(1, 2) < b);
            }
        }
    }

    #[test]
    fn thin_root_pair_is_resolved() {
        // (2^30·x - (2^30+1)) · (x-1)(x-2): roots 1, 1 + 2^-30, 2 give a
        // sign dip of width 2^-30 that point scanning cannot see
        let a = BigInt::from(1u64 << 30);
        let b = &a + BigInt::one();
        let p = IntPoly::from_coeffs(vec![
            BigInt::from(-2) * &b,
            &a * 2 + &b * 3,
            &a * (-3) - &b,
            a.clone(),
        ]);
        assert_eq!(p.sign_at(&rat_int(1)), 0);
        let r = smallest_root_in(&p, &rat_int(10)).unwrap();
        assert_bracket_around(r, 1.0);
    }

    #[test]
    fn no_roots_reports_none() {
        let p = poly(&[1, 0, 1]); // x^2 + 1
        assert!(smallest_root_in(&p, &rat_int(100)).unwrap().is_none());
    }
}
