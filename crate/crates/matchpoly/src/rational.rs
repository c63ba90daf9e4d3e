//! Exact scalar types: arbitrary-precision rationals and Gaussian rationals.
//!
//! `Rational` is `num::BigRational`, which already maintains the canonical
//! form we rely on everywhere (lowest terms, positive denominator). Fraction
//! strings are the interchange format: always `p/q` on output, `p` or `p/q`
//! accepted on input.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational p/q. `q` must be nonzero; this is a construction helper for
/// tests, demos, and examples, not a parser.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "rat() with zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse a fraction string: optional sign, decimal integer, optional `/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p = BigInt::from_str(num_str)
        .map_err(|_| Error::input(format!("malformed fraction {s:?}: bad numerator")))?;
    let q = BigInt::from_str(den_str)
        .map_err(|_| Error::input(format!("malformed fraction {s:?}: bad denominator")))?;
    if q.is_zero() {
        return Err(Error::input(format!("malformed fraction {s:?}: zero denominator")));
    }
    Ok(Rational::new(p, q))
}

/// Canonical `p/q` form, denominator always present and positive.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human form: bare integer when the denominator is 1.
pub fn display_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Element of Q(i). Exact complex arithmetic for edge weights and
/// Hermitian matrix entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    /// Integer pair shorthand, mostly for tests and demo graphs.
    pub fn of(re: i64, im: i64) -> Self {
        GaussianRational { re: rat_int(re), im: rat_int(im) }
    }

    pub fn zero() -> Self {
        GaussianRational::of(0, 0)
    }

    pub fn one() -> Self {
        GaussianRational::of(1, 0)
    }

    pub fn i() -> Self {
        GaussianRational::of(0, 1)
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|^2 = re^2 + im^2, always a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero; callers guard (pivot search
    /// never selects a zero entry).
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero Gaussian rational");
        let n = self.norm_sqr();
        GaussianRational { re: &self.re / &n, im: -&self.im / &n }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", display_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", display_rational(&self.im));
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", display_rational(&self.re), display_rational(&-self.im.clone()))
        } else {
            write!(f, "{}+{}i", display_rational(&self.re), display_rational(&self.im))
        }
    }
}
