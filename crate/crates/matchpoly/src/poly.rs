//! Dense univariate polynomials over Q and over Q(i).
//!
//! Coefficients are stored low to high with no trailing zeros; the zero
//! polynomial is the empty vector. Everything here is exact.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{display_rational, format_rational, parse_rational, GaussianRational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPolynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalPolynomial::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        RationalPolynomial::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// x - c, the ubiquitous linear factor.
    pub fn x_minus(c: &Rational) -> Self {
        RationalPolynomial::from_coeffs(vec![-c.clone(), Rational::one()])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        RationalPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^k, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        RationalPolynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        RationalPolynomial::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        RationalPolynomial::from_coeffs(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalPolynomial::zero();
        }
        RationalPolynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// self * (x - c) without building the factor.
    pub fn times_x_minus(&self, c: &Rational) -> Self {
        if self.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[k + 1] += a;
            out[k] -= a * c;
        }
        RationalPolynomial::from_coeffs(out)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = RationalPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RationalPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * Rational::from_integer(BigInt::from(k)))
            .collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Taylor shift: returns q with q(x) = self(x + c), exactly.
    pub fn shift(&self, c: &Rational) -> Self {
        let mut acc = RationalPolynomial::zero();
        for a in self.coeffs.iter().rev() {
            // acc <- acc * (x + c) + a
            acc = acc.times_x_minus(&-c.clone());
            acc = acc.add(&RationalPolynomial::constant(a.clone()));
        }
        acc
    }

    /// Euclidean division by a nonzero divisor: self = q * d + r with
    /// deg r < deg d.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::input("polynomial division by zero"));
        }
        let dd = d.coeffs.len() - 1;
        let lead_inv = d.coeffs.last().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    let t = &factor * b;
                    rem[k + j] -= t;
                }
                quot[k] = factor;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        Ok((RationalPolynomial::from_coeffs(quot), RationalPolynomial::from_coeffs(rem)))
    }

    /// Division known to be exact; nonzero remainder is an internal error.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::internal("expected exact polynomial division"));
        }
        Ok(q)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => RationalPolynomial::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Scale by a positive rational so coefficients become coprime integers.
    /// The sign pattern is preserved, which is what Sturm chains need.
    pub fn primitive_scaled(&self) -> Self {
        if self.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        RationalPolynomial {
            coeffs: ints.into_iter().map(|v| Rational::from_integer(v / &g)).collect(),
        }
    }

    /// Monic gcd. Errors only when both inputs are zero.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::input("gcd of two zero polynomials"));
        }
        let mut f = a.primitive_scaled();
        let mut g = b.primitive_scaled();
        while !g.is_zero() {
            let (_, r) = f.divrem(&g)?;
            f = g;
            g = r.primitive_scaled();
        }
        Ok(f.monic())
    }

    /// Low-to-high `p/q` strings, the JSON interchange form.
    pub fn to_fraction_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0/1".to_string()];
        }
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_fraction_strings(strings: &[String]) -> Result<Self> {
        let coeffs = strings.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        Ok(RationalPolynomial::from_coeffs(coeffs))
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = if mag.is_one() && k > 0 {
                String::new()
            } else if mag.denom().is_one() || k == 0 {
                display_rational(&mag)
            } else {
                format!("({})", display_rational(&mag))
            };
            match k {
                0 => write!(f, "{coeff_str}")?,
                1 => write!(f, "{coeff_str}x")?,
                _ => write!(f, "{coeff_str}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial over Q(i). Only what characteristic-polynomial interpolation
/// needs: ring ops, evaluation, and the lossless narrowing to Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianPolynomial {
    coeffs: Vec<GaussianRational>,
}

impl GaussianPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        GaussianPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        GaussianPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        GaussianPolynomial::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = GaussianRational::zero();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = rhs.coeffs.get(k).unwrap_or(&zero);
            out.push(a + b);
        }
        GaussianPolynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return GaussianPolynomial::zero();
        }
        GaussianPolynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// self * (x - c).
    pub fn times_x_minus(&self, c: &GaussianRational) -> Self {
        if self.is_zero() {
            return GaussianPolynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[k + 1] = &out[k + 1] + a;
            out[k] = &out[k] - &(a * c);
        }
        GaussianPolynomial::from_coeffs(out)
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// Narrow to a rational polynomial; any nonzero imaginary coefficient is
    /// reported (the caller decides how fatal that is).
    pub fn to_rational(&self) -> std::result::Result<RationalPolynomial, usize> {
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_real() {
                return Err(k);
            }
        }
        Ok(RationalPolynomial::from_coeffs(
            self.coeffs.iter().map(|c| c.re().clone()).collect(),
        ))
    }
}
