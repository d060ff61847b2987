//! Exact arithmetic in the Gaussian rationals `Q(i)`.
//!
//! A value is stored as a pair of arbitrary-precision rationals, so every
//! operation is exact. The derived ordering compares real parts first and
//! imaginary parts second; it is not compatible with the field structure
//! but gives the deterministic total order the rest of the crate relies on
//! for canonical forms and stable iteration.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `Q(i)`, kept as exact real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    /// Builds a value from its real and imaginary parts.
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    /// The rational `n`.
    pub fn from_int(n: i64) -> Self {
        GaussianRational::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The rational `n/d`; panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        GaussianRational::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Embeds a real rational.
    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    /// Real part.
    pub fn re(&self) -> &BigRational {
        &self.re
    }

    /// Imaginary part.
    pub fn im(&self) -> &BigRational {
        &self.im
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// The rational `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// True when the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The real part viewed as a rational, if the value is real.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_real() {
            Some(&self.re)
        } else {
            None
        }
    }

    /// Multiplicative inverse, or an error on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let n = self.norm();
        Ok(GaussianRational { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Sum of `self` and an integer, handy for root shifting.
    pub fn add_int(&self, n: i64) -> Self {
        GaussianRational {
            re: &self.re + BigRational::from_integer(BigInt::from(n)),
            im: self.im.clone(),
        }
    }

    /// Sum of `self` and a real rational.
    pub fn add_rational(&self, r: &BigRational) -> Self {
        GaussianRational { re: &self.re + r, im: self.im.clone() }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational { re: BigRational::one(), im: BigRational::zero() }
    }

    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;

    /// Panics on division by zero; use [`GaussianRational::inv`] to check.
    fn div(self, rhs: Self) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero Gaussian rational");
        self * &inv
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
    fn add(self, rhs: Self) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        &self * &rhs
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: Self) -> GaussianRational {
        &self / &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

/// Writes one rational coefficient of `i`, assuming it is positive.
fn write_positive_imaginary(f: &mut fmt::Formatter<'_>, im: &BigRational) -> fmt::Result {
    if im.is_one() {
        write!(f, "i")
    } else {
        write!(f, "{im}*i")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-")?;
            }
            return write_positive_imaginary(f, &self.im.abs());
        }
        write!(f, "{}", self.re)?;
        write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
        write_positive_imaginary(f, &self.im.abs())
    }
}

/// Parses one signed term: either a rational or a rational multiple of `i`.
fn parse_term(term: &str) -> Result<GaussianRational> {
    let bad = || Error::Parse(format!("invalid Gaussian rational term `{term}`"));
    if let Some(coeff) = term.strip_suffix('i') {
        let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
        let im = match coeff {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => BigRational::from_str(other).map_err(|_| bad())?,
        };
        Ok(GaussianRational::new(BigRational::zero(), im))
    } else {
        let re = BigRational::from_str(term).map_err(|_| bad())?;
        Ok(GaussianRational::from_rational(re))
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `a`, `a/b`, `c*i`, `i`, `-i`, and sums such as `1/2-3/4*i`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty Gaussian rational".into()));
        }
        let mut split = None;
        for (idx, c) in compact.char_indices() {
            if idx > 0 && (c == '+' || c == '-') {
                if split.is_some() {
                    return Err(Error::Parse(format!("too many terms in `{s}`")));
                }
                split = Some(idx);
            }
        }
        match split {
            None => parse_term(&compact),
            Some(idx) => {
                let first = parse_term(&compact[..idx])?;
                let second = parse_term(&compact[idx..])?;
                Ok(&first + &second)
            }
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

struct GaussianVisitor;

impl Visitor<'_> for GaussianVisitor {
    type Value = GaussianRational;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a Gaussian rational string such as \"1/2+3*i\" or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
        v.parse().map_err(|e: Error| E::custom(e.to_string()))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Self::Value, E> {
        Ok(GaussianRational::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Self::Value, E> {
        Ok(GaussianRational::from_rational(BigRational::from_integer(BigInt::from(v))))
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(GaussianVisitor)
    }
}
