//! Reduced rational functions in `h` over the Gaussian rationals.
//!
//! Every value keeps its denominator monic and coprime to the numerator,
//! so equality is plain structural equality and display forms are stable.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::gaussian::GaussianRational;
use crate::exactfield::poly::Polynomial;

/// A quotient of polynomials in lowest terms with a monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Polynomial,
    den: Polynomial,
}

impl RatFun {
    /// Builds `num / den` and reduces; fails when `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let g = num.gcd(&den);
        let num = num.try_exact_div(&g).expect("gcd divides numerator");
        let den = den.try_exact_div(&g).expect("gcd divides denominator");
        let (den, lead) = den.monic();
        let lead_inv = lead.inv().expect("nonzero leading coefficient");
        Ok(RatFun { num: num.scale(&lead_inv), den })
    }

    /// Embeds a polynomial.
    pub fn from_poly(num: Polynomial) -> Self {
        RatFun { num, den: Polynomial::constant(GaussianRational::one()) }
    }

    /// The constant function `c`.
    pub fn constant(c: GaussianRational) -> Self {
        RatFun::from_poly(Polynomial::constant(c))
    }

    /// The zero function.
    pub fn zero() -> Self {
        RatFun::from_poly(Polynomial::default())
    }

    /// The constant function one.
    pub fn one() -> Self {
        RatFun::from_poly(Polynomial::constant(GaussianRational::one()))
    }

    /// The coordinate function `h`.
    pub fn h() -> Self {
        RatFun::from_poly(Polynomial::h())
    }

    /// Numerator in lowest terms.
    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    /// Monic denominator in lowest terms.
    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// True for the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True for the constant function one.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying polynomial when the denominator is trivial.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_one().then_some(&self.num)
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Integer power, allowing negative exponents on nonzero functions.
    pub fn pow_i64(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut result = RatFun::one();
        for _ in 0..n.unsigned_abs() {
            result = &result * &base;
        }
        Ok(result)
    }

    /// Evaluates at a point, or `None` on a pole.
    pub fn eval(&self, at: &GaussianRational) -> Option<GaussianRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(at) / &d)
    }

    /// The composition `f(h + t)`.
    pub fn shift_variable(&self, t: &GaussianRational) -> Self {
        RatFun::new(self.num.shift_variable(t), self.den.shift_variable(t))
            .expect("shift preserves a nonzero denominator")
    }
}

impl Add for &RatFun {
    type Output = RatFun;

    fn add(self, rhs: Self) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;

    fn sub(self, rhs: Self) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;

    fn mul(self, rhs: Self) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Div for &RatFun {
    type Output = RatFun;

    /// Panics on division by zero; use [`RatFun::inv`] to check first.
    fn div(self, rhs: Self) -> RatFun {
        let inv = rhs.inv().expect("division by zero rational function");
        self * &inv
    }
}

impl Neg for &RatFun {
    type Output = RatFun;

    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: Self) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: Self) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: Self) -> RatFun {
        &self * &rhs
    }
}

impl Div for RatFun {
    type Output = RatFun;
    fn div(self, rhs: Self) -> RatFun {
        &self / &rhs
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RatFunRepr {
    num: Polynomial,
    den: Polynomial,
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunRepr { num: self.num.clone(), den: self.den.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RatFunRepr::deserialize(deserializer)?;
        RatFun::new(repr.num, repr.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&n| gi(n)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn construction_reduces_and_normalizes() {
        let f = rf(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(f.num(), &p(&[1, 1]).scale(&GaussianRational::from_ratio(1, 2)));
        assert_eq!(f.den(), &p(&[1]));
        assert!(RatFun::new(p(&[1]), p(&[0])).is_err());
    }

    #[test]
    fn field_operations() {
        let a = rf(&[1], &[-1, 1]);
        let b = rf(&[1], &[-2, 1]);
        let sum = &a + &b;
        assert_eq!(sum, rf(&[-3, 2], &[2, -3, 1]));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(a.pow_i64(-2).unwrap(), rf(&[1, -2, 1], &[1]));
        assert!(RatFun::zero().inv().is_err());
    }

    #[test]
    fn evaluation_detects_poles() {
        let f = rf(&[1], &[-1, 1]);
        assert_eq!(f.eval(&gi(3)).unwrap(), GaussianRational::from_ratio(1, 2));
        assert!(f.eval(&gi(1)).is_none());
    }

    #[test]
    fn variable_shift() {
        let f = rf(&[0, 1], &[-1, 1]);
        let shifted = f.shift_variable(&gi(-2));
        assert_eq!(shifted, rf(&[-2, 1], &[-3, 1]));
    }

    #[test]
    fn serde_round_trip() {
        let f = rf(&[1, 2], &[-3, 0, 1]);
        let json = serde_json::to_string(&f).unwrap();
        let back: RatFun = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        let reduced: RatFun = serde_json::from_str(
            "{\"num\":[\"2\",\"2\"],\"den\":[\"2\"]}",
        )
        .unwrap();
        assert_eq!(reduced, rf(&[1, 1], &[1]));
    }
}
