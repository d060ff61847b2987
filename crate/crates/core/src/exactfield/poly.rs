//! Dense univariate polynomials in `h` over the Gaussian rationals.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros, so the zero polynomial is the empty vector and `degree` is
//! `None` exactly for zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::gaussian::GaussianRational;

/// A polynomial in `h` with `GaussianRational` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: GaussianRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The variable `h`.
    pub fn h() -> Self {
        Polynomial::new(vec![GaussianRational::zero(), GaussianRational::one()])
    }

    /// The linear factor `h - t`.
    pub fn h_minus(t: &GaussianRational) -> Self {
        Polynomial::new(vec![-t, GaussianRational::one()])
    }

    /// Ascending coefficients, without trailing zeros.
    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `h^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Leading coefficient, or `None` for zero.
    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    /// Evaluates at a point by Horner's rule.
    pub fn eval(&self, at: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &GaussianRational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u64) -> Self {
        let mut result = Polynomial::constant(GaussianRational::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        result
    }

    /// Quotient and remainder of division by `divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroDenominator)?;
        let d_lead = divisor.leading_coeff().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Polynomial::new(Vec::new()), self.clone()));
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let factor = &rem[k + d_deg] / &d_lead;
            if !factor.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&factor * dc);
                }
            }
            quot[k] = factor;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn try_exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic associate together with the leading coefficient taken out.
    pub fn monic(&self) -> (Polynomial, GaussianRational) {
        match self.leading_coeff() {
            None => (Polynomial::default(), GaussianRational::one()),
            Some(lead) => {
                let lead = lead.clone();
                let inv = lead.inv().expect("nonzero leading coefficient");
                (self.scale(&inv), lead)
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor in gcd loop");
            a = b;
            b = r;
        }
        a.monic().0
    }

    /// The composition `p(h + t)`, i.e. the Taylor shift by `t`.
    pub fn shift_variable(&self, t: &GaussianRational) -> Polynomial {
        let shifted_h = Polynomial::new(vec![t.clone(), GaussianRational::one()]);
        let mut acc = Polynomial::default();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shifted_h) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the constant polynomial one.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Self) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Self) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Self) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::default();
        }
        let mut out =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                out[j + k] = &out[j + k] + &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// True when a coefficient needs parentheses next to `*h^k`.
fn needs_parens(c: &GaussianRational) -> bool {
    !c.re().is_zero() && !c.im().is_zero()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let rendered = if needs_parens(c) {
                format!("({c})")
            } else {
                c.to_string()
            };
            if first {
                first = false;
            } else if !rendered.starts_with('-') {
                write!(f, "+")?;
            }
            match k {
                0 => write!(f, "{rendered}")?,
                _ => {
                    if rendered == "1" {
                        write!(f, "")?;
                    } else if rendered == "-1" {
                        write!(f, "-")?;
                    } else {
                        write!(f, "{rendered}*")?;
                    }
                    if k == 1 {
                        write!(f, "h")?;
                    } else {
                        write!(f, "h^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Polynomial::new(Vec::<GaussianRational>::deserialize(deserializer)?))
    }
}
