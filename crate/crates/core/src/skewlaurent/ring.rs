//! The skew Laurent ring `Q(i)(h)[x, x^{-1}; sigma]`.
//!
//! Elements are finite sums `sum_i p_i x^i` with rational-function
//! coefficients, subject to the commutation rule `x f = sigma(f) x`.
//! The ring is where operator identities (commutators, Casimir-style
//! elements) are checked exactly, independent of any module.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{GaussianRational, Polynomial, RatFun};
use crate::skewlaurent::shift::ShiftAut;

/// An element `sum_i p_i x^i` of the skew Laurent ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewLaurent {
    shift: ShiftAut,
    coeffs: BTreeMap<i64, RatFun>,
}

impl SkewLaurent {
    /// The zero element.
    pub fn zero(shift: ShiftAut) -> Self {
        SkewLaurent { shift, coeffs: BTreeMap::new() }
    }

    /// A scalar `p x^0`.
    pub fn scalar(shift: ShiftAut, p: RatFun) -> Self {
        SkewLaurent::monomial(shift, p, 0)
    }

    /// The identity element.
    pub fn one(shift: ShiftAut) -> Self {
        SkewLaurent::scalar(shift, RatFun::one())
    }

    /// The coefficient function `h`.
    pub fn h(shift: ShiftAut) -> Self {
        SkewLaurent::scalar(shift, RatFun::h())
    }

    /// The generator `x`.
    pub fn x(shift: ShiftAut) -> Self {
        SkewLaurent::monomial(shift, RatFun::one(), 1)
    }

    /// The generator `x^{-1}`.
    pub fn x_inv(shift: ShiftAut) -> Self {
        SkewLaurent::monomial(shift, RatFun::one(), -1)
    }

    /// The monomial `p x^degree`.
    pub fn monomial(shift: ShiftAut, p: RatFun, degree: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !p.is_zero() {
            coeffs.insert(degree, p);
        }
        SkewLaurent { shift, coeffs }
    }

    /// The underlying shift automorphism.
    pub fn shift(&self) -> &ShiftAut {
        &self.shift
    }

    /// Coefficient of `x^degree` (zero when absent).
    pub fn coeff(&self, degree: i64) -> RatFun {
        self.coeffs.get(&degree).cloned().unwrap_or_else(RatFun::zero)
    }

    /// Degrees with nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs.keys().copied()
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_shift(&self, other: &SkewLaurent) -> Result<()> {
        if self.shift != other.shift {
            return Err(Error::MismatchedShift);
        }
        Ok(())
    }

    /// Sum of two elements over the same shift.
    pub fn add(&self, other: &SkewLaurent) -> Result<SkewLaurent> {
        self.check_shift(other)?;
        let mut coeffs = self.coeffs.clone();
        for (deg, p) in &other.coeffs {
            let entry = coeffs.entry(*deg).or_insert_with(RatFun::zero);
            *entry = &*entry + p;
            if entry.is_zero() {
                coeffs.remove(deg);
            }
        }
        Ok(SkewLaurent { shift: self.shift.clone(), coeffs })
    }

    /// Negation.
    pub fn neg(&self) -> SkewLaurent {
        SkewLaurent {
            shift: self.shift.clone(),
            coeffs: self.coeffs.iter().map(|(d, p)| (*d, -p)).collect(),
        }
    }

    /// Difference of two elements over the same shift.
    pub fn sub(&self, other: &SkewLaurent) -> Result<SkewLaurent> {
        self.add(&other.neg())
    }

    /// Product, using `x^i q = sigma^i(q) x^i`.
    pub fn mul(&self, other: &SkewLaurent) -> Result<SkewLaurent> {
        self.check_shift(other)?;
        let mut coeffs: BTreeMap<i64, RatFun> = BTreeMap::new();
        for (i, p) in &self.coeffs {
            for (j, q) in &other.coeffs {
                let term = p * &self.shift.apply_ratfun(q, *i);
                let entry = coeffs.entry(i + j).or_insert_with(RatFun::zero);
                *entry = &*entry + &term;
            }
        }
        coeffs.retain(|_, p| !p.is_zero());
        Ok(SkewLaurent { shift: self.shift.clone(), coeffs })
    }

    /// Left multiplication by a scalar function.
    pub fn scale(&self, p: &RatFun) -> SkewLaurent {
        if p.is_zero() {
            return SkewLaurent::zero(self.shift.clone());
        }
        SkewLaurent {
            shift: self.shift.clone(),
            coeffs: self.coeffs.iter().map(|(d, q)| (*d, p * q)).collect(),
        }
    }

    /// Scalar multiple by a constant.
    pub fn scale_const(&self, c: &GaussianRational) -> SkewLaurent {
        self.scale(&RatFun::constant(c.clone()))
    }

    /// `self^n` for nonnegative `n`.
    pub fn pow(&self, n: u32) -> Result<SkewLaurent> {
        let mut out = SkewLaurent::one(self.shift.clone());
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// The commutator `self * other - other * self`.
    pub fn commutator(&self, other: &SkewLaurent) -> Result<SkewLaurent> {
        self.mul(other)?.sub(&other.mul(self)?)
    }
}

impl fmt::Display for SkewLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, p) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p})*x")?,
                d => write!(f, "({p})*x^{d}")?,
            }
        }
        Ok(())
    }
}

/// The scalar `h - t` as a ring element, a convenience for tests and the
/// closure oracle's multiplication generators.
pub fn h_minus(shift: ShiftAut, t: &GaussianRational) -> SkewLaurent {
    SkewLaurent::scalar(shift, RatFun::from_poly(Polynomial::h_minus(t)))
}
