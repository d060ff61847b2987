//! The rank-one module attached to a parameter `u`.
//!
//! Elements live in the coefficient field and `x` acts twisted by the
//! shift: `x . v = sigma(v) u` and `x^{-1} . v = sigma^{-1}(v) / sigma^{-1}(u)`.
//! Elements are kept in partial-fraction form so pole patterns are read
//! off directly.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactfield::{FactoredRatFun, PartialFraction};
use crate::skewlaurent::gsigma::{canonical_rep, in_g_sigma};
use crate::skewlaurent::shift::ShiftAut;

/// A rank-one module over a skew Laurent ring, given by its parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneModule {
    shift: ShiftAut,
    u: FactoredRatFun,
}

impl RankOneModule {
    /// Wraps a parameter; any nonzero factored function is allowed.
    pub fn new(shift: ShiftAut, u: FactoredRatFun) -> Self {
        RankOneModule { shift, u }
    }

    /// The shift automorphism.
    pub fn shift(&self) -> &ShiftAut {
        &self.shift
    }

    /// The parameter `u`.
    pub fn u(&self) -> &FactoredRatFun {
        &self.u
    }

    /// The action of `x`.
    pub fn x_act(&self, v: &PartialFraction) -> PartialFraction {
        self.shift.apply_partial(v, 1).mul_factored(&self.u)
    }

    /// The action of `x^{-1}`.
    pub fn x_inv_act(&self, v: &PartialFraction) -> PartialFraction {
        self.shift
            .apply_partial(v, -1)
            .mul_factored(&self.shift.apply_factored(&self.u, -1).inv())
    }

    /// The action of `x^n` for any integer `n`.
    pub fn x_pow_act(&self, v: &PartialFraction, n: i64) -> PartialFraction {
        let mut out = v.clone();
        for _ in 0..n.unsigned_abs() {
            out = if n > 0 { self.x_act(&out) } else { self.x_inv_act(&out) };
        }
        out
    }

    /// Whether this module and `other` are isomorphic, i.e. whether the
    /// quotient of parameters is a shift coboundary.
    pub fn is_isomorphic(&self, other: &RankOneModule) -> Result<bool> {
        if self.shift != other.shift {
            return Err(Error::MismatchedShift);
        }
        Ok(in_g_sigma(&other.u.div(&self.u), &self.shift))
    }

    /// The canonical parameter with all roots moved into the strip
    /// starting at `omega`.
    pub fn canonical_u(&self, omega: &BigRational) -> FactoredRatFun {
        canonical_rep(&self.u, &self.shift, omega)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{GaussianRational, Polynomial};

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn module(root: i64, exp: i64) -> RankOneModule {
        RankOneModule::new(ShiftAut::from_int(-2), FactoredRatFun::from_root(gi(root), exp))
    }

    #[test]
    fn x_action_on_the_generator() {
        let m = module(3, 1);
        let one = PartialFraction::from_poly(Polynomial::constant(gi(1)));
        let image = m.x_act(&one);
        assert_eq!(image, PartialFraction::from_poly(Polynomial::h_minus(&gi(3))));
    }

    #[test]
    fn inverse_action_divides_by_the_shifted_parameter() {
        let m = module(3, 1);
        let one = PartialFraction::from_poly(Polynomial::constant(gi(1)));
        let image = m.x_inv_act(&one);
        assert_eq!(image, PartialFraction::from_pole(gi(1), 1, gi(1)));
    }

    #[test]
    fn x_round_trips() {
        let m = module(3, 2);
        let v = PartialFraction::from_pole(gi(1), 2, gi(7));
        assert_eq!(m.x_inv_act(&m.x_act(&v)), v);
        assert_eq!(m.x_act(&m.x_inv_act(&v)), v);
        assert_eq!(m.x_pow_act(&v, 3), m.x_act(&m.x_act(&m.x_act(&v))));
    }

    #[test]
    fn isomorphism_follows_the_coboundary_group() {
        let a = module(3, 1);
        let b = module(9, 1);
        let c = module(4, 1);
        assert!(a.is_isomorphic(&b).unwrap());
        assert!(!a.is_isomorphic(&c).unwrap());
        let other = RankOneModule::new(ShiftAut::from_int(-1), a.u().clone());
        assert_eq!(a.is_isomorphic(&other), Err(Error::MismatchedShift));
    }
}
