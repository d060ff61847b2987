//! The shift automorphism `sigma(f)(h) = f(h + delta)` of `Q(i)(h)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactfield::{FactoredRatFun, GaussianRational, PartialFraction, RatFun};

/// A field automorphism determined by a nonzero real step `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftAut {
    delta: BigRational,
}

impl ShiftAut {
    /// Builds the shift by `delta`; fails on zero.
    pub fn new(delta: BigRational) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::InvalidParameter("shift step must be nonzero".into()));
        }
        Ok(ShiftAut { delta })
    }

    /// Builds the shift by a nonzero integer step.
    pub fn from_int(delta: i64) -> Self {
        ShiftAut::new(BigRational::from_integer(BigInt::from(delta)))
            .expect("nonzero integer step")
    }

    /// The step.
    pub fn delta(&self) -> &BigRational {
        &self.delta
    }

    /// The step's absolute value, the width of a fundamental strip.
    pub fn width(&self) -> BigRational {
        self.delta.abs()
    }

    /// The substitution amount of `sigma^power`, as a field element.
    pub fn amount(&self, power: i64) -> GaussianRational {
        GaussianRational::from_rational(&self.delta * BigRational::from_integer(BigInt::from(power)))
    }

    /// `sigma^power` applied to a rational function.
    pub fn apply_ratfun(&self, f: &RatFun, power: i64) -> RatFun {
        f.shift_variable(&self.amount(power))
    }

    /// `sigma^power` applied to a factored function; roots move by `-power * delta`.
    pub fn apply_factored(&self, f: &FactoredRatFun, power: i64) -> FactoredRatFun {
        f.substitute_shift(&self.amount(power))
    }

    /// `sigma^power` applied to a partial-fraction expansion.
    pub fn apply_partial(&self, f: &PartialFraction, power: i64) -> PartialFraction {
        f.substitute_shift(&self.amount(power))
    }

    /// The integer `k` with `to = from + k * delta`, if one exists.
    pub fn steps_between(
        &self,
        from: &GaussianRational,
        to: &GaussianRational,
    ) -> Option<i64> {
        if from.im() != to.im() {
            return None;
        }
        let k = (to.re() - from.re()) / &self.delta;
        k.is_integer().then(|| k.to_integer().to_i64().expect("orbit step fits in i64"))
    }

    /// True when two points lie on the same `delta`-translation orbit.
    pub fn orbit_equivalent(&self, a: &GaussianRational, b: &GaussianRational) -> bool {
        self.steps_between(a, b).is_some()
    }

    /// The point `base + k * delta`.
    pub fn translate(&self, base: &GaussianRational, k: i64) -> GaussianRational {
        base.add_rational(&(&self.delta * BigRational::from_integer(BigInt::from(k))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Polynomial;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn rejects_zero_step() {
        assert!(ShiftAut::new(BigRational::zero()).is_err());
    }

    #[test]
    fn applies_powers_to_functions() {
        let shift = ShiftAut::from_int(-2);
        let f = RatFun::new(
            Polynomial::h(),
            Polynomial::h_minus(&gi(1)),
        )
        .unwrap();
        let moved = shift.apply_ratfun(&f, 1);
        assert_eq!(
            moved,
            RatFun::new(
                Polynomial::h_minus(&gi(2)),
                Polynomial::h_minus(&gi(3)),
            )
            .unwrap()
        );
        let back = shift.apply_ratfun(&moved, -1);
        assert_eq!(back, f);
    }

    #[test]
    fn factored_roots_move_against_the_step() {
        let shift = ShiftAut::from_int(-2);
        let f = FactoredRatFun::from_root(gi(3), 2);
        let image = shift.apply_factored(&f, 1);
        assert_eq!(image.exponent(&gi(5)), 2);
        let inverse = shift.apply_factored(&f, -1);
        assert_eq!(inverse.exponent(&gi(1)), 2);
    }

    #[test]
    fn orbit_steps() {
        let shift = ShiftAut::from_int(-2);
        assert_eq!(shift.steps_between(&gi(3), &gi(-1)), Some(2));
        assert_eq!(shift.steps_between(&gi(3), &gi(4)), None);
        assert_eq!(
            shift.steps_between(&GaussianRational::i(), &gi(1)),
            None
        );
        assert_eq!(shift.translate(&gi(3), 2), gi(-1));
        let one_step = ShiftAut::from_int(-1);
        assert_eq!(one_step.steps_between(&gi(0), &gi(-5)), Some(5));
    }
}
