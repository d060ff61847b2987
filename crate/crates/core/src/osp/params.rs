//! Parameters of graded rank-one modules over osp(1|2).
//!
//! A module is a pair `(u, lambda)`: the scalar parameter `u` of the
//! underlying rank-one module over the width-1 shift, kept canonical in
//! the strip `Re in [0, 1)`, and the weight `lambda` entering the odd
//! generator's lowering coefficients. Restriction to the even subalgebra
//! produces two sl2-type modules at the doubled parameter
//! `u2 = u * sigma1(u)`, one per parity, which carry the central
//! characters `(lambda+1)^2` and `lambda^2`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactfield::{FactoredRatFun, GaussianRational};
use crate::skewlaurent::{canonical_rep, in_g_sigma, ShiftAut};
use crate::sl2::{socle_descriptor, Sl2Module, SocleDescriptor};

/// The step of the width-1 shift underlying the graded realization.
pub const OSP_STEP: i64 = -1;

/// The shift automorphism `h -> h - 1`.
pub fn osp_shift() -> ShiftAut {
    ShiftAut::from_int(OSP_STEP)
}

/// Parameters `(u, lambda)` of a graded rank-one module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OspParams {
    u: FactoredRatFun,
    lambda: GaussianRational,
}

impl OspParams {
    /// Wraps a parameter pair, reducing the roots of `u` into the strip
    /// `Re in [0, 1)`.
    pub fn new(u: FactoredRatFun, lambda: GaussianRational) -> Self {
        OspParams {
            u: canonical_rep(&u, &osp_shift(), &BigRational::zero()),
            lambda,
        }
    }

    /// The canonical scalar parameter.
    pub fn u(&self) -> &FactoredRatFun {
        &self.u
    }

    /// The weight entering the odd lowering coefficients.
    pub fn lambda(&self) -> &GaussianRational {
        &self.lambda
    }

    /// Normalizes the sign class `{c, -c}` of the leading constant: keeps
    /// the representative with positive real part, or positive imaginary
    /// part when the real part vanishes.
    pub fn sign_normalized(&self) -> Self {
        let c = self.u.c();
        let keep = if c.re().is_zero() { !c.im().is_negative() } else { !c.re().is_negative() };
        if keep {
            self.clone()
        } else {
            OspParams { u: self.u.negate(), lambda: self.lambda.clone() }
        }
    }

    /// The parity-changed module: the same `u` with weight `-lambda - 1`.
    pub fn parity_change(&self) -> Self {
        let minus_one = GaussianRational::from_int(-1);
        OspParams {
            u: self.u.clone(),
            lambda: &(-&self.lambda) + &minus_one,
        }
    }

    /// The doubled parameter `u * sigma1(u)` governing the even and odd
    /// parts as modules over the width-2 shift.
    pub fn doubled_u(&self) -> FactoredRatFun {
        self.u.mul(&osp_shift().apply_factored(&self.u, 1))
    }

    /// Restriction data: the doubled parameter paired with the central
    /// character of each parity, `(lambda+1)^2` for even, `lambda^2` for
    /// odd.
    pub fn restrict_to_sl2(
        &self,
    ) -> ((FactoredRatFun, GaussianRational), (FactoredRatFun, GaussianRational)) {
        let u2 = self.doubled_u();
        let lam = &self.lambda;
        let one = GaussianRational::from_int(1);
        let even_char = {
            let s = lam + &one;
            &s * &s
        };
        let odd_char = lam * lam;
        ((u2.clone(), even_char), (u2, odd_char))
    }

    /// The even-parity restriction as an sl2-type module (root parameter
    /// `lambda`).
    pub fn even_restriction(&self) -> Sl2Module {
        Sl2Module::from_r1(self.lambda.clone(), self.doubled_u())
    }

    /// The odd-parity restriction as an sl2-type module (root parameter
    /// `lambda - 1`).
    pub fn odd_restriction(&self) -> Sl2Module {
        let minus_one = GaussianRational::from_int(-1);
        Sl2Module::from_r1(&self.lambda + &minus_one, self.doubled_u())
    }

    /// Socle descriptors of the even and odd parts, computed through the
    /// restriction.
    pub fn graded_socle_descriptor(&self) -> (SocleDescriptor, SocleDescriptor) {
        (
            socle_descriptor(&self.even_restriction()),
            socle_descriptor(&self.odd_restriction()),
        )
    }

    /// Graded isomorphism: the weights must agree and the parameter
    /// quotient must be a shift coboundary up to sign.
    pub fn graded_iso(&self, other: &OspParams) -> bool {
        if self.lambda != other.lambda {
            return false;
        }
        let q = other.u.div(&self.u);
        in_g_sigma(&q, &osp_shift()) || in_g_sigma(&q.negate(), &osp_shift())
    }
}

#[derive(Serialize, Deserialize)]
struct OspParamsRepr {
    u: FactoredRatFun,
    lambda: GaussianRational,
}

impl Serialize for OspParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        OspParamsRepr { u: self.u.clone(), lambda: self.lambda.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OspParams {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = OspParamsRepr::deserialize(deserializer)?;
        Ok(OspParams::new(repr.u, repr.lambda))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn roots_reduce_into_the_width_one_strip() {
        let p = OspParams::new(FactoredRatFun::from_root(gi(3), 1), gi(0));
        assert_eq!(p.u(), &FactoredRatFun::from_root(gi(0), 1));
        let q = OspParams::new(
            FactoredRatFun::from_root(GaussianRational::from_ratio(-3, 2), 2),
            gi(0),
        );
        assert_eq!(
            q.u(),
            &FactoredRatFun::from_root(GaussianRational::from_ratio(1, 2), 2)
        );
    }

    #[test]
    fn doubling_duplicates_each_root_one_step_up() {
        let p = OspParams::new(
            FactoredRatFun::from_root(GaussianRational::from_ratio(1, 2), 1),
            gi(0),
        );
        let u2 = p.doubled_u();
        assert_eq!(u2.exponent(&GaussianRational::from_ratio(1, 2)), 1);
        assert_eq!(u2.exponent(&GaussianRational::from_ratio(3, 2)), 1);
        assert!(GaussianRational::one() == u2.c().clone() || u2.factors().len() == 2);

        let constant = OspParams::new(
            FactoredRatFun::from_parts(gi(3), []).unwrap(),
            gi(0),
        );
        assert_eq!(
            constant.doubled_u(),
            FactoredRatFun::from_parts(gi(9), []).unwrap()
        );
    }

    #[test]
    fn central_characters_follow_the_weight() {
        let p = OspParams::new(FactoredRatFun::one(), gi(0));
        let ((_, even), (_, odd)) = p.restrict_to_sl2();
        assert_eq!((even, odd), (gi(1), gi(0)));
        let q = OspParams::new(FactoredRatFun::one(), gi(1));
        let ((_, even), (_, odd)) = q.restrict_to_sl2();
        assert_eq!((even, odd), (gi(4), gi(1)));
    }

    #[test]
    fn parity_change_is_involutive_up_to_isomorphism() {
        let p = OspParams::new(FactoredRatFun::from_root(gi(0), 1), gi(0));
        let flipped = p.parity_change();
        assert_eq!(flipped.lambda(), &gi(-1));
        assert!(!p.graded_iso(&flipped));
        assert!(p.graded_iso(&flipped.parity_change()));

        let ((_, even), _) = p.restrict_to_sl2();
        let (_, (_, odd_flipped)) = flipped.restrict_to_sl2();
        assert_eq!(even, odd_flipped, "characters swap under parity change");
    }

    #[test]
    fn graded_iso_ignores_the_sign_of_u() {
        let u = FactoredRatFun::from_root(GaussianRational::from_ratio(1, 2), 1);
        let p = OspParams::new(u.clone(), gi(2));
        let q = OspParams::new(u.negate(), gi(2));
        assert!(p.graded_iso(&q));
        assert!(!p.graded_iso(&OspParams::new(u.clone(), gi(0))));
        assert!(!p.graded_iso(&OspParams::new(u.mul(&u), gi(2))));
    }

    #[test]
    fn sign_normalization_is_deterministic() {
        let u = FactoredRatFun::from_parts(gi(-2), [(gi(0), 1)]).unwrap();
        let p = OspParams::new(u, gi(0)).sign_normalized();
        assert_eq!(p.u().c(), &gi(2));
        let imag = FactoredRatFun::from_parts(
            GaussianRational::new(BigRational::zero(), BigRational::from_integer((-3).into())),
            [],
        )
        .unwrap();
        let q = OspParams::new(imag, gi(0)).sign_normalized();
        assert_eq!(q.u().c(), &GaussianRational::new(
            BigRational::zero(),
            BigRational::from_integer(3.into()),
        ));
    }
}
