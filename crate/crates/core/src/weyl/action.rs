//! Rank-one modules over the first Weyl algebra.
//!
//! The two generators satisfy `ab - ba = 1` and are realized over the
//! shift of step `-2` as `a = x` and `b = -((h+2)/2) x^{-1}`, so that
//! `-2ab` is multiplication by `h`. A module is a canonical parameter `u`
//! with roots reduced into the strip `Re in [0, 2)`; the generator `a`
//! raises along the shift, `b` lowers and picks up the factor that makes
//! the commutation relation exact.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactfield::{FactoredRatFun, GaussianRational, PartialFraction, Polynomial, RatFun};
use crate::skewlaurent::{canonical_rep, in_g_sigma, RankOneModule, ShiftAut, SkewLaurent};

/// The step of the shift automorphism underlying the realization.
pub const WEYL_STEP: i64 = -2;

/// The shift automorphism `h -> h - 2`.
pub fn weyl_shift() -> ShiftAut {
    ShiftAut::from_int(WEYL_STEP)
}

/// The raising generator as a ring element: `x`.
pub fn ring_a() -> SkewLaurent {
    SkewLaurent::x(weyl_shift())
}

/// The lowering generator as a ring element: `-((h+2)/2) x^{-1}`.
pub fn ring_b() -> SkewLaurent {
    let coeff = RatFun::from_poly(
        Polynomial::h_minus(&GaussianRational::from_int(-2))
            .scale(&GaussianRational::from_ratio(-1, 2)),
    );
    SkewLaurent::monomial(weyl_shift(), coeff, -1)
}

/// The scalar carried by the lowering action: `-(h+2)/2`.
pub fn lowering_multiplier() -> FactoredRatFun {
    FactoredRatFun::from_parts(
        GaussianRational::from_ratio(-1, 2),
        [(GaussianRational::from_int(-2), 1)],
    )
    .expect("-1/2 is nonzero")
}

/// Raising action for an arbitrary parameter: `sigma(v) u`.
pub fn act_a_raw(u: &FactoredRatFun, v: &PartialFraction) -> PartialFraction {
    RankOneModule::new(weyl_shift(), u.clone()).x_act(v)
}

/// Lowering action for an arbitrary parameter:
/// `-((h+2)/2) sigma^{-1}(v) / sigma^{-1}(u)`.
pub fn act_b_raw(u: &FactoredRatFun, v: &PartialFraction) -> PartialFraction {
    let shift = weyl_shift();
    let multiplier = lowering_multiplier().mul(&shift.apply_factored(u, -1).inv());
    shift.apply_partial(v, -1).mul_factored(&multiplier)
}

/// A rank-one module over the Weyl algebra, with canonical parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylModule {
    u: FactoredRatFun,
}

impl WeylModule {
    /// Wraps a parameter, reducing its roots into the strip `Re in [0, 2)`.
    pub fn new(u: FactoredRatFun) -> Self {
        WeylModule { u: canonical_rep(&u, &weyl_shift(), &BigRational::zero()) }
    }

    /// The canonical parameter.
    pub fn u(&self) -> &FactoredRatFun {
        &self.u
    }

    /// The underlying rank-one module over the skew Laurent ring.
    pub fn rank_one(&self) -> RankOneModule {
        RankOneModule::new(weyl_shift(), self.u.clone())
    }

    /// Raising action.
    pub fn act_a(&self, v: &PartialFraction) -> PartialFraction {
        act_a_raw(&self.u, v)
    }

    /// Lowering action.
    pub fn act_b(&self, v: &PartialFraction) -> PartialFraction {
        act_b_raw(&self.u, v)
    }

    /// The Euler-style weight action `-2 a(b(v))`, which is exactly
    /// multiplication by `h`.
    pub fn act_h(&self, v: &PartialFraction) -> PartialFraction {
        self.act_a(&self.act_b(v)).scale(&GaussianRational::from_int(-2))
    }

    /// Whether two modules are isomorphic: the parameter quotient must be
    /// a shift coboundary.
    pub fn is_isomorphic(&self, other: &WeylModule) -> bool {
        in_g_sigma(&other.u.div(&self.u), &weyl_shift())
    }
}

#[derive(Serialize, Deserialize)]
struct WeylModuleRepr {
    u: FactoredRatFun,
}

impl Serialize for WeylModule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WeylModuleRepr { u: self.u.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeylModule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(WeylModule::new(WeylModuleRepr::deserialize(deserializer)?.u))
    }
}
