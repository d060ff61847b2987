//! The weight-line module and its raising/lowering/weight actions.
//!
//! A module is a family together with a parameter `u`; the underlying
//! space is the field itself in partial-fraction form. The raising
//! operator acts by `v -> sigma(v) u`, the lowering operator by
//! `v -> -(h-r1)(h-r2)/4 * sigma^{-1}(v) / sigma^{-1}(u)`, and the weight
//! operator multiplies by `h`. Parameters are canonicalized into the
//! family's strip on construction; raw variants of the actions accept an
//! arbitrary parameter unchanged.

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactfield::{FactoredRatFun, GaussianRational, PartialFraction};
use crate::skewlaurent::{canonical_rep, in_g_sigma, RankOneModule};
use crate::sl2::params::{sl2_shift, Sl2Family};

/// The raising action for an arbitrary parameter: `sigma(v) u`.
pub fn act_e_raw(u: &FactoredRatFun, v: &PartialFraction) -> PartialFraction {
    RankOneModule::new(sl2_shift(), u.clone()).x_act(v)
}

/// The lowering action for an arbitrary parameter:
/// `-(h-r1)(h-r2)/4 * sigma^{-1}(v) / sigma^{-1}(u)`.
pub fn act_f_raw(
    family: &Sl2Family,
    u: &FactoredRatFun,
    v: &PartialFraction,
) -> PartialFraction {
    let shift = sl2_shift();
    let multiplier = family
        .lowering_multiplier()
        .mul(&shift.apply_factored(u, -1).inv());
    shift.apply_partial(v, -1).mul_factored(&multiplier)
}

/// The weight action: multiplication by `h`.
pub fn act_h_raw(v: &PartialFraction) -> PartialFraction {
    v.mul_factored(&FactoredRatFun::from_root(GaussianRational::zero(), 1))
}

/// A rank-one module over the weight-line family, with canonical parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Module {
    family: Sl2Family,
    u: FactoredRatFun,
}

impl Sl2Module {
    /// Attaches a parameter to a family, moving it into the strip.
    pub fn new(family: Sl2Family, u: FactoredRatFun) -> Self {
        let u = canonical_rep(&u, &sl2_shift(), family.omega());
        Sl2Module { family, u }
    }

    /// Builds the family from `r1` and attaches the parameter.
    pub fn from_r1(r1: GaussianRational, u: FactoredRatFun) -> Self {
        Sl2Module::new(Sl2Family::new(r1), u)
    }

    /// The family data.
    pub fn family(&self) -> &Sl2Family {
        &self.family
    }

    /// The canonical parameter.
    pub fn u(&self) -> &FactoredRatFun {
        &self.u
    }

    /// The underlying rank-one module over the skew Laurent ring.
    pub fn rank_one(&self) -> RankOneModule {
        RankOneModule::new(sl2_shift(), self.u.clone())
    }

    /// Raising action.
    pub fn act_e(&self, v: &PartialFraction) -> PartialFraction {
        act_e_raw(&self.u, v)
    }

    /// Lowering action.
    pub fn act_f(&self, v: &PartialFraction) -> PartialFraction {
        act_f_raw(&self.family, &self.u, v)
    }

    /// Weight action.
    pub fn act_h(&self, v: &PartialFraction) -> PartialFraction {
        act_h_raw(v)
    }

    /// The Casimir-style action `(h+1)^2 v + 4 f(e(v))`, which equals
    /// `theta * v` on the whole module.
    pub fn act_casimir(&self, v: &PartialFraction) -> PartialFraction {
        let shifted = v.mul_factored(
            &FactoredRatFun::from_root(GaussianRational::from_int(-1), 2),
        );
        let four = GaussianRational::from_int(4);
        &shifted + &self.act_f(&self.act_e(v)).scale(&four)
    }

    /// Whether two modules are isomorphic as modules over the same family:
    /// the root pairs must agree and the parameter quotient must be a
    /// shift coboundary.
    pub fn is_isomorphic(&self, other: &Sl2Module) -> bool {
        self.family.same_roots(other.family())
            && in_g_sigma(&other.u().div(&self.u), &sl2_shift())
    }
}

#[derive(Serialize, Deserialize)]
struct Sl2ModuleRepr {
    r1: GaussianRational,
    u: FactoredRatFun,
}

impl Serialize for Sl2Module {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Sl2ModuleRepr { r1: self.family.r1().clone(), u: self.u.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Sl2Module {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = Sl2ModuleRepr::deserialize(deserializer)?;
        Ok(Sl2Module::from_r1(repr.r1, repr.u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Polynomial;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn one_pf() -> PartialFraction {
        PartialFraction::from_poly(Polynomial::constant(gi(1)))
    }

    fn module(r1: i64, root: i64, exp: i64) -> Sl2Module {
        Sl2Module::from_r1(gi(r1), FactoredRatFun::from_root(gi(root), exp))
    }

    #[test]
    fn parameters_are_canonicalized() {
        let m = module(-1, 9, 1);
        assert_eq!(m.u(), &FactoredRatFun::from_root(gi(3), 1));
        let n = module(-1, 3, 1);
        assert_eq!(m, n);
    }

    #[test]
    fn raising_multiplies_by_the_parameter() {
        let m = module(-1, 3, 1);
        assert_eq!(
            m.act_e(&one_pf()),
            PartialFraction::from_poly(Polynomial::h_minus(&gi(3)))
        );
    }

    #[test]
    fn lowering_on_the_generator() {
        let m = module(-1, 3, 1);
        let image = m.act_f(&one_pf());
        let expected = PartialFraction::from_ratfun(
            &crate::exactfield::RatFun::new(
                Polynomial::h_minus(&gi(-1))
                    .pow(2)
                    .scale(&GaussianRational::from_ratio(-1, 4)),
                Polynomial::h_minus(&gi(1)),
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(image, expected);
    }

    #[test]
    fn commutators_act_correctly() {
        let m = module(1, 5, 2);
        let v = PartialFraction::from_pole(gi(3), 1, gi(2));
        let ef = m.act_e(&m.act_f(&v));
        let fe = m.act_f(&m.act_e(&v));
        assert_eq!(&ef - &fe, m.act_h(&v));
        let he = m.act_h(&m.act_e(&v));
        let eh = m.act_e(&m.act_h(&v));
        assert_eq!(&he - &eh, m.act_e(&v).scale(&gi(2)));
    }

    #[test]
    fn casimir_acts_by_theta() {
        for (r1, root, exp) in [(-1, 3, 1), (1, 5, 1), (0, 4, 2)] {
            let m = module(r1, root, exp);
            let v = PartialFraction::from_pole(gi(1), 2, gi(3));
            assert_eq!(m.act_casimir(&v), v.scale(m.family().theta()));
        }
    }

    #[test]
    fn isomorphism_requires_matching_roots() {
        let a = module(-1, 3, 1);
        let b = module(-1, 5, 1);
        let c = Sl2Module::from_r1(gi(-1), FactoredRatFun::from_root(gi(4), 1));
        assert!(a.is_isomorphic(&b), "translated roots canonicalize together");
        assert!(!a.is_isomorphic(&c));
        let other_family = module(0, 4, 1);
        assert!(!a.is_isomorphic(&other_family));
    }
}
