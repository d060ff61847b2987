//! Matrix actions of the odd generators on graded rank-one modules.
//!
//! A graded element is a pair `(even, odd)` of partial fractions. The odd
//! raising generator `p` swaps the components through the module's `x`
//! action; the odd lowering generator `q` swaps them through `x^{-1}`
//! with the weight-dependent coefficients `(h - lambda)/2` into the even
//! slot and `(h + lambda + 1)/2` into the odd slot. Together they satisfy
//! `pq + qp = h`, and the super-Casimir `pq - qp + 1/2` acts by the
//! scalar `lambda + 1/2` on the even part and its negative on the odd
//! part.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactfield::{FactoredRatFun, GaussianRational, PartialFraction, Polynomial};
use crate::osp::params::{osp_shift, OspParams};
use crate::sample;
use crate::skewlaurent::RankOneModule;

/// An element of a graded module: even and odd components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    even: PartialFraction,
    odd: PartialFraction,
}

impl GradedElement {
    /// Pairs an even and an odd component.
    pub fn new(even: PartialFraction, odd: PartialFraction) -> Self {
        GradedElement { even, odd }
    }

    /// The zero element.
    pub fn zero() -> Self {
        GradedElement { even: PartialFraction::zero(), odd: PartialFraction::zero() }
    }

    /// A purely even element.
    pub fn from_even(even: PartialFraction) -> Self {
        GradedElement { even, odd: PartialFraction::zero() }
    }

    /// A purely odd element.
    pub fn from_odd(odd: PartialFraction) -> Self {
        GradedElement { even: PartialFraction::zero(), odd }
    }

    /// The even component.
    pub fn even(&self) -> &PartialFraction {
        &self.even
    }

    /// The odd component.
    pub fn odd(&self) -> &PartialFraction {
        &self.odd
    }

    /// Whether both components vanish.
    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Componentwise scalar multiple.
    pub fn scale(&self, k: &GaussianRational) -> Self {
        GradedElement { even: self.even.scale(k), odd: self.odd.scale(k) }
    }

    /// Componentwise multiplication by `h`.
    pub fn mul_h(&self) -> Self {
        let by_h = FactoredRatFun::from_root(GaussianRational::from_int(0), 1);
        GradedElement {
            even: self.even.mul_factored(&by_h),
            odd: self.odd.mul_factored(&by_h),
        }
    }
}

impl std::ops::Add for &GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: &GradedElement) -> GradedElement {
        GradedElement { even: &self.even + &rhs.even, odd: &self.odd + &rhs.odd }
    }
}

impl std::ops::Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        GradedElement { even: &self.even - &rhs.even, odd: &self.odd - &rhs.odd }
    }
}

fn rank_one(params: &OspParams) -> RankOneModule {
    RankOneModule::new(osp_shift(), params.u().clone())
}

/// The coefficient `(h - lambda)/2` of the lowering action into the even
/// slot.
fn even_lowering(params: &OspParams) -> FactoredRatFun {
    FactoredRatFun::from_parts(
        GaussianRational::from_ratio(1, 2),
        [(params.lambda().clone(), 1)],
    )
    .expect("1/2 is nonzero")
}

/// The coefficient `(h + lambda + 1)/2` of the lowering action into the
/// odd slot.
fn odd_lowering(params: &OspParams) -> FactoredRatFun {
    let minus_one = GaussianRational::from_int(-1);
    let root = &(-params.lambda()) + &minus_one;
    FactoredRatFun::from_parts(GaussianRational::from_ratio(1, 2), [(root, 1)])
        .expect("1/2 is nonzero")
}

/// The odd raising action: both components move through `x` and swap
/// parity.
pub fn act_p(params: &OspParams, v: &GradedElement) -> GradedElement {
    let m = rank_one(params);
    GradedElement { even: m.x_act(&v.odd), odd: m.x_act(&v.even) }
}

/// The odd lowering action: components move through `x^{-1}`, swap
/// parity, and pick up the weight coefficients.
pub fn act_q(params: &OspParams, v: &GradedElement) -> GradedElement {
    let m = rank_one(params);
    GradedElement {
        even: m.x_inv_act(&v.odd).mul_factored(&even_lowering(params)),
        odd: m.x_inv_act(&v.even).mul_factored(&odd_lowering(params)),
    }
}

/// The even raising action `e = p^2`.
pub fn act_e(params: &OspParams, v: &GradedElement) -> GradedElement {
    act_p(params, &act_p(params, v))
}

/// The even lowering action `f = -q^2`.
pub fn act_f(params: &OspParams, v: &GradedElement) -> GradedElement {
    act_q(params, &act_q(params, v)).scale(&GaussianRational::from_int(-1))
}

/// The super-Casimir action `(pq - qp + 1/2)(v)`.
pub fn scasimir_apply(params: &OspParams, v: &GradedElement) -> GradedElement {
    let pq = act_p(params, &act_q(params, v));
    let qp = act_q(params, &act_p(params, v));
    &(&pq - &qp) + &v.scale(&GaussianRational::from_ratio(1, 2))
}

/// The Casimir action `((h+1)^2 - 4 q^2 p^2)(v)`.
pub fn casimir_apply(params: &OspParams, v: &GradedElement) -> GradedElement {
    let shifted_square = FactoredRatFun::from_root(GaussianRational::from_int(-1), 2);
    let square_part = GradedElement {
        even: v.even.mul_factored(&shifted_square),
        odd: v.odd.mul_factored(&shifted_square),
    };
    let qqpp = act_q(params, &act_q(params, &act_p(params, &act_p(params, v))));
    &square_part - &qqpp.scale(&GaussianRational::from_int(4))
}

/// Extracts the scalar by which an operator acted on a generator, if the
/// result really is a scalar multiple.
fn scalar_of(result: &PartialFraction, operation: &'static str) -> Result<GaussianRational> {
    if !result.is_polynomial() {
        return Err(Error::NonScalarAction { operation });
    }
    let poly = result.poly();
    match poly.degree() {
        None => Ok(GaussianRational::from_int(0)),
        Some(0) => Ok(poly.coeff(0)),
        Some(_) => Err(Error::NonScalarAction { operation }),
    }
}

/// The pair of scalars by which the super-Casimir acts on the even and
/// odd generators; always `(lambda + 1/2, -(lambda + 1/2))`.
pub fn scasimir_action(params: &OspParams) -> Result<(GaussianRational, GaussianRational)> {
    let one = PartialFraction::from_poly(Polynomial::constant(GaussianRational::from_int(1)));
    let on_even = scasimir_apply(params, &GradedElement::from_even(one.clone()));
    if !on_even.odd.is_zero() {
        return Err(Error::NonScalarAction { operation: "scasimir_action" });
    }
    let even_scalar = scalar_of(&on_even.even, "scasimir_action")?;
    let on_odd = scasimir_apply(params, &GradedElement::from_odd(one));
    if !on_odd.even.is_zero() {
        return Err(Error::NonScalarAction { operation: "scasimir_action" });
    }
    let odd_scalar = scalar_of(&on_odd.odd, "scasimir_action")?;
    Ok((even_scalar, odd_scalar))
}

/// The pair of scalars by which the Casimir acts on the even and odd
/// generators; always `((lambda+1)^2, lambda^2)`.
pub fn casimir_scalars(params: &OspParams) -> Result<(GaussianRational, GaussianRational)> {
    let one = PartialFraction::from_poly(Polynomial::constant(GaussianRational::from_int(1)));
    let on_even = casimir_apply(params, &GradedElement::from_even(one.clone()));
    if !on_even.odd.is_zero() {
        return Err(Error::NonScalarAction { operation: "casimir_scalars" });
    }
    let even_scalar = scalar_of(&on_even.even, "casimir_scalars")?;
    let on_odd = casimir_apply(params, &GradedElement::from_odd(one));
    if !on_odd.even.is_zero() {
        return Err(Error::NonScalarAction { operation: "casimir_scalars" });
    }
    let odd_scalar = scalar_of(&on_odd.odd, "casimir_scalars")?;
    Ok((even_scalar, odd_scalar))
}

/// A random graded element supported near the parameter's poles.
pub fn random_element<R: Rng>(params: &OspParams, rng: &mut R) -> GradedElement {
    let locations = sample::nearby_locations(params.u(), &osp_shift(), 3);
    GradedElement {
        even: sample::partial_fraction_on(rng, &locations, 2, 3),
        odd: sample::partial_fraction_on(rng, &locations, 2, 3),
    }
}

/// Checks all defining operator relations on `samples` random graded
/// elements: `[h,p] = p`, `[h,q] = -q`, `pq + qp = h`, and the sl2
/// relations of the induced even operators `e = p^2`, `f = -q^2`.
pub fn verify_superrelations<R: Rng>(params: &OspParams, samples: usize, rng: &mut R) -> bool {
    for _ in 0..samples {
        let v = random_element(params, rng);

        let p_v = act_p(params, &v);
        let q_v = act_q(params, &v);
        if &p_v.mul_h() - &act_p(params, &v.mul_h()) != p_v {
            return false;
        }
        if &act_q(params, &v.mul_h()) - &q_v.mul_h() != q_v {
            return false;
        }
        let anti = &act_p(params, &q_v) + &act_q(params, &p_v);
        if anti != v.mul_h() {
            return false;
        }

        let e_v = act_e(params, &v);
        let f_v = act_f(params, &v);
        if &e_v.mul_h() - &act_e(params, &v.mul_h()) != e_v.scale(&GaussianRational::from_int(2)) {
            return false;
        }
        if &f_v.mul_h() - &act_f(params, &v.mul_h())
            != f_v.scale(&GaussianRational::from_int(-2))
        {
            return false;
        }
        if &act_e(params, &f_v) - &act_f(params, &e_v) != v.mul_h() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn one_pf() -> PartialFraction {
        PartialFraction::from_poly(Polynomial::constant(gi(1)))
    }

    #[test]
    fn raising_swaps_parity_through_u() {
        let params = OspParams::new(FactoredRatFun::from_root(gi(0), 1), gi(0));
        let from_even = act_p(&params, &GradedElement::from_even(one_pf()));
        assert!(from_even.even().is_zero());
        assert_eq!(from_even.odd(), &PartialFraction::from_poly(Polynomial::h()));
        let from_odd = act_p(&params, &GradedElement::from_odd(one_pf()));
        assert_eq!(from_odd.even(), &PartialFraction::from_poly(Polynomial::h()));
        assert!(from_odd.odd().is_zero());
    }

    #[test]
    fn lowering_picks_up_the_weight_coefficients() {
        let lambda = gi(2);
        let params = OspParams::new(FactoredRatFun::from_root(gi(0), 1), lambda);
        let from_even = act_q(&params, &GradedElement::from_even(one_pf()));
        assert!(from_even.even().is_zero());
        let expected = PartialFraction::from_ratfun(
            &crate::exactfield::RatFun::new(
                Polynomial::h_minus(&gi(-3)).scale(&GaussianRational::from_ratio(1, 2)),
                Polynomial::h_minus(&gi(-1)),
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(from_even.odd(), &expected);
    }

    #[test]
    fn anticommutator_of_odd_generators_is_h() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let params = OspParams::new(
            FactoredRatFun::from_parts(gi(1), [(GaussianRational::from_ratio(1, 2), 2)]).unwrap(),
            GaussianRational::i(),
        );
        for _ in 0..5 {
            let v = random_element(&params, &mut rng);
            let anti = &act_p(&params, &act_q(&params, &v)) + &act_q(&params, &act_p(&params, &v));
            assert_eq!(anti, v.mul_h());
        }
    }

    #[test]
    fn scasimir_scalars_track_the_weight() {
        let u = FactoredRatFun::from_root(gi(0), 1);
        let zero = OspParams::new(u.clone(), gi(0));
        assert_eq!(
            scasimir_action(&zero).unwrap(),
            (GaussianRational::from_ratio(1, 2), GaussianRational::from_ratio(-1, 2))
        );
        let vanish = OspParams::new(u.clone(), GaussianRational::from_ratio(-1, 2));
        assert_eq!(scasimir_action(&vanish).unwrap(), (gi(0), gi(0)));
        let imag = OspParams::new(u, GaussianRational::i());
        let (even, odd) = scasimir_action(&imag).unwrap();
        let expected = &GaussianRational::i() + &GaussianRational::from_ratio(1, 2);
        assert_eq!(even, expected);
        assert_eq!(odd, -&expected);
    }

    #[test]
    fn casimir_scalars_are_squares_of_shifted_weights() {
        let u = FactoredRatFun::from_parts(gi(2), [(gi(0), 1)]).unwrap();
        assert_eq!(casimir_scalars(&OspParams::new(u.clone(), gi(0))).unwrap(), (gi(1), gi(0)));
        assert_eq!(casimir_scalars(&OspParams::new(u.clone(), gi(1))).unwrap(), (gi(4), gi(1)));
        let half = OspParams::new(u, GaussianRational::from_ratio(1, 2));
        assert_eq!(
            casimir_scalars(&half).unwrap(),
            (GaussianRational::from_ratio(9, 4), GaussianRational::from_ratio(1, 4))
        );
    }

    #[test]
    fn defining_relations_hold_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let params = [
            OspParams::new(FactoredRatFun::from_root(gi(0), 1), gi(0)),
            OspParams::new(
                FactoredRatFun::from_parts(gi(-1), [(GaussianRational::from_ratio(1, 2), -1)])
                    .unwrap(),
                GaussianRational::i(),
            ),
            OspParams::new(FactoredRatFun::one(), GaussianRational::from_ratio(-1, 2)),
        ];
        for p in &params {
            assert!(verify_superrelations(p, 4, &mut rng));
        }
    }

    #[test]
    fn corrupted_lowering_fails_the_relations() {
        let params = OspParams::new(FactoredRatFun::from_root(gi(0), 1), gi(1));
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let v = random_element(&params, &mut rng);
        let bad_q = act_q(&params, &v).scale(&gi(-1));
        let anti = &act_p(&params, &bad_q) + &act_q(&params, &act_p(&params, &v));
        assert_ne!(anti, v.mul_h(), "sign-flipped lowering must break pq+qp=h");
    }

    #[test]
    fn scasimir_anticommutes_with_odd_generators() {
        let params = OspParams::new(
            FactoredRatFun::from_root(GaussianRational::from_ratio(1, 2), 1),
            gi(1),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..5 {
            let v = random_element(&params, &mut rng);
            let sp = scasimir_apply(&params, &act_p(&params, &v));
            let ps = act_p(&params, &scasimir_apply(&params, &v));
            assert!((&sp + &ps).is_zero());
            let sq = scasimir_apply(&params, &act_q(&params, &v));
            let qs = act_q(&params, &scasimir_apply(&params, &v));
            assert!((&sq + &qs).is_zero());
        }
    }
}
