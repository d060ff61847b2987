//! Property-based laws for the exact arithmetic, the shifted rational
//! functions, and the module classification layer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use socle::exactfield::{
    FactoredRatFun, GaussianRational, PartialFraction, Polynomial, RatFun,
};
use socle::skewlaurent::{
    canonical_rep, coboundary_witness, in_g_sigma, RankOneModule, SkewLaurent,
};
use socle::sl2::{self, sl2_shift, Sl2Module};
use socle::weyl::{self, WeylModule};
use socle::osp::OspParams;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
    (arb_rational(), arb_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn arb_nonzero_gaussian() -> impl Strategy<Value = GaussianRational> {
    arb_gaussian().prop_filter("nonzero", |z| !z.is_zero())
}

fn arb_polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(arb_gaussian(), 0..4).prop_map(Polynomial::new)
}

/// Roots drawn from a small grid so that shift orbits actually collide.
fn arb_root() -> impl Strategy<Value = GaussianRational> {
    ((-4i64..=4), prop::bool::ANY, (0i64..=1)).prop_map(|(re, halve, im)| {
        let re = if halve { ratio(re, 2) } else { ratio(re, 1) };
        GaussianRational::new(re, ratio(im, 1))
    })
}

fn arb_factored() -> impl Strategy<Value = FactoredRatFun> {
    (
        arb_nonzero_gaussian(),
        prop::collection::btree_map(arb_root(), (-3i64..=3).prop_filter("nonzero", |e| *e != 0), 0..3),
    )
        .prop_map(|(c, factors)| FactoredRatFun::new(c, factors).expect("nonzero constant"))
}

fn arb_partial_fraction() -> impl Strategy<Value = PartialFraction> {
    (
        arb_polynomial(),
        prop::collection::vec((arb_root(), 1usize..=3, arb_nonzero_gaussian()), 0..3),
    )
        .prop_map(|(poly, poles)| {
            let mut out = PartialFraction::from_poly(poly);
            for (root, order, coeff) in poles {
                out = &out + &PartialFraction::from_pole(root, order, coeff);
            }
            out
        })
}

fn arb_ray_element() -> impl Strategy<Value = SkewLaurent> {
    prop::collection::vec(((-1i64..=1), arb_polynomial(), arb_polynomial()), 1..3).prop_map(
        |parts| {
            let shift = sl2_shift();
            let mut out = SkewLaurent::zero(shift.clone());
            for (degree, num, den) in parts {
                let den = if den.degree().is_none() { Polynomial::h() } else { den };
                let coeff = RatFun::new(num, den).expect("denominator nonzero");
                out = out
                    .add(&SkewLaurent::monomial(shift.clone(), coeff, degree))
                    .expect("same shift");
            }
            out
        },
    )
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in arb_gaussian(), b in arb_gaussian(), c in arb_gaussian()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in arb_gaussian(), b in arb_gaussian(), c in arb_gaussian()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn inverses_multiply_to_one(a in arb_nonzero_gaussian()) {
        prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
    }

    #[test]
    fn conjugation_preserves_the_norm(a in arb_gaussian()) {
        prop_assert_eq!(a.conj().norm(), a.norm());
    }

    #[test]
    fn factored_forms_expand_and_refactor(u in arb_factored()) {
        let back = FactoredRatFun::factor(&u.expand()).unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn factored_multiplication_matches_expanded(u in arb_factored(), v in arb_factored()) {
        let product = u.mul(&v).expand();
        let expanded = &u.expand() * &v.expand();
        prop_assert_eq!(product, expanded);
    }

    #[test]
    fn partial_fractions_round_trip(v in arb_partial_fraction()) {
        let back = PartialFraction::from_ratfun(&v.to_ratfun()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn partial_fraction_sum_matches_ratfun_sum(a in arb_partial_fraction(), b in arb_partial_fraction()) {
        let direct = (&a + &b).to_ratfun();
        let resummed = &a.to_ratfun() + &b.to_ratfun();
        prop_assert_eq!(direct, resummed);
    }

    #[test]
    fn shifting_commutes_with_expansion(u in arb_factored(), k in -2i64..=2) {
        let shift = sl2_shift();
        let moved = shift.apply_factored(&u, k).expand();
        let expanded = shift.apply_ratfun(&u.expand(), k);
        prop_assert_eq!(moved, expanded);
    }

    #[test]
    fn coboundaries_admit_witnesses(r in arb_factored()) {
        let shift = sl2_shift();
        let f = r.div(&shift.apply_factored(&r, 1));
        prop_assert!(in_g_sigma(&f, &shift));
        let w = coboundary_witness(&f, &shift).unwrap();
        prop_assert_eq!(w.div(&shift.apply_factored(&w, 1)), f);
    }

    #[test]
    fn coboundary_group_is_closed(r in arb_factored(), s in arb_factored()) {
        let shift = sl2_shift();
        let f = r.div(&shift.apply_factored(&r, 1));
        let g = s.div(&shift.apply_factored(&s, 1));
        prop_assert!(in_g_sigma(&f.mul(&g), &shift));
        prop_assert!(in_g_sigma(&f.inv(), &shift));
    }

    #[test]
    fn canonical_representatives_are_stable(u in arb_factored(), k in -2i64..=2) {
        let shift = sl2_shift();
        let omega = BigRational::zero();
        let canon = canonical_rep(&u, &shift, &omega);
        prop_assert_eq!(canonical_rep(&canon, &shift, &omega), canon.clone());
        let moved = u.substitute_shift(&shift.amount(k));
        prop_assert_eq!(canonical_rep(&moved, &shift, &omega), canon);
    }

    #[test]
    fn equivalent_parameters_are_isomorphic(u in arb_factored(), r in arb_factored()) {
        let shift = sl2_shift();
        let f = r.div(&shift.apply_factored(&r, 1));
        let left = RankOneModule::new(shift.clone(), u.clone());
        let right = RankOneModule::new(shift, u.mul(&f));
        prop_assert!(left.is_isomorphic(&right).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skew_multiplication_is_associative(a in arb_ray_element(), b in arb_ray_element(), c in arb_ray_element()) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn skew_multiplication_distributes(a in arb_ray_element(), b in arb_ray_element(), c in arb_ray_element()) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn weight_module_operators_close_the_bracket(
        r1 in prop::sample::select(vec![-1i64, 0, 1, 2]),
        u in arb_factored(),
        v in arb_partial_fraction(),
    ) {
        let module = Sl2Module::from_r1(GaussianRational::from_int(r1), u);
        let ef = module.act_e(&module.act_f(&v));
        let fe = module.act_f(&module.act_e(&v));
        prop_assert_eq!(&ef - &fe, module.act_h(&v));
        let he = module.act_h(&module.act_e(&v));
        let eh = module.act_e(&module.act_h(&v));
        prop_assert_eq!(&he - &eh, module.act_e(&v).scale(&GaussianRational::from_int(2)));
    }

    #[test]
    fn casimir_acts_by_the_family_scalar(
        r1 in prop::sample::select(vec![-1i64, 1, 3]),
        u in arb_factored(),
        v in arb_partial_fraction(),
    ) {
        let module = Sl2Module::from_r1(GaussianRational::from_int(r1), u);
        let theta = module.family().theta().clone();
        prop_assert_eq!(module.act_casimir(&v), v.scale(&theta));
    }

    #[test]
    fn weyl_operators_satisfy_the_canonical_relation(u in arb_factored(), v in arb_partial_fraction()) {
        let module = WeylModule::new(u);
        let ab = module.act_a(&module.act_b(&v));
        let ba = module.act_b(&module.act_a(&v));
        prop_assert_eq!(&ab - &ba, v.clone());
        let mul_h = v.mul_poly(&Polynomial::h());
        prop_assert_eq!(module.act_h(&v), mul_h);
    }

    #[test]
    fn finite_generation_matches_ray_boundedness(
        r1 in prop::sample::select(vec![-1i64, 1]),
        u in arb_factored(),
    ) {
        let module = Sl2Module::from_r1(GaussianRational::from_int(r1), u.clone());
        prop_assert_eq!(
            sl2::is_finitely_generated(&module),
            sl2::socle_descriptor(&module).is_bounded()
        );
        let weyl_module = WeylModule::new(u);
        prop_assert_eq!(
            weyl::is_finitely_generated(&weyl_module),
            weyl::socle_descriptor(&weyl_module).is_bounded()
        );
    }

    #[test]
    fn parity_change_is_an_involution(u in arb_factored(), lambda in arb_gaussian()) {
        let params = OspParams::new(u, lambda);
        let back = params.parity_change().parity_change();
        prop_assert_eq!(back.u(), params.u());
        prop_assert_eq!(back.lambda(), params.lambda());
    }
}
