//! Seeded random generators for parameters and module elements.
//!
//! Verification commands and property suites draw their inputs from these
//! helpers so that every run is reproducible from a single seed. All
//! values stay small: the point of randomization is coverage of shapes
//! (real/imaginary roots, fractional locations, mixed exponent signs),
//! not magnitude.

use num_rational::BigRational;
use rand::Rng;

use crate::exactfield::{FactoredRatFun, GaussianRational, PartialFraction, Polynomial};
use crate::skewlaurent::ShiftAut;

/// A small rational with numerator in `[-max_num, max_num]` and
/// denominator in `{1, 2}`.
pub fn small_rational<R: Rng>(rng: &mut R, max_num: i64) -> BigRational {
    let num = rng.gen_range(-max_num..=max_num);
    let den = if rng.gen_bool(0.25) { 2 } else { 1 };
    BigRational::new(num.into(), den.into())
}

/// A small Gaussian rational; imaginary parts appear about a third of the
/// time.
pub fn small_gaussian<R: Rng>(rng: &mut R, max_num: i64) -> GaussianRational {
    let re = small_rational(rng, max_num);
    let im = if rng.gen_bool(1.0 / 3.0) {
        small_rational(rng, max_num)
    } else {
        BigRational::from_integer(0.into())
    };
    GaussianRational::new(re, im)
}

/// A small nonzero Gaussian rational.
pub fn nonzero_gaussian<R: Rng>(rng: &mut R, max_num: i64) -> GaussianRational {
    loop {
        let g = small_gaussian(rng, max_num);
        if !num_traits::Zero::is_zero(&g) {
            return g;
        }
    }
}

/// A polynomial with random degree up to `max_degree` and small
/// coefficients (possibly the zero polynomial).
pub fn small_polynomial<R: Rng>(rng: &mut R, max_degree: usize, max_coeff: i64) -> Polynomial {
    let degree = rng.gen_range(0..=max_degree);
    let coeffs = (0..=degree).map(|_| small_gaussian(rng, max_coeff)).collect();
    Polynomial::new(coeffs)
}

/// A factored module parameter with up to `max_support` distinct roots and
/// nonzero exponents bounded by `max_exp` in absolute value.
pub fn factored_parameter<R: Rng>(
    rng: &mut R,
    max_support: usize,
    max_exp: i64,
    max_root: i64,
) -> FactoredRatFun {
    let c = nonzero_gaussian(rng, 3);
    let support = rng.gen_range(0..=max_support);
    let parts = (0..support).map(|_| {
        let root = small_gaussian(rng, max_root);
        let exp = loop {
            let e = rng.gen_range(-max_exp..=max_exp);
            if e != 0 {
                break e;
            }
        };
        (root, exp)
    });
    FactoredRatFun::from_parts(c, parts).expect("constant is nonzero")
}

/// A random coboundary `r / sigma(r)`, the generic trivial direction of
/// the classification.
pub fn coboundary<R: Rng>(rng: &mut R, shift: &ShiftAut) -> FactoredRatFun {
    let r = factored_parameter(rng, 2, 2, 4);
    r.div(&shift.apply_factored(&r, 1))
}

/// A partial fraction supported on the given pole locations, with orders
/// up to `max_order`, plus a small polynomial part.
pub fn partial_fraction_on<R: Rng>(
    rng: &mut R,
    locations: &[GaussianRational],
    max_order: usize,
    max_degree: usize,
) -> PartialFraction {
    let mut value = PartialFraction::from_poly(small_polynomial(rng, max_degree, 4));
    if !locations.is_empty() {
        let picks = rng.gen_range(0..=2usize);
        for _ in 0..picks {
            let loc = &locations[rng.gen_range(0..locations.len())];
            let order = rng.gen_range(1..=max_order);
            let coeff = nonzero_gaussian(rng, 4);
            value = &value + &PartialFraction::from_pole(loc.clone(), order, coeff);
        }
    }
    value
}

/// Pole locations reachable from a parameter's roots within a few steps
/// of the shift, a natural support set for random module elements.
pub fn nearby_locations(u: &FactoredRatFun, shift: &ShiftAut, steps: i64) -> Vec<GaussianRational> {
    let mut out = Vec::new();
    for (root, _) in u.factors() {
        for k in -steps..=steps {
            out.push(shift.translate(root, k));
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::skewlaurent::in_g_sigma;

    #[test]
    fn generators_are_reproducible_from_the_seed() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert_eq!(
                factored_parameter(&mut a, 2, 3, 4),
                factored_parameter(&mut b, 2, 3, 4)
            );
        }
    }

    #[test]
    fn coboundaries_land_in_the_subgroup() {
        let shift = ShiftAut::from_int(-2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let w = coboundary(&mut rng, &shift);
            assert!(in_g_sigma(&w, &shift), "r/sigma(r) must pass membership: {}", w);
        }
    }

    #[test]
    fn sampled_elements_respect_the_requested_support() {
        let shift = ShiftAut::from_int(-2);
        let u = FactoredRatFun::from_root(GaussianRational::from_int(3), 2);
        let locations = nearby_locations(&u, &shift, 2);
        assert_eq!(locations.len(), 5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let v = partial_fraction_on(&mut rng, &locations, 3, 2);
            for (root, order, _) in v.pole_entries() {
                assert!(locations.contains(root));
                assert!(order <= 3);
            }
        }
    }
}
