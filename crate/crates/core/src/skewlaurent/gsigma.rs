//! Membership, witnesses, and canonical representatives for the group of
//! shift coboundaries.
//!
//! The multiplicative group in question consists of the quotients
//! `r / sigma(r)` over nonzero rational functions `r`. A factored function
//! belongs to it exactly when its constant is one and its exponents sum to
//! zero along every shift orbit; in that case an explicit witness `r` is
//! produced. Reducing every root into a fixed fundamental strip gives a
//! canonical coset representative, which decides when two rank-one module
//! parameters are equivalent.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactfield::{FactoredRatFun, GaussianRational};
use crate::skewlaurent::expfun::orbits;
use crate::skewlaurent::shift::ShiftAut;

/// True when `f = r / sigma(r)` for some nonzero rational function `r`.
pub fn in_g_sigma(f: &FactoredRatFun, shift: &ShiftAut) -> bool {
    f.c().is_one() && orbits(f, shift).iter().all(|orbit| orbit.exponent_sum() == 0)
}

/// An explicit `r` with `f = r / sigma(r)`, or [`Error::NotInGSigma`].
///
/// On each orbit the witness takes the running suffix sums of the exponent
/// function as its own exponents; the telescoping of `r / sigma(r)` then
/// reproduces `f` exactly.
pub fn coboundary_witness(f: &FactoredRatFun, shift: &ShiftAut) -> Result<FactoredRatFun> {
    if !in_g_sigma(f, shift) {
        return Err(Error::NotInGSigma);
    }
    let mut parts: Vec<(GaussianRational, i64)> = Vec::new();
    for orbit in orbits(f, shift) {
        let k_min = *orbit.entries.keys().next().expect("orbits are nonempty");
        let k_max = *orbit.entries.keys().last().expect("orbits are nonempty");
        let mut suffix = 0i64;
        for k in ((k_min + 1)..=k_max).rev() {
            suffix += orbit.entries.get(&k).copied().unwrap_or(0);
            if suffix != 0 {
                parts.push((orbit.location(shift, k), suffix));
            }
        }
    }
    FactoredRatFun::from_parts(GaussianRational::one(), parts)
}

/// Moves every root into the strip `Re in [omega, omega + width)` by
/// whole steps, merging factors that collide; the constant is untouched.
///
/// Two parameters give the same canonical representative exactly when
/// their quotient lies in the coboundary group.
pub fn canonical_rep(
    f: &FactoredRatFun,
    shift: &ShiftAut,
    omega: &BigRational,
) -> FactoredRatFun {
    let width = shift.width();
    let parts = f.factors().iter().map(|(root, exp)| {
        let j = ((root.re() - omega) / &width).floor();
        let re = root.re() - &(&j * &width);
        (GaussianRational::new(re, root.im().clone()), *exp)
    });
    FactoredRatFun::from_parts(f.c().clone(), parts.collect::<Vec<_>>())
        .expect("constant is preserved and nonzero")
}
