//! Closed-form socle descriptors and the finite-generation test for
//! weight-line modules.
//!
//! With the parameter in canonical position, the socle's fraction
//! patterns are read off the exponent function directly. A root of
//! multiplicity `m > 0` contributes a descending ray of pole locations
//! whose order bound starts at `m` and drops by one each time the ray
//! crosses a point reachable from a family root by whole steps; a root of
//! multiplicity `m < 0` contributes an ascending ray of constant bound
//! `-m` starting at the root itself. The socle is a finitely generated
//! module exactly when every bound eventually reaches zero, which happens
//! when no exponent is negative and no multiplicity exceeds the number of
//! family roots feeding its orbit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::exactfield::GaussianRational;
use crate::sl2::action::Sl2Module;
use crate::sl2::descriptor::{PoleRay, SocleDescriptor};
use crate::sl2::params::Sl2Family;

/// The indices (in half-steps of two) at which a descending ray from `s`
/// meets a family root, i.e. the `l >= 2` with `s - 2l` equal to a root.
fn drop_indices(family: &Sl2Family, s: &GaussianRational) -> Vec<i64> {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut drops = Vec::new();
    for r in family.roots() {
        if r.im() != s.im() {
            continue;
        }
        let l = (s.re() - r.re()) / &two;
        if l.is_integer() {
            let l = l.to_integer().to_i64().expect("drop index fits in i64");
            if l >= 2 {
                drops.push(l);
            }
        }
    }
    drops.sort_unstable();
    drops
}

/// The socle's fraction patterns, one ray per root of the parameter.
pub fn socle_descriptor(module: &Sl2Module) -> SocleDescriptor {
    let mut rays = Vec::new();
    for (s, m) in module.u().factors() {
        if *m < 0 {
            rays.push(PoleRay::with_drops(s.clone(), 2, 0, (-m) as u32, &[]));
        } else {
            let drops = drop_indices(module.family(), s);
            rays.push(PoleRay::with_drops(s.clone(), -2, 1, *m as u32, &drops));
        }
    }
    SocleDescriptor::new(true, rays)
}

/// Whether the socle is finitely generated over the algebra: every
/// exponent must be nonnegative and no larger than the number of family
/// roots lying a positive even distance below it.
pub fn is_finitely_generated(module: &Sl2Module) -> bool {
    module.u().factors().iter().all(|(s, m)| {
        *m >= 0 && *m <= drop_indices(module.family(), s).len() as i64
    })
}
