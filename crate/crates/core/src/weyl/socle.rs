//! Socle shape and finite generation over the Weyl algebra.
//!
//! For a canonical parameter the reachable pole patterns form straight
//! rays: a pole of negative multiplicity is never cancelled and walks up
//! the shift, a pole of positive multiplicity walks down with constant
//! order, except at the origin where the lowering multiplier cancels one
//! order on the first step. The socle is finitely generated exactly when
//! no ray survives, which pins the parameter to a constant or a single
//! simple root at the origin.

use num_traits::Zero;

use crate::sl2::{PoleRay, SocleDescriptor};
use crate::weyl::action::WeylModule;

/// Describes the poles reachable inside the socle of a Weyl module.
pub fn socle_descriptor(module: &WeylModule) -> SocleDescriptor {
    let mut rays = Vec::new();
    for (s, &m) in module.u().factors() {
        if m < 0 {
            rays.push(PoleRay::with_drops(s.clone(), 2, 0, (-m) as u32, &[]));
        } else if s.re().is_zero() && s.im().is_zero() {
            rays.push(PoleRay::with_drops(s.clone(), -2, 1, m as u32 - 1, &[]));
        } else {
            rays.push(PoleRay::with_drops(s.clone(), -2, 1, m as u32, &[]));
        }
    }
    SocleDescriptor::new(true, rays)
}

/// Whether the socle is finitely generated over the Weyl algebra.
pub fn is_finitely_generated(module: &WeylModule) -> bool {
    let factors = module.u().factors();
    match factors.len() {
        0 => true,
        1 => {
            let (root, &m) = factors.iter().next().expect("one factor");
            root.re().is_zero() && root.im().is_zero() && m == 1
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{FactoredRatFun, GaussianRational};

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn module(factors: &[(GaussianRational, i64)]) -> WeylModule {
        WeylModule::new(
            FactoredRatFun::from_parts(gi(1), factors.iter().cloned()).unwrap(),
        )
    }

    #[test]
    fn simple_root_at_the_origin_leaves_only_polynomials() {
        let d = socle_descriptor(&module(&[(gi(0), 1)]));
        assert!(d.polynomials());
        assert!(d.rays().is_empty());
        assert!(d.is_bounded());
    }

    #[test]
    fn double_root_at_the_origin_leaves_simple_poles_below() {
        let d = socle_descriptor(&module(&[(gi(0), 2)]));
        assert_eq!(d.rays().len(), 1);
        let ray = &d.rays()[0];
        assert_eq!(ray.base(), &gi(0));
        assert_eq!(ray.direction(), -2);
        assert_eq!(ray.start(), 1);
        assert_eq!(ray.tail_bound(), 1);
        assert_eq!(d.max_order_at(&gi(-2)), 1);
        assert_eq!(d.max_order_at(&gi(0)), 0);
        assert!(!d.is_bounded());
    }

    #[test]
    fn denominator_root_walks_up_the_shift() {
        let d = socle_descriptor(&module(&[(GaussianRational::from_ratio(1, 2), -1)]));
        assert_eq!(d.rays().len(), 1);
        let ray = &d.rays()[0];
        assert_eq!(ray.base(), &GaussianRational::from_ratio(1, 2));
        assert_eq!(ray.direction(), 2);
        assert_eq!(ray.start(), 0);
        assert_eq!(ray.tail_bound(), 1);
        assert_eq!(d.max_order_at(&GaussianRational::from_ratio(1, 2)), 1);
        assert_eq!(d.max_order_at(&GaussianRational::from_ratio(5, 2)), 1);
    }

    #[test]
    fn finite_generation_requires_a_constant_or_a_simple_origin_root() {
        assert!(is_finitely_generated(&module(&[])));
        assert!(is_finitely_generated(&module(&[(gi(0), 1)])));
        assert!(is_finitely_generated(&module(&[(gi(2), 1)])), "canonicalizes to origin");
        assert!(!is_finitely_generated(&module(&[(gi(0), 2)])));
        assert!(!is_finitely_generated(&module(&[(gi(1), 1)])));
        assert!(!is_finitely_generated(&module(&[(gi(0), -1)])));
        assert!(!is_finitely_generated(&module(&[(gi(0), 1), (gi(1), 1)])));
    }

    #[test]
    fn finite_generation_matches_boundedness() {
        let samples = [
            module(&[]),
            module(&[(gi(0), 1)]),
            module(&[(gi(0), 3)]),
            module(&[(gi(1), 2)]),
            module(&[(GaussianRational::i(), -2)]),
            module(&[(gi(0), 1), (GaussianRational::from_ratio(1, 2), 1)]),
        ];
        for m in &samples {
            assert_eq!(
                is_finitely_generated(m),
                socle_descriptor(m).is_bounded(),
                "parameter {}",
                m.u()
            );
        }
    }
}
