//! Derived data for one weight-line family of rank-one modules.
//!
//! A family is determined by a single Gaussian rational `r1`. Its partner
//! root is `r2 = -2 - r1`, the central scalar is `theta = (r1 + 1)^2`, and
//! the fundamental strip for canonical parameters starts at
//! `omega = 3 + max(Re r1, Re r2)`. Each root also gets its translate
//! `t_j = r_j + 2 n_j` into the strip.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::exactfield::{FactoredRatFun, GaussianRational, RatFun};
use crate::skewlaurent::{ShiftAut, SkewLaurent};

/// The step of the shift automorphism used by this family.
pub const SL2_STEP: i64 = -2;

/// The shift automorphism `h -> h - 2`.
pub fn sl2_shift() -> ShiftAut {
    ShiftAut::from_int(SL2_STEP)
}

/// All data derived from the defining root `r1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Family {
    r1: GaussianRational,
    r2: GaussianRational,
    theta: GaussianRational,
    omega: BigRational,
    t1: GaussianRational,
    t2: GaussianRational,
    n1: i64,
    n2: i64,
}

/// The unique integer `n` with `re + 2n` in `[omega, omega + 2)`.
fn strip_translate(re: &BigRational, omega: &BigRational) -> i64 {
    let two = BigRational::from_integer(BigInt::from(2));
    let n = ((omega - re) / &two).ceil();
    n.to_integer().to_i64().expect("strip translate fits in i64")
}

impl Sl2Family {
    /// Computes the family attached to `r1`.
    pub fn new(r1: GaussianRational) -> Self {
        let r2 = &GaussianRational::from_int(-2) - &r1;
        let one_plus = r1.add_int(1);
        let theta = &one_plus * &one_plus;
        let omega = BigRational::from_integer(BigInt::from(3)) + r1.re().max(r2.re());
        let n1 = strip_translate(r1.re(), &omega);
        let n2 = strip_translate(r2.re(), &omega);
        debug_assert!(n1 >= 2 && n2 >= 2, "strip translates stay at least two");
        let t1 = r1.add_int(2 * n1);
        let t2 = r2.add_int(2 * n2);
        Sl2Family { r1, r2, theta, omega, t1, t2, n1, n2 }
    }

    /// The defining root.
    pub fn r1(&self) -> &GaussianRational {
        &self.r1
    }

    /// The partner root `-2 - r1`.
    pub fn r2(&self) -> &GaussianRational {
        &self.r2
    }

    /// The central scalar `(r1 + 1)^2`.
    pub fn theta(&self) -> &GaussianRational {
        &self.theta
    }

    /// Start of the fundamental strip.
    pub fn omega(&self) -> &BigRational {
        &self.omega
    }

    /// Strip translate of `r1`.
    pub fn t1(&self) -> &GaussianRational {
        &self.t1
    }

    /// Strip translate of `r2`.
    pub fn t2(&self) -> &GaussianRational {
        &self.t2
    }

    /// Number of steps moving `r1` into the strip.
    pub fn n1(&self) -> i64 {
        self.n1
    }

    /// Number of steps moving `r2` into the strip.
    pub fn n2(&self) -> i64 {
        self.n2
    }

    /// Both roots, in order.
    pub fn roots(&self) -> [&GaussianRational; 2] {
        [&self.r1, &self.r2]
    }

    /// True when two families describe the same pair of roots.
    pub fn same_roots(&self, other: &Sl2Family) -> bool {
        (self.r1 == other.r1 && self.r2 == other.r2)
            || (self.r1 == other.r2 && self.r2 == other.r1)
    }

    /// The scalar `-(h - r1)(h - r2)/4` carried by the lowering operator.
    pub fn lowering_multiplier(&self) -> FactoredRatFun {
        FactoredRatFun::from_parts(
            GaussianRational::from_ratio(-1, 4),
            [(self.r1.clone(), 1), (self.r2.clone(), 1)],
        )
        .expect("-1/4 is nonzero")
    }

    /// The raising operator as a ring element: `x`.
    pub fn ring_e(&self) -> SkewLaurent {
        SkewLaurent::x(sl2_shift())
    }

    /// The lowering operator as a ring element: `-(h-r1)(h-r2)/4 x^{-1}`.
    pub fn ring_f(&self) -> SkewLaurent {
        SkewLaurent::monomial(sl2_shift(), self.lowering_multiplier().expand(), -1)
    }

    /// The weight operator as a ring element: the scalar `h`.
    pub fn ring_h(&self) -> SkewLaurent {
        SkewLaurent::h(sl2_shift())
    }

    /// The Casimir-style element `(h+1)^2 + 4 f e` as a ring element.
    pub fn ring_casimir(&self) -> SkewLaurent {
        let shift = sl2_shift();
        let h1 = RatFun::from_poly(
            crate::exactfield::Polynomial::h_minus(&GaussianRational::from_int(-1)),
        );
        let square = SkewLaurent::scalar(shift.clone(), &h1 * &h1);
        let fe = self
            .ring_f()
            .mul(&self.ring_e())
            .expect("family elements share a shift")
            .scale_const(&GaussianRational::from_int(4));
        square.add(&fe).expect("family elements share a shift")
    }
}
