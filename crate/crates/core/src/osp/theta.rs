//! The quotient onto the Weyl algebra and ungraded modules pulled back
//! through it.
//!
//! Scaling the odd generators by the square root of two sends their
//! images to the Weyl generators `a` and `-b`; all defining identities
//! are quadratic in the odd generators, so the scaling constant cancels
//! and every check stays inside the Gaussian rationals. The super-Casimir
//! maps to zero, which is why a Weyl module pulled back along the
//! quotient carries an osp structure on which the super-Casimir acts
//! trivially; the weight element acts as multiplication by `(h+1)/2`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactfield::{GaussianRational, PartialFraction, Polynomial, RatFun};
use crate::skewlaurent::SkewLaurent;
use crate::weyl::{ring_a, ring_b, weyl_shift, WeylModule};

/// Verifies the quotient identities in the skew Laurent ring: the scaled
/// odd images `a` and `-b` reproduce the even generators, the weight, and
/// kill the super-Casimir.
pub fn theta_quotient_check() -> bool {
    let shift = weyl_shift();
    let a = ring_a();
    let b = ring_b();
    let one = SkewLaurent::one(shift.clone());
    let half = GaussianRational::from_ratio(1, 2);

    let ab = a.mul(&b).expect("same shift");
    let ba = b.mul(&a).expect("same shift");
    if ab.sub(&ba).expect("same shift") != one {
        return false;
    }

    // Images of the scaled odd generators.
    let p_scaled = a.clone();
    let q_scaled = b.scale_const(&GaussianRational::from_int(-1));

    // Even images: e -> a^2/2, f -> -b^2/2, h -> -(ab+ba)/2.
    let theta_e = a.pow(2).expect("same shift").scale_const(&half);
    let theta_f = b
        .pow(2)
        .expect("same shift")
        .scale_const(&-&half);
    let theta_h = ab.add(&ba).expect("same shift").scale_const(&-&half);

    // The weight image is multiplication by (h+1)/2.
    let expected_h = SkewLaurent::scalar(
        shift.clone(),
        RatFun::from_poly(Polynomial::h_minus(&GaussianRational::from_int(-1)).scale(&half)),
    );
    if theta_h != expected_h {
        return false;
    }

    // Quadratic identities in the scaled odd images.
    let pq = p_scaled.mul(&q_scaled).expect("same shift");
    let qp = q_scaled.mul(&p_scaled).expect("same shift");
    let two = GaussianRational::from_int(2);
    if p_scaled.pow(2).expect("same shift") != theta_e.scale_const(&two) {
        return false;
    }
    if q_scaled.pow(2).expect("same shift")
        != theta_f.scale_const(&GaussianRational::from_int(-2))
    {
        return false;
    }
    if pq.add(&qp).expect("same shift") != theta_h.scale_const(&two) {
        return false;
    }
    // The super-Casimir image: pq - qp + 1 (doubled) must vanish.
    if !pq.sub(&qp).expect("same shift").add(&one).expect("same shift").is_zero() {
        return false;
    }

    // The even images still present the sl2 relations.
    let comm_he = theta_h.commutator(&theta_e).expect("same shift");
    let comm_hf = theta_h.commutator(&theta_f).expect("same shift");
    let comm_ef = theta_e.commutator(&theta_f).expect("same shift");
    if comm_he != theta_e.scale_const(&two) {
        return false;
    }
    if comm_hf != theta_f.scale_const(&GaussianRational::from_int(-2)) {
        return false;
    }
    if comm_ef != theta_h {
        return false;
    }

    // The weight raises and lowers the odd images by one step.
    let comm_hp = theta_h.commutator(&p_scaled).expect("same shift");
    let comm_hq = theta_h.commutator(&q_scaled).expect("same shift");
    comm_hp == p_scaled && comm_hq == q_scaled.scale_const(&GaussianRational::from_int(-1))
}

/// A rank-one Weyl module viewed as an ungraded osp(1|2) module through
/// the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UngradedOspModule {
    inner: WeylModule,
}

impl UngradedOspModule {
    /// Tags a Weyl module as an ungraded osp module.
    pub fn new(inner: WeylModule) -> Self {
        UngradedOspModule { inner }
    }

    /// The underlying Weyl module.
    pub fn weyl(&self) -> &WeylModule {
        &self.inner
    }

    /// The scaled odd raising action, inherited from the Weyl raising
    /// generator.
    pub fn act_p_scaled(&self, v: &PartialFraction) -> PartialFraction {
        self.inner.act_a(v)
    }

    /// The scaled odd lowering action, the negated Weyl lowering
    /// generator.
    pub fn act_q_scaled(&self, v: &PartialFraction) -> PartialFraction {
        self.inner.act_b(v).scale(&GaussianRational::from_int(-1))
    }

    /// The super-Casimir action; identically zero on ungraded modules.
    pub fn scasimir_apply(&self, v: &PartialFraction) -> PartialFraction {
        let pq = self.act_p_scaled(&self.act_q_scaled(v));
        let qp = self.act_q_scaled(&self.act_p_scaled(v));
        (&(&pq - &qp) + v).scale(&GaussianRational::from_ratio(1, 2))
    }

    /// The weight action `-(a b)(v) + v/2`, which is multiplication by
    /// `(h+1)/2`.
    pub fn act_h(&self, v: &PartialFraction) -> PartialFraction {
        let ab = self.inner.act_a(&self.inner.act_b(v));
        &v.scale(&GaussianRational::from_ratio(1, 2)) - &ab
    }

    /// Ungraded modules are isomorphic exactly when their Weyl parameters
    /// are.
    pub fn is_isomorphic(&self, other: &UngradedOspModule) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }
}

#[derive(Serialize, Deserialize)]
struct UngradedRepr {
    u: crate::exactfield::FactoredRatFun,
}

impl Serialize for UngradedOspModule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        UngradedRepr { u: self.inner.u().clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UngradedOspModule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = UngradedRepr::deserialize(deserializer)?;
        Ok(UngradedOspModule::new(WeylModule::new(repr.u)))
    }
}
