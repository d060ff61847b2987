//! Closed-form descriptions of which fraction patterns occur in a socle.
//!
//! A descriptor lists arithmetic progressions ("rays") of pole locations.
//! Each ray starts at `base + direction * start` and walks in steps of
//! `direction`; the entry at index `i` bounds the pole order allowed at
//! `base + direction * i`. Bounds are stored as an explicit prefix plus an
//! eventual constant tail, so both finite and infinite patterns have a
//! canonical finite form.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactfield::{GaussianRational, PartialFraction, Polynomial};

/// One arithmetic progression of bounded pole orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleRay {
    base: GaussianRational,
    direction: i64,
    start: i64,
    bounds: Vec<u32>,
    tail_bound: u32,
}

impl PoleRay {
    /// Builds a ray from a starting bound and the indices where the bound
    /// drops by one; indices at most `start - 1` are ignored as they would
    /// act before the ray begins.
    pub fn with_drops(
        base: GaussianRational,
        direction: i64,
        start: i64,
        initial: u32,
        drops: &[i64],
    ) -> Self {
        let drops: Vec<i64> = drops.iter().copied().filter(|d| *d >= start).collect();
        let bound_at = |i: i64| -> u32 {
            let fallen = drops.iter().filter(|d| **d <= i).count() as u32;
            initial.saturating_sub(fallen)
        };
        let (bounds, tail) = match drops.iter().max() {
            None => (Vec::new(), initial),
            Some(&last) => (
                (start..=last).map(bound_at).collect(),
                initial.saturating_sub(drops.len() as u32),
            ),
        };
        PoleRay::from_bounds(base, direction, start, bounds, tail)
    }

    /// Builds a ray from explicit bounds (contiguous from `start`) and the
    /// constant bound beyond them, trimming the prefix to canonical form.
    pub fn from_bounds(
        base: GaussianRational,
        direction: i64,
        start: i64,
        mut bounds: Vec<u32>,
        tail_bound: u32,
    ) -> Self {
        assert!(direction != 0, "ray direction must be nonzero");
        while bounds.last() == Some(&tail_bound) {
            bounds.pop();
        }
        PoleRay { base, direction, start, bounds, tail_bound }
    }

    /// The anchor the indexing is relative to.
    pub fn base(&self) -> &GaussianRational {
        &self.base
    }

    /// Step between consecutive locations.
    pub fn direction(&self) -> i64 {
        self.direction
    }

    /// First index carrying a bound.
    pub fn start(&self) -> i64 {
        self.start
    }

    /// The bound shared by all indices beyond the explicit prefix.
    pub fn tail_bound(&self) -> u32 {
        self.tail_bound
    }

    /// Explicit `(index, bound)` pairs before the tail takes over.
    pub fn explicit_bounds(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.bounds.iter().enumerate().map(|(j, b)| (self.start + j as i64, *b))
    }

    /// Pole-order bound at index `i` (zero before `start`).
    pub fn bound_at(&self, i: i64) -> u32 {
        if i < self.start {
            return 0;
        }
        match usize::try_from(i - self.start) {
            Ok(j) if j < self.bounds.len() => self.bounds[j],
            _ => self.tail_bound,
        }
    }

    /// The location `base + direction * i`.
    pub fn location(&self, i: i64) -> GaussianRational {
        self.base.add_int(self.direction * i)
    }

    /// The index of a location on this ray, if it lies on it.
    pub fn index_of(&self, location: &GaussianRational) -> Option<i64> {
        if location.im() != self.base.im() {
            return None;
        }
        let step = BigRational::from_integer(BigInt::from(self.direction));
        let idx = (location.re() - self.base.re()) / step;
        idx.is_integer().then(|| idx.to_integer().to_i64().expect("ray index fits in i64"))
    }

    /// Pole-order bound at an arbitrary location (zero off the ray).
    pub fn max_order_at(&self, location: &GaussianRational) -> u32 {
        self.index_of(location).map_or(0, |i| self.bound_at(i))
    }

    /// True when the bounds are eventually zero.
    pub fn dies_out(&self) -> bool {
        self.tail_bound == 0
    }

    /// True when no index at all carries a positive bound.
    pub fn is_trivial(&self) -> bool {
        self.tail_bound == 0 && self.bounds.iter().all(|b| *b == 0)
    }
}

/// The full fraction-pattern description of a socle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleDescriptor {
    polynomials: bool,
    rays: Vec<PoleRay>,
}

impl SocleDescriptor {
    /// Assembles a descriptor, dropping trivial rays and sorting the rest.
    pub fn new(polynomials: bool, mut rays: Vec<PoleRay>) -> Self {
        rays.retain(|r| !r.is_trivial());
        rays.sort_by(|a, b| {
            (a.base(), a.direction, a.start).cmp(&(b.base(), b.direction, b.start))
        });
        SocleDescriptor { polynomials, rays }
    }

    /// Whether every polynomial belongs to the described space.
    pub fn polynomials(&self) -> bool {
        self.polynomials
    }

    /// The rays, in canonical order.
    pub fn rays(&self) -> &[PoleRay] {
        &self.rays
    }

    /// Largest allowed pole order at a location, over all rays.
    pub fn max_order_at(&self, location: &GaussianRational) -> u32 {
        self.rays.iter().map(|r| r.max_order_at(location)).max().unwrap_or(0)
    }

    /// True when only finitely many locations carry poles.
    pub fn is_bounded(&self) -> bool {
        self.rays.iter().all(PoleRay::dies_out)
    }

    /// Whether an element belongs to the described space: its polynomial
    /// part must be allowed and every pole must fit under some ray's
    /// bound.
    pub fn admits(&self, element: &PartialFraction) -> bool {
        if !self.polynomials && element.poly().degree().is_some() {
            return false;
        }
        element
            .pole_entries()
            .all(|(root, order, _)| order as u64 <= u64::from(self.max_order_at(root)))
    }

    /// Lists the described basis inside a finite window: monomials up to
    /// `max_degree`, then each admitted single pole with ray index at
    /// most `max_shift`, in canonical order.
    pub fn enumerate_window(&self, max_shift: i64, max_degree: usize) -> Vec<PartialFraction> {
        let mut out = Vec::new();
        if self.polynomials {
            for degree in 0..=max_degree {
                out.push(PartialFraction::from_poly(Polynomial::h().pow(degree as u64)));
            }
        }
        let mut patterns = BTreeSet::new();
        for ray in &self.rays {
            for i in ray.start..=max_shift {
                for order in 1..=ray.bound_at(i) {
                    patterns.insert((ray.location(i), order as usize));
                }
            }
        }
        out.extend(patterns.into_iter().map(|(root, order)| {
            PartialFraction::from_pole(root, order, GaussianRational::one())
        }));
        out
    }
}

#[derive(Serialize, Deserialize)]
struct RayRepr {
    base: GaussianRational,
    direction: i64,
    start: i64,
    bounds: Vec<(i64, u32)>,
    #[serde(rename = "tailBound")]
    tail_bound: u32,
}

#[derive(Serialize, Deserialize)]
struct DescriptorRepr {
    polynomials: bool,
    rays: Vec<RayRepr>,
}

impl Serialize for SocleDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = DescriptorRepr {
            polynomials: self.polynomials,
            rays: self
                .rays
                .iter()
                .map(|r| RayRepr {
                    base: r.base.clone(),
                    direction: r.direction,
                    start: r.start,
                    bounds: r.explicit_bounds().collect(),
                    tail_bound: r.tail_bound,
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SocleDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = DescriptorRepr::deserialize(deserializer)?;
        let mut rays = Vec::with_capacity(repr.rays.len());
        for ray in repr.rays {
            if ray.direction == 0 {
                return Err(serde::de::Error::custom("ray direction must be nonzero"));
            }
            for (j, (idx, _)) in ray.bounds.iter().enumerate() {
                if *idx != ray.start + j as i64 {
                    return Err(serde::de::Error::custom(
                        "ray bounds must be contiguous from start",
                    ));
                }
            }
            rays.push(PoleRay::from_bounds(
                ray.base,
                ray.direction,
                ray.start,
                ray.bounds.into_iter().map(|(_, b)| b).collect(),
                ray.tail_bound,
            ));
        }
        Ok(SocleDescriptor::new(repr.polynomials, rays))
    }
}
