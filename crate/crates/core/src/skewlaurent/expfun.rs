//! Exponent functions of factored rational functions, organized along
//! the orbits of the shift.
//!
//! Two roots lie on the same orbit when they differ by an integer
//! multiple of the step. Each orbit is recorded relative to its smallest
//! root, giving a finitely supported integer-valued function per orbit.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::exactfield::{FactoredRatFun, GaussianRational};
use crate::skewlaurent::shift::ShiftAut;

/// One orbit's worth of exponents: the root `anchor + k * delta` carries
/// exponent `entries[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub anchor: GaussianRational,
    pub entries: BTreeMap<i64, i64>,
}

impl Orbit {
    /// Sum of all exponents on the orbit.
    pub fn exponent_sum(&self) -> i64 {
        self.entries.values().sum()
    }

    /// The root at offset `k` on this orbit.
    pub fn location(&self, shift: &ShiftAut, k: i64) -> GaussianRational {
        shift.translate(&self.anchor, k)
    }
}

/// Decomposes the exponent function of `f` along shift orbits, in a
/// deterministic order.
pub fn orbits(f: &FactoredRatFun, shift: &ShiftAut) -> Vec<Orbit> {
    let width = shift.width();
    let mut grouped: BTreeMap<(BigRational, BigRational), Vec<(GaussianRational, i64)>> =
        BTreeMap::new();
    for (root, exp) in f.factors() {
        let offset = root.re() - &((root.re() / &width).floor() * &width);
        grouped
            .entry((root.im().clone(), offset))
            .or_default()
            .push((root.clone(), *exp));
    }
    grouped
        .into_values()
        .map(|members| {
            let anchor = members
                .iter()
                .map(|(root, _)| root.clone())
                .min()
                .expect("groups are nonempty");
            let entries = members
                .into_iter()
                .map(|(root, exp)| {
                    let k = shift
                        .steps_between(&anchor, &root)
                        .expect("grouped roots share an orbit");
                    (k, exp)
                })
                .collect();
            Orbit { anchor, entries }
        })
        .collect()
}
