//! Brute-force closure oracle for socle descriptors.
//!
//! The descriptors make exact claims about which pole patterns appear in
//! the span of the polynomials under the module operators. This module
//! re-derives those patterns from scratch: starting from monomial seeds
//! it repeatedly applies the raising and lowering operators and
//! multiplication by the linear factors of the window lattice, keeps the
//! results in an exactly row-reduced basis, and reports every monomial
//! and pole pattern whose basis vector lands in the generated row space.
//!
//! Images growing past the window (a pole off the lattice, an order above
//! the cap, or a polynomial part above the degree cap) are discarded
//! whole — a conservative policy that can only under-approximate, never
//! invent a pattern. The sweep runs to a fixed point; if the fixed point
//! is not reached within the allowed number of rounds the window is
//! reported as too small. All pivoting follows the canonical coordinate
//! order (monomials by degree, then poles by root and order), so runs are
//! deterministic.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactfield::{FactoredRatFun, GaussianRational, PartialFraction, Polynomial};
use crate::skewlaurent::ShiftAut;
use crate::sl2::{sl2_shift, Sl2Module, SocleDescriptor};
use crate::weyl::{weyl_shift, WeylModule};

/// Truncation window for a closure run.
#[derive(Debug, Clone, Copy)]
pub struct OracleWindow {
    /// How many shift steps from each parameter root the lattice extends.
    pub max_shift: i64,
    /// Highest monomial degree seeded and reported.
    pub max_degree: usize,
    /// Maximum number of sweeps before giving up.
    pub rounds: u32,
}

/// Everything the oracle certified as reachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    monomials: BTreeSet<usize>,
    patterns: BTreeSet<(GaussianRational, usize)>,
    rounds_used: u32,
}

impl ClosureReport {
    /// Degrees of the certified monomials.
    pub fn monomials(&self) -> &BTreeSet<usize> {
        &self.monomials
    }

    /// Certified pole patterns as `(location, order)` pairs.
    pub fn patterns(&self) -> &BTreeSet<(GaussianRational, usize)> {
        &self.patterns
    }

    /// Sweeps performed before stabilization.
    pub fn rounds_used(&self) -> u32 {
        self.rounds_used
    }

    /// The certified basis in canonical order: monomials, then single
    /// poles.
    pub fn basis(&self) -> Vec<PartialFraction> {
        let mut out: Vec<PartialFraction> = self
            .monomials
            .iter()
            .map(|d| PartialFraction::from_poly(Polynomial::h().pow(*d as u64)))
            .collect();
        out.extend(self.patterns.iter().map(|(root, order)| {
            PartialFraction::from_pole(root.clone(), *order, GaussianRational::one())
        }));
        out
    }

    /// The certified patterns at the given locations.
    pub fn patterns_on(
        &self,
        locations: &BTreeSet<GaussianRational>,
    ) -> BTreeSet<(GaussianRational, usize)> {
        self.patterns
            .iter()
            .filter(|(root, _)| locations.contains(root))
            .cloned()
            .collect()
    }

    /// Whether any certified pattern sits at one of the given locations.
    pub fn touches(&self, locations: &BTreeSet<GaussianRational>) -> bool {
        self.patterns.iter().any(|(root, _)| locations.contains(root))
    }
}

/// Outcome of checking a closure run against a descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    /// Patterns the descriptor admits but the oracle did not certify.
    pub missing: Vec<(GaussianRational, usize)>,
    /// Patterns the oracle certified but the descriptor rejects.
    pub extra: Vec<(GaussianRational, usize)>,
    /// Sweeps the oracle needed.
    pub rounds_used: u32,
}

impl OracleComparison {
    /// Whether descriptor and oracle agree exactly on the compared
    /// locations.
    pub fn matched(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// The lattice of locations reachable from the parameter's roots within
/// `max_shift` steps of the shift in either direction.
pub fn pole_lattice(
    u: &FactoredRatFun,
    shift: &ShiftAut,
    max_shift: i64,
) -> BTreeSet<GaussianRational> {
    let mut out = BTreeSet::new();
    for (root, _) in u.factors() {
        for k in -max_shift..=max_shift {
            out.insert(shift.translate(root, k));
        }
    }
    out
}

/// Every pattern a descriptor admits at the given locations.
pub fn descriptor_patterns_on(
    descriptor: &SocleDescriptor,
    locations: &BTreeSet<GaussianRational>,
) -> BTreeSet<(GaussianRational, usize)> {
    let mut out = BTreeSet::new();
    for loc in locations {
        for order in 1..=descriptor.max_order_at(loc) as usize {
            out.insert((loc.clone(), order));
        }
    }
    out
}

/// Compares certified patterns against a descriptor on the interior of
/// the window (one step of margin from the clipped boundary).
pub fn compare_patterns(
    report: &ClosureReport,
    descriptor: &SocleDescriptor,
    interior: &BTreeSet<GaussianRational>,
) -> OracleComparison {
    let claimed = descriptor_patterns_on(descriptor, interior);
    let found = report.patterns_on(interior);
    OracleComparison {
        missing: claimed.difference(&found).cloned().collect(),
        extra: found.difference(&claimed).cloned().collect(),
        rounds_used: report.rounds_used(),
    }
}

/// Runs the closure oracle for an sl2 module and compares against its
/// descriptor on the window interior.
pub fn check_sl2_descriptor(
    module: &Sl2Module,
    descriptor: &SocleDescriptor,
    window: &OracleWindow,
) -> Result<OracleComparison> {
    let report = closure_over_sl2(module, window)?;
    let interior = pole_lattice(module.u(), &sl2_shift(), window.max_shift - 1);
    Ok(compare_patterns(&report, descriptor, &interior))
}

/// Runs the closure oracle for a Weyl module and compares against its
/// descriptor on the window interior.
pub fn check_weyl_descriptor(
    module: &WeylModule,
    descriptor: &SocleDescriptor,
    window: &OracleWindow,
) -> Result<OracleComparison> {
    let report = closure_over_weyl(module, window)?;
    let interior = pole_lattice(module.u(), &weyl_shift(), window.max_shift - 1);
    Ok(compare_patterns(&report, descriptor, &interior))
}

/// Brute-force closure for an sl2 module: seeds the monomials and closes
/// under the raising and lowering actions and linear-factor
/// multiplications.
pub fn closure_over_sl2(module: &Sl2Module, window: &OracleWindow) -> Result<ClosureReport> {
    let lattice = pole_lattice(module.u(), &sl2_shift(), window.max_shift);
    let raising = module.clone();
    let lowering = module.clone();
    let mut generators: Vec<Box<dyn Fn(&PartialFraction) -> PartialFraction>> = vec![
        Box::new(move |v| raising.act_e(v)),
        Box::new(move |v| lowering.act_f(v)),
    ];
    push_linear_multiplications(&mut generators, &lattice);
    run_closure(module.u(), generators, lattice, window)
}

/// Brute-force closure for a Weyl module, with the Weyl raising and
/// lowering actions as generators.
pub fn closure_over_weyl(module: &WeylModule, window: &OracleWindow) -> Result<ClosureReport> {
    let lattice = pole_lattice(module.u(), &weyl_shift(), window.max_shift);
    let raising = module.clone();
    let lowering = module.clone();
    let mut generators: Vec<Box<dyn Fn(&PartialFraction) -> PartialFraction>> = vec![
        Box::new(move |v| raising.act_a(v)),
        Box::new(move |v| lowering.act_b(v)),
    ];
    push_linear_multiplications(&mut generators, &lattice);
    run_closure(module.u(), generators, lattice, window)
}

fn push_linear_multiplications(
    generators: &mut Vec<Box<dyn Fn(&PartialFraction) -> PartialFraction>>,
    lattice: &BTreeSet<GaussianRational>,
) {
    for root in lattice {
        let linear = Polynomial::h_minus(root);
        generators.push(Box::new(move |v| v.mul_poly(&linear)));
    }
}

/// A coordinate of the truncated basis; the derived order is the pivot
/// order (monomials by degree, then poles by root and order).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Coord {
    Mono(usize),
    Pole(GaussianRational, usize),
}

type Vector = BTreeMap<Coord, GaussianRational>;

fn vectorize(pf: &PartialFraction) -> Vector {
    let mut out = Vector::new();
    for (degree, coeff) in pf.poly().coeffs().iter().enumerate() {
        if !coeff.is_zero() {
            out.insert(Coord::Mono(degree), coeff.clone());
        }
    }
    for (root, order, coeff) in pf.pole_entries() {
        out.insert(Coord::Pole(root.clone(), order), coeff.clone());
    }
    out
}

fn subtract_scaled(target: &mut Vector, source: &Vector, factor: &GaussianRational) {
    for (coord, coeff) in source {
        let delta = coeff * factor;
        match target.get_mut(coord) {
            Some(existing) => {
                let updated = &*existing - &delta;
                if updated.is_zero() {
                    target.remove(coord);
                } else {
                    *existing = updated;
                }
            }
            None => {
                target.insert(coord.clone(), -&delta);
            }
        }
    }
}

/// Rows kept in reduced echelon form over the exact coordinates, sorted
/// by pivot.
#[derive(Default)]
struct RowSpace {
    rows: Vec<Vector>,
}

impl RowSpace {
    fn reduce(&self, vector: &mut Vector) {
        for row in &self.rows {
            let pivot = row.keys().next().expect("rows are nonzero");
            if let Some(factor) = vector.get(pivot).cloned() {
                subtract_scaled(vector, row, &factor);
            }
        }
    }

    /// Inserts a vector, returning true when it enlarged the span.
    fn insert(&mut self, mut vector: Vector) -> bool {
        self.reduce(&mut vector);
        if vector.is_empty() {
            return false;
        }
        let lead = vector.keys().next().expect("nonzero").clone();
        let lead_coeff = vector[&lead].clone();
        let inv = lead_coeff.inv().expect("leading coefficient is nonzero");
        for coeff in vector.values_mut() {
            *coeff = &*coeff * &inv;
        }
        for row in &mut self.rows {
            if let Some(factor) = row.get(&lead).cloned() {
                subtract_scaled(row, &vector, &factor);
            }
        }
        let position = self
            .rows
            .partition_point(|row| row.keys().next().expect("nonzero") < &lead);
        self.rows.insert(position, vector);
        true
    }

    fn contains(&self, vector: &Vector) -> bool {
        let mut copy = vector.clone();
        self.reduce(&mut copy);
        copy.is_empty()
    }
}

fn within_window(
    pf: &PartialFraction,
    lattice: &BTreeSet<GaussianRational>,
    max_order: usize,
    degree_cap: usize,
) -> bool {
    if let Some(degree) = pf.poly().degree() {
        if degree > degree_cap {
            return false;
        }
    }
    pf.pole_entries()
        .all(|(root, order, _)| order <= max_order && lattice.contains(root))
}

fn run_closure(
    u: &FactoredRatFun,
    generators: Vec<Box<dyn Fn(&PartialFraction) -> PartialFraction>>,
    lattice: BTreeSet<GaussianRational>,
    window: &OracleWindow,
) -> Result<ClosureReport> {
    let max_order = u
        .factors()
        .values()
        .map(|exp| exp.unsigned_abs() as usize)
        .max()
        .unwrap_or(0)
        + 2;
    let (alpha, beta) = u.split_pos_neg();
    let degree_cap = window.max_degree
        + alpha.degree().unwrap_or(0)
        + beta.degree().unwrap_or(0)
        + 2;

    let mut space = RowSpace::default();
    for degree in 0..=window.max_degree {
        space.insert(vectorize(&PartialFraction::from_poly(
            Polynomial::h().pow(degree as u64),
        )));
    }

    // Generator images of single coordinates, cached; rows are linear
    // combinations of coordinates, so their images assemble from these.
    let mut cache: BTreeMap<(usize, Coord), PartialFraction> = BTreeMap::new();
    let coordinate_pf = |coord: &Coord| -> PartialFraction {
        match coord {
            Coord::Mono(degree) => {
                PartialFraction::from_poly(Polynomial::h().pow(*degree as u64))
            }
            Coord::Pole(root, order) => {
                PartialFraction::from_pole(root.clone(), *order, GaussianRational::one())
            }
        }
    };

    let mut rounds_used = 0;
    loop {
        if rounds_used == window.rounds {
            return Err(Error::WindowTooSmall { rounds: window.rounds });
        }
        rounds_used += 1;
        let snapshot: Vec<Vector> = space.rows.clone();
        let mut grew = false;
        for row in &snapshot {
            for (gen_index, generator) in generators.iter().enumerate() {
                let mut image = PartialFraction::zero();
                for (coord, coeff) in row {
                    let key = (gen_index, coord.clone());
                    if !cache.contains_key(&key) {
                        let value = generator(&coordinate_pf(coord));
                        cache.insert(key.clone(), value);
                    }
                    image = &image + &cache[&key].scale(coeff);
                }
                if image.is_zero() || !within_window(&image, &lattice, max_order, degree_cap) {
                    continue;
                }
                if space.insert(vectorize(&image)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    let monomials = (0..=window.max_degree)
        .filter(|degree| {
            space.contains(&vectorize(&PartialFraction::from_poly(
                Polynomial::h().pow(*degree as u64),
            )))
        })
        .collect();
    let patterns = lattice
        .iter()
        .flat_map(|root| (1..=max_order).map(move |order| (root.clone(), order)))
        .filter(|(root, order)| {
            space.contains(&vectorize(&PartialFraction::from_pole(
                root.clone(),
                *order,
                GaussianRational::one(),
            )))
        })
        .collect();
    Ok(ClosureReport { monomials, patterns, rounds_used })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::socle_descriptor;
    use crate::weyl;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn window(max_shift: i64) -> OracleWindow {
        OracleWindow {
            max_shift,
            max_degree: 4,
            rounds: (max_shift + 10) as u32,
        }
    }

    #[test]
    fn endless_descending_family_is_reproduced() {
        let module = Sl2Module::from_r1(gi(-1), FactoredRatFun::from_root(gi(2), 1));
        let w = window(4);
        let report = closure_over_sl2(&module, &w).unwrap();
        for k in 0..=3i64 {
            assert!(
                report.patterns().contains(&(gi(-2 * k), 1)),
                "pole at {} must be certified",
                -2 * k
            );
        }
        assert!(!report.patterns().contains(&(gi(2), 1)), "no pole at the root itself");
        let check = check_sl2_descriptor(&module, &socle_descriptor(&module), &w).unwrap();
        assert!(check.matched(), "missing {:?} extra {:?}", check.missing, check.extra);
    }

    #[test]
    fn single_fraction_family_is_reproduced() {
        let module = Sl2Module::from_r1(gi(-1), FactoredRatFun::from_root(gi(3), 1));
        let w = window(5);
        let report = closure_over_sl2(&module, &w).unwrap();
        assert_eq!(
            report.patterns().iter().cloned().collect::<Vec<_>>(),
            vec![(gi(1), 1)],
            "exactly one certified pole"
        );
        let check = check_sl2_descriptor(&module, &socle_descriptor(&module), &w).unwrap();
        assert!(check.matched());
        assert_eq!(report.monomials().len(), 5, "all seeded monomials certified");
    }

    #[test]
    fn triple_root_family_is_reproduced() {
        let module = Sl2Module::from_r1(gi(-1), FactoredRatFun::from_root(gi(3), 3));
        let w = OracleWindow { max_shift: 4, max_degree: 4, rounds: 16 };
        let report = closure_over_sl2(&module, &w).unwrap();
        assert!(report.patterns().contains(&(gi(1), 1)));
        assert!(report.patterns().contains(&(gi(1), 2)));
        assert!(report.patterns().contains(&(gi(1), 3)));
        assert!(report.patterns().contains(&(gi(-1), 1)));
        assert!(!report.patterns().contains(&(gi(-1), 2)));
        let check = check_sl2_descriptor(&module, &socle_descriptor(&module), &w).unwrap();
        assert!(check.matched(), "missing {:?} extra {:?}", check.missing, check.extra);
    }

    #[test]
    fn weyl_families_are_reproduced() {
        let cases = [
            FactoredRatFun::from_root(gi(0), 1),
            FactoredRatFun::from_root(gi(0), 2),
            FactoredRatFun::from_root(GaussianRational::from_ratio(1, 2), -1),
        ];
        for u in cases {
            let module = WeylModule::new(u);
            let w = window(4);
            let check = check_weyl_descriptor(
                &module,
                &weyl::socle_descriptor(&module),
                &w,
            )
            .unwrap();
            assert!(
                check.matched(),
                "parameter {}: missing {:?} extra {:?}",
                module.u(),
                check.missing,
                check.extra
            );
        }
    }

    #[test]
    fn simple_weyl_module_has_no_fraction_patterns() {
        let module = WeylModule::new(FactoredRatFun::from_root(gi(0), 1));
        let report = closure_over_weyl(&module, &window(4)).unwrap();
        assert!(report.patterns().is_empty());
        assert_eq!(report.monomials().len(), 5);
    }

    #[test]
    fn exhausted_rounds_report_the_window() {
        let module = Sl2Module::from_r1(gi(-1), FactoredRatFun::from_root(gi(2), 1));
        let w = OracleWindow { max_shift: 6, max_degree: 4, rounds: 2 };
        match closure_over_sl2(&module, &w) {
            Err(Error::WindowTooSmall { rounds: 2 }) => {}
            other => panic!("expected a too-small window, got {:?}", other.map(|r| r.rounds_used())),
        }
    }

    #[test]
    fn corrupted_descriptor_is_detected() {
        let module = Sl2Module::from_r1(gi(-1), FactoredRatFun::from_root(gi(3), 1));
        let other = Sl2Module::from_r1(gi(-1), FactoredRatFun::from_root(gi(3), 3));
        let w = window(4);
        let check =
            check_sl2_descriptor(&module, &socle_descriptor(&other), &w).unwrap();
        assert!(!check.matched(), "wrong descriptor must be rejected");
        assert!(!check.missing.is_empty());
    }
}
