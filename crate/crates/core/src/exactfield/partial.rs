//! Partial-fraction normal form over the standard basis.
//!
//! A value is a polynomial part plus, for each pole `t`, coefficients of
//! `1/(h - t)^j` for `j = 1..=order`. This basis makes module elements
//! directly comparable: two rational functions are equal exactly when
//! their expansions agree coefficient by coefficient. Extraction is exact,
//! done by power-series division after shifting the variable to each pole.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::exactfield::factored::{factor_linear, FactoredRatFun};
use crate::exactfield::gaussian::GaussianRational;
use crate::exactfield::poly::Polynomial;
use crate::exactfield::ratfun::RatFun;

/// A rational function written over the partial-fraction basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartialFraction {
    poly: Polynomial,
    poles: BTreeMap<GaussianRational, Vec<GaussianRational>>,
}

impl PartialFraction {
    /// Builds from a polynomial part and per-pole coefficient vectors
    /// (index `j - 1` holds the coefficient of `1/(h - t)^j`), trimming
    /// trailing zeros and dropping empty poles.
    pub fn new(
        poly: Polynomial,
        poles: BTreeMap<GaussianRational, Vec<GaussianRational>>,
    ) -> Self {
        let poles = poles
            .into_iter()
            .filter_map(|(root, mut coeffs)| {
                while coeffs.last().is_some_and(|c| c.is_zero()) {
                    coeffs.pop();
                }
                (!coeffs.is_empty()).then_some((root, coeffs))
            })
            .collect();
        PartialFraction { poly, poles }
    }

    /// The zero function.
    pub fn zero() -> Self {
        PartialFraction::default()
    }

    /// A pure polynomial.
    pub fn from_poly(poly: Polynomial) -> Self {
        PartialFraction { poly, poles: BTreeMap::new() }
    }

    /// A single basis fraction `c / (h - root)^order`.
    pub fn from_pole(root: GaussianRational, order: usize, coeff: GaussianRational) -> Self {
        assert!(order >= 1, "pole orders start at 1");
        let mut coeffs = vec![GaussianRational::zero(); order];
        coeffs[order - 1] = coeff;
        PartialFraction::new(Polynomial::default(), BTreeMap::from([(root, coeffs)]))
    }

    /// Polynomial part.
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// Pole coefficient vectors, keyed by root.
    pub fn poles(&self) -> &BTreeMap<GaussianRational, Vec<GaussianRational>> {
        &self.poles
    }

    /// Coefficient of `1/(h - root)^order`, zero when absent.
    pub fn coeff(&self, root: &GaussianRational, order: usize) -> GaussianRational {
        assert!(order >= 1, "pole orders start at 1");
        self.poles
            .get(root)
            .and_then(|v| v.get(order - 1))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Highest order at a root, zero when the root is not a pole.
    pub fn max_order(&self, root: &GaussianRational) -> usize {
        self.poles.get(root).map_or(0, Vec::len)
    }

    /// Nonzero fraction coefficients as `(root, order, coefficient)`,
    /// sorted by root then order.
    pub fn pole_entries(
        &self,
    ) -> impl Iterator<Item = (&GaussianRational, usize, &GaussianRational)> {
        self.poles.iter().flat_map(|(root, coeffs)| {
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(idx, c)| (root, idx + 1, c))
        })
    }

    /// True when the value is zero.
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero() && self.poles.is_empty()
    }

    /// True when there is no fractional part.
    pub fn is_polynomial(&self) -> bool {
        self.poles.is_empty()
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &GaussianRational) -> Self {
        if k.is_zero() {
            return PartialFraction::zero();
        }
        PartialFraction {
            poly: self.poly.scale(k),
            poles: self
                .poles
                .iter()
                .map(|(root, coeffs)| {
                    (root.clone(), coeffs.iter().map(|c| c * k).collect())
                })
                .collect(),
        }
    }

    /// The composition `f(h + d)`: poles move from `t` to `t - d`.
    pub fn substitute_shift(&self, d: &GaussianRational) -> Self {
        PartialFraction {
            poly: self.poly.shift_variable(d),
            poles: self
                .poles
                .iter()
                .map(|(root, coeffs)| (root - d, coeffs.clone()))
                .collect(),
        }
    }

    /// Collapses back to a reduced rational function.
    pub fn to_ratfun(&self) -> RatFun {
        let mut den = Polynomial::constant(GaussianRational::one());
        for (root, coeffs) in &self.poles {
            den = &den * &Polynomial::h_minus(root).pow(coeffs.len() as u64);
        }
        let mut num = &self.poly * &den;
        for (root, coeffs) in &self.poles {
            let m = coeffs.len();
            let mut other = Polynomial::constant(GaussianRational::one());
            for (s, s_coeffs) in &self.poles {
                if s != root {
                    other = &other * &Polynomial::h_minus(s).pow(s_coeffs.len() as u64);
                }
            }
            let mut in_shifted = vec![GaussianRational::zero(); m];
            for (idx, c) in coeffs.iter().enumerate() {
                in_shifted[m - (idx + 1)] = c.clone();
            }
            let pole_poly = Polynomial::new(in_shifted).shift_variable(&-root);
            num = &num + &(&other * &pole_poly);
        }
        RatFun::new(num, den).expect("denominator is a product of linear factors")
    }

    /// Expands a reduced rational function; fails when the denominator
    /// does not split into linear factors over `Q(i)`.
    pub fn from_ratfun(rf: &RatFun) -> Result<Self> {
        let den_factors = factor_linear(rf.den())?;
        Ok(expand_with_known_denominator(rf, den_factors.factors()))
    }

    /// Multiplies by a polynomial, re-expanding exactly; pole orders drop
    /// where the polynomial vanishes.
    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        let prod = &self.to_ratfun() * &RatFun::from_poly(p.clone());
        if prod.is_zero() {
            return PartialFraction::zero();
        }
        let mut rest = prod.den().clone();
        let mut factors = BTreeMap::new();
        for t in self.poles.keys() {
            let linear = Polynomial::h_minus(t);
            let mut mult = 0i64;
            while let Some(q) = rest.try_exact_div(&linear) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                factors.insert(t.clone(), mult);
            }
        }
        assert_eq!(rest.degree(), Some(0), "polynomial multiples keep the old poles");
        expand_with_known_denominator(&prod, &factors)
    }

    /// Multiplies by a factored rational function.
    ///
    /// Every pole of the product already lies in the union of this value's
    /// poles and the multiplier's, so the expansion never needs a fresh
    /// factorization.
    pub fn mul_factored(&self, w: &FactoredRatFun) -> Self {
        let prod = &self.to_ratfun() * &w.expand();
        if prod.is_zero() {
            return PartialFraction::zero();
        }
        let mut candidates: BTreeSet<GaussianRational> = self.poles.keys().cloned().collect();
        candidates.extend(w.poles().map(|(t, _)| t.clone()));
        let mut rest = prod.den().clone();
        let mut factors = BTreeMap::new();
        for t in candidates {
            let linear = Polynomial::h_minus(&t);
            let mut mult = 0i64;
            while let Some(q) = rest.try_exact_div(&linear) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                factors.insert(t, mult);
            }
        }
        assert_eq!(rest.degree(), Some(0), "product pole outside the known set");
        expand_with_known_denominator(&prod, &factors)
    }
}

/// Partial-fraction expansion when the denominator's factorization is known.
fn expand_with_known_denominator(
    rf: &RatFun,
    den_factors: &BTreeMap<GaussianRational, i64>,
) -> PartialFraction {
    let (poly, proper_num) = rf
        .num()
        .div_rem(rf.den())
        .expect("reduced rational functions have nonzero denominators");
    let mut poles = BTreeMap::new();
    if proper_num.is_zero() {
        return PartialFraction::new(poly, poles);
    }
    for (root, mult) in den_factors {
        let m = *mult as usize;
        let mut other = Polynomial::constant(GaussianRational::one());
        for (s, s_mult) in den_factors {
            if s != root {
                other = &other * &Polynomial::h_minus(s).pow(*s_mult as u64);
            }
        }
        let num_shifted = proper_num.shift_variable(root);
        let other_shifted = other.shift_variable(root);
        let g0 = other_shifted.coeff(0);
        let g0_inv = g0.inv().expect("cofactor does not vanish at its excluded root");
        let mut series: Vec<GaussianRational> = Vec::with_capacity(m);
        for l in 0..m {
            let mut acc = num_shifted.coeff(l);
            for (j, a) in series.iter().enumerate() {
                acc = &acc - &(a * &other_shifted.coeff(l - j));
            }
            series.push(&acc * &g0_inv);
        }
        let coeffs: Vec<GaussianRational> =
            (1..=m).map(|j| series[m - j].clone()).collect();
        poles.insert(root.clone(), coeffs);
    }
    PartialFraction::new(poly, poles)
}

impl Add for &PartialFraction {
    type Output = PartialFraction;

    fn add(self, rhs: Self) -> PartialFraction {
        let mut poles = self.poles.clone();
        for (root, coeffs) in &rhs.poles {
            let entry = poles.entry(root.clone()).or_default();
            if entry.len() < coeffs.len() {
                entry.resize(coeffs.len(), GaussianRational::zero());
            }
            for (idx, c) in coeffs.iter().enumerate() {
                entry[idx] = &entry[idx] + c;
            }
        }
        PartialFraction::new(&self.poly + &rhs.poly, poles)
    }
}

impl Sub for &PartialFraction {
    type Output = PartialFraction;

    fn sub(self, rhs: Self) -> PartialFraction {
        self + &(-rhs)
    }
}

impl Neg for &PartialFraction {
    type Output = PartialFraction;

    fn neg(self) -> PartialFraction {
        self.scale(&(-GaussianRational::one()))
    }
}

impl Add for PartialFraction {
    type Output = PartialFraction;
    fn add(self, rhs: Self) -> PartialFraction {
        &self + &rhs
    }
}

impl Sub for PartialFraction {
    type Output = PartialFraction;
    fn sub(self, rhs: Self) -> PartialFraction {
        &self - &rhs
    }
}

impl Neg for PartialFraction {
    type Output = PartialFraction;
    fn neg(self) -> PartialFraction {
        -&self
    }
}

impl fmt::Display for PartialFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote = false;
        if !self.poly.is_zero() {
            write!(f, "{}", self.poly)?;
            wrote = true;
        }
        for (root, order, coeff) in self.pole_entries() {
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            write!(f, "({coeff})/(h-({root}))")?;
            if order > 1 {
                write!(f, "^{order}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PoleRepr {
    root: GaussianRational,
    order: usize,
    coeff: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct PartialFractionRepr {
    poly: Polynomial,
    poles: Vec<PoleRepr>,
}

impl Serialize for PartialFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = PartialFractionRepr {
            poly: self.poly.clone(),
            poles: self
                .pole_entries()
                .map(|(root, order, coeff)| PoleRepr {
                    root: root.clone(),
                    order,
                    coeff: coeff.clone(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PartialFraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PartialFractionRepr::deserialize(deserializer)?;
        let mut poles: BTreeMap<GaussianRational, Vec<GaussianRational>> = BTreeMap::new();
        for pole in repr.poles {
            if pole.order == 0 {
                return Err(serde::de::Error::custom("pole orders start at 1"));
            }
            let entry = poles.entry(pole.root).or_default();
            if entry.len() < pole.order {
                entry.resize(pole.order, GaussianRational::zero());
            }
            entry[pole.order - 1] = &entry[pole.order - 1] + &pole.coeff;
        }
        Ok(PartialFraction::new(repr.poly, poles))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&n| gi(n)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn simple_poles() {
        let f = rf(&[1], &[2, -3, 1]);
        let pf = PartialFraction::from_ratfun(&f).unwrap();
        assert!(pf.poly().is_zero());
        assert_eq!(pf.coeff(&gi(1), 1), gi(-1));
        assert_eq!(pf.coeff(&gi(2), 1), gi(1));
        assert_eq!(pf.to_ratfun(), f);
    }

    #[test]
    fn higher_order_pole() {
        let f = rf(&[0, 3], &[1, -2, 1]);
        let pf = PartialFraction::from_ratfun(&f).unwrap();
        assert_eq!(pf.coeff(&gi(1), 1), gi(3));
        assert_eq!(pf.coeff(&gi(1), 2), gi(3));
        assert_eq!(pf.to_ratfun(), f);
    }

    #[test]
    fn polynomial_part_is_split_off() {
        let f = rf(&[0, 0, 0, 1], &[-1, 1]);
        let pf = PartialFraction::from_ratfun(&f).unwrap();
        assert_eq!(pf.poly(), &p(&[1, 1, 1]));
        assert_eq!(pf.coeff(&gi(1), 1), gi(1));
        assert_eq!(pf.to_ratfun(), f);
    }

    #[test]
    fn non_splitting_denominator_is_reported() {
        let f = rf(&[1], &[1, 1, 1]);
        assert!(PartialFraction::from_ratfun(&f).is_err());
    }

    #[test]
    fn shift_moves_poles() {
        let pf = PartialFraction::from_ratfun(&rf(&[1, 1], &[-1, 1])).unwrap();
        let shifted = pf.substitute_shift(&gi(2));
        assert_eq!(shifted.to_ratfun(), pf.to_ratfun().shift_variable(&gi(2)));
        assert_eq!(shifted.max_order(&gi(-1)), 1);
    }

    #[test]
    fn multiply_by_factored_functions() {
        let pf = PartialFraction::from_ratfun(&rf(&[1], &[-1, 1])).unwrap();
        let cancel = FactoredRatFun::from_root(gi(1), 1);
        assert_eq!(pf.mul_factored(&cancel), PartialFraction::from_poly(p(&[1])));

        let w = FactoredRatFun::from_parts(gi(1), [(gi(2), 1), (gi(3), -1)]).unwrap();
        let direct = pf.mul_factored(&w);
        let expected =
            PartialFraction::from_ratfun(&(&pf.to_ratfun() * &w.expand())).unwrap();
        assert_eq!(direct, expected);
        assert_eq!(direct.max_order(&gi(3)), 1);
    }

    #[test]
    fn multiply_by_polynomials() {
        let pole = PartialFraction::from_pole(gi(0), 1, gi(1));
        assert_eq!(pole.mul_poly(&p(&[0, 1])), PartialFraction::from_poly(p(&[1])));
        assert_eq!(
            PartialFraction::from_pole(gi(0), 2, gi(1)).mul_poly(&p(&[0, 1])),
            pole
        );

        let den = &Polynomial::h_minus(&gi(-1)) * &Polynomial::h_minus(&gi(1)).pow(3);
        let f = PartialFraction::from_ratfun(
            &RatFun::new(
                Polynomial::constant(GaussianRational::from_ratio(-1, 4)),
                den,
            )
            .unwrap(),
        )
        .unwrap();
        let killer = Polynomial::h_minus(&gi(1)).pow(3).scale(&gi(-4));
        assert_eq!(f.mul_poly(&killer), PartialFraction::from_pole(gi(-1), 1, gi(1)));
    }

    #[test]
    fn addition_merges_poles() {
        let a = PartialFraction::from_pole(gi(1), 2, gi(5));
        let b = PartialFraction::from_pole(gi(1), 2, gi(-5));
        assert!((&a + &b).is_zero());
        let c = &a + &PartialFraction::from_pole(gi(1), 1, gi(2));
        assert_eq!(c.max_order(&gi(1)), 2);
        assert_eq!(c.coeff(&gi(1), 1), gi(2));
    }

    #[test]
    fn reconstruction_matches_on_random_style_inputs() {
        let cases = [
            rf(&[5, 1, 2], &[6, -5, 1]),
            rf(&[1, 0, 0, 0, 1], &[0, 4, 0, 1]),
            rf(&[7], &[0, 0, 0, 1]),
            rf(&[3, 1], &[1]),
        ];
        for f in cases {
            let pf = PartialFraction::from_ratfun(&f).unwrap();
            assert_eq!(pf.to_ratfun(), f, "round trip failed for {f}");
        }
    }

    #[test]
    fn serde_round_trip() {
        let pf = &PartialFraction::from_pole(GaussianRational::i(), 2, gi(3))
            + &PartialFraction::from_poly(p(&[1, 1]));
        let json = serde_json::to_string(&pf).unwrap();
        let back: PartialFraction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pf);
        assert!(json.contains("\"order\":2"));
    }
}
