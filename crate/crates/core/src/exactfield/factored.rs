//! Rational functions kept as a constant times linear factors.
//!
//! The form `c * prod (h - t)^{m(t)}` with distinct roots `t` and nonzero
//! integer exponents `m(t)` is the working representation for module
//! parameters: multiplication is exponent addition, and the shift
//! automorphism acts by translating roots. Conversion from an expanded
//! rational function goes through an exact linear factorizer based on the
//! rational root theorem over the Gaussian integers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::gaussian::GaussianRational;
use crate::exactfield::gaussint::GaussInt;
use crate::exactfield::poly::Polynomial;
use crate::exactfield::ratfun::RatFun;

/// A nonzero rational function as `c * prod (h - root)^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRatFun {
    c: GaussianRational,
    factors: BTreeMap<GaussianRational, i64>,
}

impl FactoredRatFun {
    /// Builds a factored function; the constant must be nonzero and zero
    /// exponents are dropped.
    pub fn new(c: GaussianRational, factors: BTreeMap<GaussianRational, i64>) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidParameter(
                "factored rational functions are nonzero; the constant cannot be 0".into(),
            ));
        }
        let factors = factors.into_iter().filter(|(_, e)| *e != 0).collect();
        Ok(FactoredRatFun { c, factors })
    }

    /// Builds from `(root, exponent)` pairs, merging repeated roots.
    pub fn from_parts(
        c: GaussianRational,
        parts: impl IntoIterator<Item = (GaussianRational, i64)>,
    ) -> Result<Self> {
        let mut factors: BTreeMap<GaussianRational, i64> = BTreeMap::new();
        for (root, exp) in parts {
            *factors.entry(root).or_insert(0) += exp;
        }
        FactoredRatFun::new(c, factors)
    }

    /// The constant function one.
    pub fn one() -> Self {
        FactoredRatFun { c: GaussianRational::one(), factors: BTreeMap::new() }
    }

    /// The nonzero constant `c`.
    pub fn constant(c: GaussianRational) -> Result<Self> {
        FactoredRatFun::new(c, BTreeMap::new())
    }

    /// The single factor `(h - root)^exp`.
    pub fn from_root(root: GaussianRational, exp: i64) -> Self {
        FactoredRatFun::from_parts(GaussianRational::one(), [(root, exp)])
            .expect("constant one is nonzero")
    }

    /// Leading constant.
    pub fn c(&self) -> &GaussianRational {
        &self.c
    }

    /// Root-to-exponent map, with no zero exponents.
    pub fn factors(&self) -> &BTreeMap<GaussianRational, i64> {
        &self.factors
    }

    /// Exponent of `(h - root)`, zero when absent.
    pub fn exponent(&self, root: &GaussianRational) -> i64 {
        self.factors.get(root).copied().unwrap_or(0)
    }

    /// Roots that occur with negative exponent.
    pub fn poles(&self) -> impl Iterator<Item = (&GaussianRational, i64)> {
        self.factors.iter().filter(|(_, e)| **e < 0).map(|(t, e)| (t, -e))
    }

    /// True for a constant (possibly not one).
    pub fn is_constant(&self) -> bool {
        self.factors.is_empty()
    }

    /// True for the constant function one.
    pub fn is_one(&self) -> bool {
        self.c.is_one() && self.factors.is_empty()
    }

    /// Product of two factored functions.
    pub fn mul(&self, rhs: &FactoredRatFun) -> Self {
        let mut factors = self.factors.clone();
        for (root, exp) in &rhs.factors {
            let entry = factors.entry(root.clone()).or_insert(0);
            *entry += exp;
            if *entry == 0 {
                factors.remove(root);
            }
        }
        FactoredRatFun { c: &self.c * &rhs.c, factors }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Self {
        FactoredRatFun {
            c: self.c.inv().expect("constant is nonzero"),
            factors: self.factors.iter().map(|(t, e)| (t.clone(), -e)).collect(),
        }
    }

    /// Quotient of two factored functions.
    pub fn div(&self, rhs: &FactoredRatFun) -> Self {
        self.mul(&rhs.inv())
    }

    /// Integer power.
    pub fn pow_i64(&self, n: i64) -> Self {
        if n == 0 {
            return FactoredRatFun::one();
        }
        let mut c = self.c.clone();
        let mut acc = GaussianRational::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &c;
        }
        c = if n < 0 { acc.inv().expect("constant is nonzero") } else { acc };
        FactoredRatFun {
            c,
            factors: self.factors.iter().map(|(t, e)| (t.clone(), e * n)).collect(),
        }
    }

    /// The composition `f(h + d)`, which moves every root `t` to `t - d`.
    pub fn substitute_shift(&self, d: &GaussianRational) -> Self {
        FactoredRatFun {
            c: self.c.clone(),
            factors: self.factors.iter().map(|(t, e)| (t - d, *e)).collect(),
        }
    }

    /// The same function with the constant negated.
    pub fn negate(&self) -> Self {
        FactoredRatFun { c: -&self.c, factors: self.factors.clone() }
    }

    /// Splits into monic numerator and denominator polynomials, discarding
    /// the constant: the positive exponents build the first polynomial, the
    /// negated negative exponents the second.
    pub fn split_pos_neg(&self) -> (Polynomial, Polynomial) {
        let mut num = Polynomial::constant(GaussianRational::one());
        let mut den = Polynomial::constant(GaussianRational::one());
        for (root, exp) in &self.factors {
            let power = Polynomial::h_minus(root).pow(exp.unsigned_abs());
            if *exp > 0 {
                num = &num * &power;
            } else {
                den = &den * &power;
            }
        }
        (num, den)
    }

    /// Expands to a reduced numerator/denominator pair.
    pub fn expand(&self) -> RatFun {
        let mut num = Polynomial::constant(self.c.clone());
        let mut den = Polynomial::constant(GaussianRational::one());
        for (root, exp) in &self.factors {
            let power = Polynomial::h_minus(root).pow(exp.unsigned_abs());
            if *exp > 0 {
                num = &num * &power;
            } else {
                den = &den * &power;
            }
        }
        RatFun::new(num, den).expect("denominator is a product of nonzero factors")
    }

    /// Factors a reduced rational function into linear factors.
    pub fn factor(rf: &RatFun) -> Result<Self> {
        let num = factor_linear(rf.num())?;
        let den = factor_linear(rf.den())?;
        Ok(num.div(&den))
    }
}

impl fmt::Display for FactoredRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.c.is_one() || self.factors.is_empty() {
            let text = self.c.to_string();
            if text.contains('+') || text.contains('-') {
                write!(f, "({text})")?;
            } else {
                write!(f, "{text}")?;
            }
            wrote = true;
        }
        for (root, exp) in &self.factors {
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            if root.is_zero() {
                write!(f, "h")?;
            } else if root.is_real() && root.re().is_positive() {
                write!(f, "(h-{root})")?;
            } else if root.is_real() {
                write!(f, "(h+{})", -root)?;
            } else {
                write!(f, "(h-({root}))")?;
            }
            if *exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FactorRepr {
    root: GaussianRational,
    exp: i64,
}

#[derive(Serialize, Deserialize)]
struct FactoredRepr {
    c: GaussianRational,
    factors: Vec<FactorRepr>,
}

impl Serialize for FactoredRatFun {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = FactoredRepr {
            c: self.c.clone(),
            factors: self
                .factors
                .iter()
                .map(|(root, exp)| FactorRepr { root: root.clone(), exp: *exp })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FactoredRatFun {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FactoredRepr::deserialize(deserializer)?;
        FactoredRatFun::from_parts(repr.c, repr.factors.into_iter().map(|f| (f.root, f.exp)))
            .map_err(serde::de::Error::custom)
    }
}

/// Clears denominators and content, returning primitive `Z[i]` coefficients.
fn primitive_coeffs(p: &Polynomial) -> Vec<GaussInt> {
    let mut scale = BigInt::one();
    for c in p.coeffs() {
        scale = scale.lcm(c.re().denom()).lcm(c.im().denom());
    }
    let scale = BigRational::from_integer(scale);
    let integral: Vec<GaussInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let re = c.re() * &scale;
            let im = c.im() * &scale;
            debug_assert!(re.is_integer() && im.is_integer());
            GaussInt::new(re.to_integer(), im.to_integer())
        })
        .collect();
    let mut content = GaussInt::new(BigInt::zero(), BigInt::zero());
    for c in &integral {
        content = content.gcd(c);
    }
    integral
        .into_iter()
        .map(|c| {
            let (q, r) = c.rounded_div(&content);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// Candidate roots in `Q(i)` allowed by the rational root theorem.
fn root_candidates(p: &Polynomial) -> BTreeSet<GaussianRational> {
    let prim = primitive_coeffs(p);
    let trailing = prim.first().expect("nonzero polynomial").clone();
    let leading = prim.last().expect("nonzero polynomial").clone();
    let to_field = |g: &GaussInt| {
        GaussianRational::new(
            BigRational::from_integer(g.re.clone()),
            BigRational::from_integer(g.im.clone()),
        )
    };
    let mut candidates = BTreeSet::new();
    for d_num in trailing.divisors_up_to_units() {
        for d_den in leading.divisors_up_to_units() {
            let base = &to_field(&d_num) / &to_field(&d_den);
            for unit in GaussInt::units() {
                candidates.insert(&base * &to_field(&unit));
            }
        }
    }
    candidates
}

/// Splits a nonzero polynomial into linear factors over `Q(i)`.
///
/// Returns the factored form, or [`Error::NonSplittingFactor`] carrying the
/// monic cofactor that has no roots in `Q(i)`.
pub fn factor_linear(p: &Polynomial) -> Result<FactoredRatFun> {
    if p.is_zero() {
        return Err(Error::InvalidParameter("cannot factor the zero polynomial".into()));
    }
    let c = p.leading_coeff().expect("nonzero polynomial").clone();
    let mut factors: BTreeMap<GaussianRational, i64> = BTreeMap::new();
    let zero_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut rest = Polynomial::new(p.coeffs()[zero_mult..].to_vec());
    if zero_mult > 0 {
        factors.insert(GaussianRational::zero(), zero_mult as i64);
    }
    if rest.degree() == Some(0) {
        return FactoredRatFun::new(c, factors);
    }
    for t in root_candidates(&rest) {
        let linear = Polynomial::h_minus(&t);
        let mut mult = 0i64;
        while let Some(quotient) = rest.try_exact_div(&linear) {
            rest = quotient;
            mult += 1;
        }
        if mult > 0 {
            factors.insert(t, mult);
        }
        if rest.degree() == Some(0) {
            break;
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::NonSplittingFactor { remainder: rest.monic().0.to_string() });
    }
    FactoredRatFun::new(c, factors)
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

    #[test]
    fn splits_into_monic_numerator_and_denominator() {
        let f = FactoredRatFun::from_parts(gi(3), [(gi(0), -2)]).unwrap();
        assert_eq!(f.split_pos_neg(), (p(&[1]), p(&[0, 0, 1])));
        let g = FactoredRatFun::from_parts(gi(1), [(gi(3), 3), (gi(1), -1)]).unwrap();
        let (num, den) = g.split_pos_neg();
        assert_eq!(num, Polynomial::h_minus(&gi(3)).pow(3));
        assert_eq!(den, p(&[-1, 1]));
        assert_eq!(
            FactoredRatFun::factor(&RatFun::new(num.scale(g.c()), den).unwrap()).unwrap(),
            g
        );
    }

    #[test]
    fn factors_real_roots_with_multiplicity() {
        let poly = &p(&[-1, 0, 1]) * &p(&[-1, 1]);
        let f = factor_linear(&poly.scale(&gi(3))).unwrap();
        assert_eq!(f.c(), &gi(3));
        assert_eq!(f.exponent(&gi(1)), 2);
        assert_eq!(f.exponent(&gi(-1)), 1);
    }

    #[test]
    fn factors_gaussian_roots() {
        let f = factor_linear(&p(&[1, 0, 1])).unwrap();
        assert_eq!(f.exponent(&GaussianRational::i()), 1);
        assert_eq!(f.exponent(&(-&GaussianRational::i())), 1);
    }

    #[test]
    fn factors_fractional_roots() {
        let f = factor_linear(&p(&[1, -4, 4])).unwrap();
        assert_eq!(f.c(), &gi(4));
        assert_eq!(f.exponent(&GaussianRational::from_ratio(1, 2)), 2);
        assert!(matches!(
            factor_linear(&p(&[1, 1, 1])),
            Err(Error::NonSplittingFactor { .. })
        ));
    }

    #[test]
    fn zero_roots_are_stripped_first() {
        let f = factor_linear(&p(&[0, 0, -4, 0, 4])).unwrap();
        assert_eq!(f.exponent(&gi(0)), 2);
        assert_eq!(f.exponent(&gi(1)), 1);
        assert_eq!(f.exponent(&gi(-1)), 1);
        assert_eq!(f.c(), &gi(4));
    }

    #[test]
    fn factor_and_expand_round_trip() {
        let f = FactoredRatFun::from_parts(
            GaussianRational::from_ratio(-3, 2),
            [
                (gi(2), 2),
                (GaussianRational::i(), 1),
                (gi(-1), -3),
            ],
        )
        .unwrap();
        let back = FactoredRatFun::factor(&f.expand()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn multiplication_cancels_factors() {
        let a = FactoredRatFun::from_root(gi(1), 2);
        let b = FactoredRatFun::from_root(gi(1), -2);
        assert!(a.mul(&b).is_one());
        let c = a.div(&FactoredRatFun::from_root(gi(1), 1));
        assert_eq!(c.exponent(&gi(1)), 1);
    }

    #[test]
    fn shift_moves_roots() {
        let f = FactoredRatFun::from_root(gi(3), 1);
        let shifted = f.substitute_shift(&gi(-2));
        assert_eq!(shifted.exponent(&gi(5)), 1);
        assert_eq!(shifted.expand(), f.expand().shift_variable(&gi(-2)));
    }

    #[test]
    fn display_and_serde() {
        let f = FactoredRatFun::from_parts(
            gi(-2),
            [(gi(0), 1), (gi(3), -2), (GaussianRational::i(), 1)],
        )
        .unwrap();
        assert_eq!(f.to_string(), "(-2)*h*(h-(i))*(h-3)^-2");
        let json = serde_json::to_string(&f).unwrap();
        let back: FactoredRatFun = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<FactoredRatFun>("{\"c\":\"0\",\"factors\":[]}").is_err());
    }
}
