//! Gaussian integer arithmetic used by the linear factorizer.
//!
//! Provides exact Euclidean division and gcds in `Z[i]`, deterministic
//! integer factorization (trial division, Miller-Rabin, Pollard's rho),
//! and divisor enumeration up to units. Everything here is internal
//! support for root finding over `Q(i)`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// An element of `Z[i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussInt::new(BigInt::from(re), BigInt::from(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn mul(&self, rhs: &GaussInt) -> Self {
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    pub fn sub(&self, rhs: &GaussInt) -> Self {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    /// Euclidean division with both quotient coordinates rounded to the
    /// nearest integer, so the remainder norm is at most half the divisor's.
    pub fn rounded_div(&self, rhs: &GaussInt) -> (GaussInt, GaussInt) {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero Gaussian integer");
        let prod = self.mul(&rhs.conj());
        let q = GaussInt::new(round_div(&prod.re, &n), round_div(&prod.im, &n));
        let r = self.sub(&q.mul(rhs));
        (q, r)
    }

    /// True when `rhs` divides `self` exactly.
    #[cfg(test)]
    pub fn divisible_by(&self, rhs: &GaussInt) -> bool {
        self.rounded_div(rhs).1.is_zero()
    }

    /// Greatest common divisor up to units, by Euclid with rounded division.
    pub fn gcd(&self, rhs: &GaussInt) -> GaussInt {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.rounded_div(&b);
            a = b;
            b = r;
        }
        a
    }

    /// The four units of `Z[i]`.
    pub fn units() -> [GaussInt; 4] {
        [
            GaussInt::from_i64(1, 0),
            GaussInt::from_i64(-1, 0),
            GaussInt::from_i64(0, 1),
            GaussInt::from_i64(0, -1),
        ]
    }

    /// All divisors of a nonzero value, one representative per associate
    /// class, in a deterministic order.
    pub fn divisors_up_to_units(&self) -> Vec<GaussInt> {
        assert!(!self.is_zero(), "divisors of zero are not enumerable");
        let primes = factor_gaussian(self);
        let mut divisors = vec![GaussInt::from_i64(1, 0)];
        for (prime, exp) in primes {
            let mut extended = Vec::with_capacity(divisors.len() * (exp as usize + 1));
            for d in &divisors {
                let mut power = d.clone();
                extended.push(power.clone());
                for _ in 0..exp {
                    power = power.mul(&prime);
                    extended.push(power.clone());
                }
            }
            divisors = extended;
        }
        divisors
    }
}

/// Rounds `a / b` to the nearest integer; the tie direction is irrelevant
/// because any nearest choice keeps the Euclidean remainder small.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (a * &two + b).div_floor(&(b * two))
}

/// Deterministic Miller-Rabin bases, valid far beyond the norms seen here.
const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Miller-Rabin primality test.
fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for small in MR_BASES {
        let small = BigUint::from(small);
        if n == &small {
            return true;
        }
        if (n % &small).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for base in MR_BASES {
        let mut x = BigUint::from(base).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Finds one nontrivial factor of an odd composite with Pollard's rho,
/// trying successive polynomial offsets so the search is deterministic.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    for c in 1u32.. {
        let c = BigUint::from(c);
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        loop {
            x = step(&x);
            y = step(&step(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            let d = diff.gcd(n);
            if d > one {
                return d;
            }
        }
    }
    unreachable!("factor search is exhaustive for composites")
}

/// Full factorization of a positive integer.
fn factor_integer(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    let mut n = n.clone();
    if n.is_zero() {
        return out;
    }
    let mut p = 2u64;
    while p < 1000 {
        let big_p = BigUint::from(p);
        if &big_p * &big_p > n {
            break;
        }
        while (&n % &big_p).is_zero() {
            *out.entry(big_p.clone()).or_insert(0) += 1;
            n /= &big_p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out
}

/// A square root of `-1` modulo a prime `p = 1 (mod 4)`.
fn sqrt_minus_one(p: &BigUint) -> BigUint {
    let one = BigUint::one();
    let exponent = (p - &one) >> 2;
    let legendre_exp = (p - &one) >> 1;
    let p_minus_1 = p - &one;
    for a in 2u32.. {
        let a = BigUint::from(a);
        if a.modpow(&legendre_exp, p) == p_minus_1 {
            return a.modpow(&exponent, p);
        }
    }
    unreachable!("every prime 1 mod 4 has a quadratic nonresidue")
}

/// A Gaussian prime dividing the rational prime `p`.
fn prime_above(p: &BigUint) -> GaussInt {
    let four = BigUint::from(4u32);
    let rem = p % &four;
    if p == &BigUint::from(2u32) {
        GaussInt::from_i64(1, 1)
    } else if rem == BigUint::from(3u32) {
        GaussInt::new(BigInt::from(p.clone()), BigInt::zero())
    } else {
        let x = sqrt_minus_one(p);
        GaussInt::new(BigInt::from(p.clone()), BigInt::zero())
            .gcd(&GaussInt::new(BigInt::from(x), BigInt::one()))
    }
}

/// Factors a nonzero Gaussian integer into primes with multiplicities,
/// in a deterministic order; the leftover unit is discarded.
fn factor_gaussian(g: &GaussInt) -> Vec<(GaussInt, u32)> {
    let norm = g.norm().to_biguint().expect("norms are nonnegative");
    let mut candidates = Vec::new();
    for p in factor_integer(&norm).keys() {
        let pi = prime_above(p);
        if pi.im.is_zero() {
            candidates.push(pi);
        } else {
            candidates.push(pi.clone());
            candidates.push(pi.conj());
        }
    }
    let mut remaining = g.clone();
    let mut out = Vec::new();
    for pi in candidates {
        let mut exp = 0u32;
        loop {
            let (q, r) = remaining.rounded_div(&pi);
            if r.is_zero() {
                remaining = q;
                exp += 1;
            } else {
                break;
            }
        }
        if exp > 0 {
            out.push((pi, exp));
        }
    }
    debug_assert!(remaining.norm().is_one(), "cofactor after factoring must be a unit");
    out
}
