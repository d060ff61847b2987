//! Exact symbolic machinery for rank-one torsion-free modules realized
//! inside skew Laurent extensions of a rational function field.
//!
//! The coefficient field throughout is `Q(i)(h)`: rational functions in one
//! variable `h` over the Gaussian rationals, represented exactly with
//! arbitrary-precision arithmetic. On top of it the crate builds:
//!
//! * [`exactfield`] — Gaussian rationals, dense polynomials, reduced
//!   rational functions, factored forms, and partial-fraction expansions;
//! * [`skewlaurent`] — the skew Laurent ring `K[x, x^{-1}; sigma]` for a
//!   shift automorphism `sigma(h) = h + delta`, coboundary-group membership
//!   with explicit witnesses, and rank-one module normal forms;
//! * [`sl2`], [`weyl`], [`osp`] — the three families of module actions the
//!   crate classifies, each with closed-form fraction-pattern descriptors
//!   and finite-generation tests;
//! * [`oracle`] — an independent brute-force closure engine used to verify
//!   the closed-form descriptors on concrete parameters;
//! * [`latex`] — LaTeX rendering of the main value types;
//! * [`sample`] — seeded random generators for parameters and inputs.

pub mod error;
pub mod exactfield;
pub mod latex;
pub mod oracle;
pub mod osp;
pub mod sample;
pub mod skewlaurent;
pub mod sl2;
pub mod weyl;

pub use error::{Error, Result};
