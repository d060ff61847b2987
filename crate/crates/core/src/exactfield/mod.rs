//! The exact coefficient field `Q(i)(h)` and its normal forms.
//!
//! Layered bottom-up: Gaussian rationals, dense polynomials in `h`,
//! reduced rational functions, Gaussian-integer factorization support,
//! fully factored rational functions with linear factors, and
//! partial-fraction expansions over the standard basis.

pub mod factored;
pub mod gaussian;
pub mod gaussint;
pub mod partial;
pub mod poly;
pub mod ratfun;

pub use factored::FactoredRatFun;
pub use gaussian::GaussianRational;
pub use partial::PartialFraction;
pub use poly::Polynomial;
pub use ratfun::RatFun;
