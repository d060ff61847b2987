//! Skew Laurent rings over `Q(i)(h)` and their rank-one modules.
//!
//! The pieces: the shift automorphism itself, the twisted Laurent ring it
//! defines, exponent functions along shift orbits, the coboundary group
//! with membership tests and witnesses, and the rank-one module normal
//! form every algebra in this crate is realized in.

pub mod expfun;
pub mod gsigma;
pub mod module;
pub mod ring;
pub mod shift;

pub use gsigma::{canonical_rep, coboundary_witness, in_g_sigma};
pub use module::RankOneModule;
pub use ring::SkewLaurent;
pub use shift::ShiftAut;
