//! Rank-one torsion-free modules over the first Weyl algebra.

mod action;
mod socle;

pub use action::{
    act_a_raw, act_b_raw, lowering_multiplier, ring_a, ring_b, weyl_shift, WeylModule, WEYL_STEP,
};
pub use socle::{is_finitely_generated, socle_descriptor};
