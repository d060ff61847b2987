//! Rank-one weight-line modules: family data, actions, classification.

pub mod action;
pub mod descriptor;
pub mod params;
pub mod socle;

pub use action::{act_e_raw, act_f_raw, act_h_raw, Sl2Module};
pub use descriptor::{PoleRay, SocleDescriptor};
pub use params::{sl2_shift, Sl2Family, SL2_STEP};
pub use socle::{is_finitely_generated, socle_descriptor};
