//! Graded and ungraded rank-one torsion-free modules over osp(1|2).

mod action;
mod params;
mod theta;

pub use action::{
    act_e, act_f, act_p, act_q, casimir_apply, casimir_scalars, random_element, scasimir_action,
    scasimir_apply, verify_superrelations, GradedElement,
};
pub use params::{osp_shift, OspParams, OSP_STEP};
pub use theta::{theta_quotient_check, UngradedOspModule};
