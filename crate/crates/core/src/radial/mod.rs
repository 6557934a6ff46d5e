//! Explicit radial solutions, residual oracles, and the shooting method.

mod closed_form;
mod shoot;

pub use closed_form::{
    aux_f_profile, aux_f_profile_with, critical_d, delta_h_residual, delta_h_sides, ground_state_eval, log_spaced,
    pde_residual_radial, pde_residual_relative, relative_spread, singular_amplitude, tensor_deviation, DeltaHSides,
    DerivedQuantities, GroundState, RadialClosedForm,
};
pub use shoot::{existence_threshold, shoot, shoot_sampled, RadialOutcome, ShootStatus, THRESHOLD_R_MAX};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RadialError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("bracket [{0}, {1}] does not separate crossing from global solutions")]
    InvalidBracket(f64, f64),
    #[error("shooting stayed undecided at p = {0}")]
    Undecided(f64),
}
