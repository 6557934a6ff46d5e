//! Separating curves, feasibility sets and their suprema, admissible sets,
//! and point classification in the `(p, q)` plane.

mod admissible;
mod appendix_b;
mod curves;
mod sup;

use serde::{Deserialize, Serialize};

pub use admissible::{
    classify, classify_with, in_admissible, in_admissible_with, q_low, AdmissibleSet, Criterion, RowSups, Status,
    Verdict, SUP_TOL,
};
pub use appendix_b::{appendix_b_check, BReport, InequalityResult};
pub use curves::{curve_v, g_bgv, g_bgv_exact, g_roots, h_mawu, h_roots, quadratic_roots};
pub use sup::{q_range as sup_q_range, constraint_values, feasibility, phi, sup_phi, FeasibleSet, SupResult, SupValue, GUARD};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DomainError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// A point `(p, q)` in dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub n: u32,
    pub p: f64,
    pub q: f64,
}

impl ParamPoint {
    pub fn new(n: u32, p: f64, q: f64) -> ParamPoint {
        ParamPoint { n, p, q }
    }

    /// `l = p + q - 1`.
    pub fn l(&self) -> f64 {
        self.p + self.q - 1.0
    }
}
