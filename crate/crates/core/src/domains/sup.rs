use serde::{Deserialize, Serialize};

use super::DomainError;

/// Strict inequalities must clear this margin.
pub const GUARD: f64 = 1e-12;

const COARSE_STEP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FeasibleSet {
    /// Constraint system whose supremum is `L(n,q)`.
    D,
    /// Constraint system whose supremum is `H(n,q)`.
    E,
}

impl FeasibleSet {
    fn last_coeff(self, q: f64) -> f64 {
        match self {
            FeasibleSet::D => q - 1.0,
            FeasibleSet::E => 1.5 * q - 2.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FeasibleSet::D => "L",
            FeasibleSet::E => "H",
        }
    }
}

/// The three constraint values at `y`; feasible iff all exceed [`GUARD`].
pub fn constraint_values(set: FeasibleSet, n: u32, q: f64, y: f64) -> [f64; 3] {
    let nf = n as f64;
    let x = (2.0 - nf * y) / (2.0 * (nf - 1.0));
    let lin = 2.0 * y * (1.0 / (nf.sqrt() + 1.0) + x);
    let c = 2.0 * (x + 1.0).powi(2) / nf + y * (q - 2.0 * x - 1.0) - q * y * y / 2.0 - 2.0 * x * x;
    [lin + q * y * y, c, 4.0 * c + lin + set.last_coeff(q) * y * y]
}

fn feasible(set: FeasibleSet, n: u32, q: f64, y: f64) -> bool {
    constraint_values(set, n, q, y).iter().all(|v| *v > GUARD)
}

pub fn feasibility(set: FeasibleSet, n: u32, q: f64, y: f64) -> Result<bool, DomainError> {
    if n < 3 {
        return Err(DomainError::Precondition(format!("n = {n} must be at least 3")));
    }
    if !(y > 0.0 && y < 2.0) {
        return Err(DomainError::Precondition(format!("y = {y} must lie in (0, 2)")));
    }
    Ok(feasible(set, n, q, y))
}

/// `phi(y) = (2-q)/(n-2) + (y(n-2)+2)/((n-2)(2-y))`, increasing on `(0, 2)`.
pub fn phi(n: u32, q: f64, y: f64) -> f64 {
    let m = n as f64 - 2.0;
    (2.0 - q) / m + (y * m + 2.0) / (m * (2.0 - y))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum SupValue {
    Finite(f64),
    /// Feasible `y` accumulate at 2.
    PosInf,
    /// Empty feasible set.
    NegInf,
}

impl SupValue {
    pub fn as_f64(self) -> f64 {
        match self {
            SupValue::Finite(v) => v,
            SupValue::PosInf => f64::INFINITY,
            SupValue::NegInf => f64::NEG_INFINITY,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupResult {
    pub value: SupValue,
    /// Largest certified feasible `y`; `None` when the set is empty.
    pub argmax_y: Option<f64>,
    /// True when `value = phi(argmax_y)` with `argmax_y` feasible. The open
    /// constraints make the true supremum a limit, at most `tol` away in `y`.
    pub attained: bool,
    pub grid_cells_feasible: usize,
}

/// Open `q` interval on which the supremum is used.
pub fn q_range(set: FeasibleSet, n: u32) -> (f64, f64) {
    match set {
        FeasibleSet::D => (1.0 - 1.0 / ((n as f64) - 1.0).sqrt(), 1.5),
        FeasibleSet::E => (1.0, 5.0 / 3.0),
    }
}

/// Supremum of `phi` over the feasible set.
///
/// Only the largest feasible `y` matters since `phi` is increasing, so the
/// coarse grid is walked downward from `2 - 1e-3` and the first feasible
/// cell is refined by bisection against its infeasible upper neighbour.
pub fn sup_phi(set: FeasibleSet, n: u32, q: f64, tol: f64) -> Result<SupResult, DomainError> {
    if n < 3 {
        return Err(DomainError::Precondition(format!("n = {n} must be at least 3")));
    }
    if !(tol > 0.0) {
        return Err(DomainError::Precondition(format!("tol = {tol} must be positive")));
    }
    let (lo, hi) = q_range(set, n);
    if !(q > lo && q < hi) {
        return Err(DomainError::Precondition(format!("q = {q} outside ({lo}, {hi}) for set {}", set.label())));
    }
    let cells = (2.0 / COARSE_STEP).round() as usize;
    let ys = |k: usize| k as f64 * COARSE_STEP;
    let count = (1..cells).filter(|&k| feasible(set, n, q, ys(k))).count();
    let Some(top) = (1..cells).rev().find(|&k| feasible(set, n, q, ys(k))) else {
        return Ok(SupResult { value: SupValue::NegInf, argmax_y: None, attained: false, grid_cells_feasible: 0 });
    };
    let mut lo = ys(top);
    let mut hi = if top + 1 == cells {
        // feasible up to the last grid point: probe toward 2
        let mut probe = lo;
        let mut gap = COARSE_STEP;
        loop {
            gap *= 0.1;
            if gap < 1e-12 {
                return Ok(SupResult {
                    value: SupValue::PosInf,
                    argmax_y: Some(probe),
                    attained: false,
                    grid_cells_feasible: count,
                });
            }
            let y = 2.0 - gap;
            if feasible(set, n, q, y) {
                probe = y;
                lo = y;
            } else {
                break y;
            }
        }
    } else {
        ys(top + 1)
    };
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if feasible(set, n, q, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(SupResult {
        value: SupValue::Finite(phi(n, q, lo)),
        argmax_y: Some(lo),
        attained: true,
        grid_cells_feasible: count,
    })
}
