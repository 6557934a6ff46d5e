use std::fmt;

use serde::Serialize;

use super::admissible::{in_admissible_with, q_low, AdmissibleSet, RowSups, SUP_TOL};
use super::curves::{curve_v, h_mawu, h_roots};
use super::sup::{sup_phi, FeasibleSet, SupValue, GUARD};
use super::{DomainError, ParamPoint};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityResult {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// Points skipped because they fall inside the boundary band.
    pub inconclusive: usize,
    /// Smallest margin seen; `+inf` when every margin is unbounded.
    pub worst_margin: f64,
    /// `(p, q)` of the worst point; `p` is absent for one-dimensional checks.
    pub worst_at: Option<(Option<f64>, f64)>,
}

impl InequalityResult {
    fn new(name: &str) -> InequalityResult {
        InequalityResult {
            name: name.into(),
            checked: 0,
            failures: 0,
            inconclusive: 0,
            worst_margin: f64::INFINITY,
            worst_at: None,
        }
    }

    fn record(&mut self, margin: f64, at: (Option<f64>, f64)) {
        self.checked += 1;
        if !(margin > 0.0) {
            self.failures += 1;
        }
        if margin < self.worst_margin || self.worst_at.is_none() {
            self.worst_margin = margin;
            self.worst_at = Some(at);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BReport {
    pub n: u32,
    pub results: Vec<InequalityResult>,
}

impl BReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(InequalityResult::passed)
    }
}

impl fmt::Display for BReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let tag = if r.passed() { "PASS" } else { "FAIL" };
            write!(
                f,
                "[{tag}] n={} {}: {} points, {} failures, worst margin {:.6e}",
                self.n, r.name, r.checked, r.failures, r.worst_margin
            )?;
            match r.worst_at {
                Some((Some(p), q)) => write!(f, " at p={p:.6}, q={q:.6}")?,
                Some((None, q)) => write!(f, " at q={q:.6}")?,
                None => {}
            }
            if r.inconclusive > 0 {
                write!(f, ", {} inside boundary band", r.inconclusive)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Grid `lo + i*step` strictly inside `(lo, hi)`, plus `hi` when closed.
fn q_grid(lo: f64, hi: f64, step: f64, include_hi: bool) -> Vec<f64> {
    let mut out = Vec::new();
    let mut i = 1u64;
    loop {
        let q = lo + i as f64 * step;
        if q >= hi - GUARD {
            break;
        }
        out.push(q);
        i += 1;
    }
    if include_hi {
        out.push(hi);
    }
    out
}

fn sup_margin(value: SupValue, f: impl Fn(f64) -> f64) -> f64 {
    match value {
        SupValue::PosInf => f64::INFINITY,
        SupValue::NegInf => f64::NEG_INFINITY,
        SupValue::Finite(v) => f(v),
    }
}

const B2_GRID: usize = 100;

/// Numerical check of the containments comparing the admissible sets with
/// earlier criteria. Failures become report entries.
pub fn appendix_b_check(n: u32, q_step: f64) -> Result<BReport, DomainError> {
    if n < 3 {
        return Err(DomainError::Precondition(format!("n = {n} must be at least 3")));
    }
    if !(q_step > 0.0) {
        return Err(DomainError::Precondition(format!("q_step = {q_step} must be positive")));
    }
    let nf = n as f64;
    let bound5 = 3.0 * (nf + 6.0).sqrt() / (2.0 * (nf - 2.0));
    let q0 = q_low(n);

    let mut a1 = InequalityResult::new("L + 1 - q > 3 sqrt(n+6)/(2(n-2)) on (1-1/sqrt(n-1), 1]");
    let mut a2 = InequalityResult::new("L > 4/(n-2) on (1-1/sqrt(n-1), 1]");
    for q in q_grid(q0, 1.0, q_step, true) {
        let s = sup_phi(FeasibleSet::D, n, q, SUP_TOL)?;
        a1.record(sup_margin(s.value, |v| v + 1.0 - q - bound5), (None, q));
        a2.record(sup_margin(s.value, |v| v - 4.0 / (nf - 2.0)), (None, q));
    }

    let mut b = InequalityResult::new("H + 1 - q > 3 sqrt(n+6)/(2(n-2)) on (1, 5/3)");
    for q in q_grid(1.0, 5.0 / 3.0, q_step, false) {
        let s = sup_phi(FeasibleSet::E, n, q, SUP_TOL)?;
        b.record(sup_margin(s.value, |v| v + 1.0 - q - bound5), (None, q));
    }

    let mut c = InequalityResult::new("3 sqrt(n+6)/(2(n-2)) + q - 1 < l_V on (0, 1-1/sqrt(n-1)]");
    for q in q_grid(0.0, q0, q_step, true) {
        c.record(curve_v(n, q)? - (bound5 + q - 1.0), (None, q));
    }

    let mut results = vec![a1, a2, b, c];
    if n >= 4 {
        results.push(b2_grid(n)?);
    }
    Ok(BReport { n, results })
}

/// Points with `H(p, q) < 0` on a grid over the lemma's `q` range must lie
/// in the admissible set `L`. Margin is `-H` at a member, negative otherwise.
fn b2_grid(n: u32) -> Result<InequalityResult, DomainError> {
    let mut res = InequalityResult::new("H(p,q) < 0 implies (p,q) in L for q in (1-1/sqrt(n-1), 5/3)");
    let q0 = q_low(n);
    let qs: Vec<f64> = (0..B2_GRID).map(|i| q0 + (5.0 / 3.0 - q0) * (i as f64 + 0.5) / B2_GRID as f64).collect();
    let p_hi = qs
        .iter()
        .filter_map(|&q| h_roots(n, q).ok().and_then(|r| r.last().copied()))
        .fold(0.0_f64, f64::max);
    for &q in &qs {
        let sups = RowSups::compute(n, q)?;
        for j in 0..B2_GRID {
            let p = p_hi * (j as f64 + 0.5) / B2_GRID as f64;
            let h = h_mawu(n, p, q)?;
            if !(h < -GUARD) {
                continue;
            }
            let pt = ParamPoint::new(n, p, q);
            if in_admissible_with(AdmissibleSet::L, &pt, &sups)? {
                res.record(-h, (Some(p), q));
            } else if near_sup_boundary(&pt, &sups) {
                res.inconclusive += 1;
            } else {
                res.record(h, (Some(p), q));
            }
        }
    }
    Ok(res)
}

fn near_sup_boundary(pt: &ParamPoint, sups: &RowSups) -> bool {
    [sups.l_sup, sups.h_sup]
        .iter()
        .flatten()
        .any(|s| matches!(s.value, SupValue::Finite(v) if (pt.l() - v).abs() <= SUP_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b1c_anchor() {
        let lhs = 3.0 * 12f64.sqrt() / 8.0 + 0.3 - 1.0;
        assert!((lhs - 0.599).abs() < 1e-3);
        let lv = curve_v(6, 0.3).unwrap();
        assert!((lv - 1.0321).abs() < 1e-3);
        assert!(lhs < lv);
    }

    #[test]
    fn n6_passes() {
        let rep = appendix_b_check(6, 0.01).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.results.len(), 5);
        assert!(rep.results[4].checked > 0);
    }

    #[test]
    fn grid_respects_open_ends() {
        let g = q_grid(0.0, 1.0, 0.25, true);
        assert_eq!(g, vec![0.25, 0.5, 0.75, 1.0]);
        assert_eq!(q_grid(1.0, 5.0 / 3.0, 0.5, false), vec![1.5]);
    }
}
