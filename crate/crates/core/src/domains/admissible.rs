use std::fmt;

use serde::{Deserialize, Serialize};

use super::curves::curve_v;
use super::sup::{sup_phi, FeasibleSet, SupResult, SupValue, GUARD};
use super::{DomainError, ParamPoint};

/// Tolerance of the supremum and width of the band around `l = L` or `l = H`
/// inside which a point counts as boundary, hence not a member.
pub const SUP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AdmissibleSet {
    A,
    B,
    BL,
    L,
}

/// `L(n,q)` and `H(n,q)` for one `q`, present only where their sets are used.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RowSups {
    pub l_sup: Option<SupResult>,
    pub h_sup: Option<SupResult>,
}

/// Lower edge `1 - 1/sqrt(n-1)` of the `A` range.
pub fn q_low(n: u32) -> f64 {
    1.0 - 1.0 / ((n as f64) - 1.0).sqrt()
}

fn in_a_range(n: u32, q: f64) -> bool {
    q > q_low(n) + GUARD && q < 1.5 - GUARD
}

fn in_b_range(q: f64) -> bool {
    q > 1.0 + GUARD && q < 5.0 / 3.0 - GUARD
}

impl RowSups {
    pub fn compute(n: u32, q: f64) -> Result<RowSups, DomainError> {
        RowSups::compute_with(n, q, |set| sup_phi(set, n, q, SUP_TOL))
    }

    /// Like [`RowSups::compute`] with a custom source of suprema, e.g. a cache.
    pub fn compute_with(
        n: u32,
        q: f64,
        mut sup: impl FnMut(FeasibleSet) -> Result<SupResult, DomainError>,
    ) -> Result<RowSups, DomainError> {
        if n < 3 {
            return Ok(RowSups::default());
        }
        Ok(RowSups {
            l_sup: if in_a_range(n, q) { Some(sup(FeasibleSet::D)?) } else { None },
            h_sup: if in_b_range(q) { Some(sup(FeasibleSet::E)?) } else { None },
        })
    }
}

fn below_sup(l: f64, sup: Option<SupResult>) -> bool {
    match sup.map(|s| s.value) {
        Some(SupValue::PosInf) => true,
        Some(SupValue::Finite(v)) => l < v - SUP_TOL,
        Some(SupValue::NegInf) | None => false,
    }
}

fn check_n(pt: &ParamPoint) -> Result<(), DomainError> {
    if pt.n < 3 {
        return Err(DomainError::Precondition(format!("n = {} must be at least 3", pt.n)));
    }
    if !(pt.q >= 0.0) {
        return Err(DomainError::Precondition(format!("q = {} must be nonnegative", pt.q)));
    }
    Ok(())
}

/// Strictly outside the non-Liouville set, for `q` in `[0, 1)`.
fn below_v(pt: &ParamPoint) -> bool {
    curve_v(pt.n, pt.q).is_ok_and(|lv| pt.l() < lv - GUARD)
}

/// Membership given precomputed suprema for `pt.q`.
pub fn in_admissible_with(set: AdmissibleSet, pt: &ParamPoint, sups: &RowSups) -> Result<bool, DomainError> {
    check_n(pt)?;
    let (n, q, l) = (pt.n, pt.q, pt.l());
    let a = || in_a_range(n, q) && below_sup(l, sups.l_sup);
    let bl = || q >= 1.5 || a() || (q <= q_low(n) && below_v(pt));
    Ok(match set {
        AdmissibleSet::A => a(),
        AdmissibleSet::B => in_b_range(q) && below_sup(l, sups.h_sup),
        AdmissibleSet::BL => bl(),
        AdmissibleSet::L => {
            q >= 5.0 / 3.0 || (in_b_range(q) && below_sup(l, sups.h_sup)) || (q <= 1.0 && bl())
        }
    })
}

pub fn in_admissible(set: AdmissibleSet, pt: &ParamPoint) -> Result<bool, DomainError> {
    check_n(pt)?;
    in_admissible_with(set, pt, &RowSups::compute(pt.n, pt.q)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Cond1,
    Cond2,
    Cond3,
    Cond4,
    Cond5,
    AdmL,
    AdmBl,
    BddQ32,
}

impl Criterion {
    pub fn id(self) -> &'static str {
        match self {
            Criterion::Cond1 => "cond1",
            Criterion::Cond2 => "cond2",
            Criterion::Cond3 => "cond3",
            Criterion::Cond4 => "cond4",
            Criterion::Cond5 => "cond5",
            Criterion::AdmL => "adm_L",
            Criterion::AdmBl => "adm_BL",
            Criterion::BddQ32 => "bdd_q32",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    LiouvilleProven(Criterion),
    LiouvilleBoundedOnly(Criterion),
    RadialSolutionsExist,
    Unknown,
}

impl Status {
    /// Short label used in CSV output.
    pub fn label(self) -> &'static str {
        match self {
            Status::LiouvilleProven(_) => "liouville",
            Status::LiouvilleBoundedOnly(_) => "bounded_only",
            Status::RadialSolutionsExist => "radial_exists",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub criteria_fired: Vec<Criterion>,
}

impl Verdict {
    pub fn criteria_string(&self) -> String {
        self.criteria_fired.iter().map(|c| c.id()).collect::<Vec<_>>().join(";")
    }
}

/// Classification given precomputed suprema for `pt.q` (ignored when `n = 2`).
pub fn classify_with(pt: &ParamPoint, bounded: bool, sups: &RowSups) -> Result<Verdict, DomainError> {
    let (n, p, q, l) = (pt.n, pt.p, pt.q, pt.l());
    if !(q >= 0.0) {
        return Err(DomainError::Precondition(format!("q = {q} must be nonnegative")));
    }
    if n < 2 {
        return Err(DomainError::Precondition(format!("n = {n} must be at least 2")));
    }
    let radial = n >= 3 && q < 1.0 && curve_v(n, q).is_ok_and(|lv| l >= lv);

    let mut fired = Vec::new();
    if n == 2 {
        fired.push(Criterion::Cond1);
    } else {
        let nf = n as f64;
        if q >= 5.0 / 3.0 {
            fired.push(Criterion::Cond2);
        }
        if q <= q_low(n) && below_v(pt) {
            fired.push(Criterion::Cond3);
        }
        if q > 0.0 && p + q <= (nf + 2.0) / (nf - 2.0) {
            fired.push(Criterion::Cond4);
        }
        if p <= 3.0 * (nf + 6.0).sqrt() / (2.0 * (nf - 2.0)) {
            fired.push(Criterion::Cond5);
        }
        if in_admissible_with(AdmissibleSet::L, pt, sups)? {
            fired.push(Criterion::AdmL);
        }
    }
    let proven = fired.first().copied();
    if radial && proven.is_some() {
        return Err(DomainError::Inconsistent(format!(
            "n={n}, p={p}, q={q}: radial existence and {} both hold",
            fired[0]
        )));
    }
    if bounded && n >= 3 {
        if in_admissible_with(AdmissibleSet::BL, pt, sups)? {
            fired.push(Criterion::AdmBl);
        }
        if q >= 1.5 {
            fired.push(Criterion::BddQ32);
        }
    }
    let status = if radial {
        Status::RadialSolutionsExist
    } else if let Some(c) = proven {
        Status::LiouvilleProven(c)
    } else if let Some(&c) = fired.first() {
        Status::LiouvilleBoundedOnly(c)
    } else {
        Status::Unknown
    };
    if radial && !fired.is_empty() {
        return Err(DomainError::Inconsistent(format!(
            "n={n}, p={p}, q={q}: radial existence and bounded criterion {} both hold",
            fired[0]
        )));
    }
    Ok(Verdict { status, criteria_fired: fired })
}

pub fn classify(pt: &ParamPoint, bounded: bool) -> Result<Verdict, DomainError> {
    let sups = if pt.n >= 3 && pt.q >= 0.0 { RowSups::compute(pt.n, pt.q)? } else { RowSups::default() };
    classify_with(pt, bounded, &sups)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(n: u32, p: f64, q: f64) -> ParamPoint {
        ParamPoint { n, p, q }
    }

    #[test]
    fn membership_examples() {
        assert!(in_admissible(AdmissibleSet::BL, &pt(6, 1.0, 0.0)).unwrap());
        assert!(in_admissible(AdmissibleSet::L, &pt(6, 1.0, 0.0)).unwrap());
        assert!(in_admissible(AdmissibleSet::L, &pt(6, 0.2, 1.8)).unwrap());
        assert!(!in_admissible(AdmissibleSet::BL, &pt(6, 3.0, 0.5)).unwrap());
        assert!(in_admissible(AdmissibleSet::L, &pt(2, 1.0, 0.0)).is_err());
    }

    #[test]
    fn classify_examples() {
        let v = classify(&pt(6, 1.0, 0.0), false).unwrap();
        assert_eq!(v.status, Status::LiouvilleProven(Criterion::Cond3));
        let v = classify(&pt(6, 3.0, 0.5), false).unwrap();
        assert_eq!(v.status, Status::RadialSolutionsExist);
        assert!(v.criteria_fired.is_empty());
        let v = classify(&pt(2, 100.0, 0.5), false).unwrap();
        assert_eq!(v.status, Status::LiouvilleProven(Criterion::Cond1));
    }

    #[test]
    fn bounded_only_region() {
        // q in [3/2, 5/3) with large p: only the bounded result applies
        let v = classify(&pt(6, 3.5, 1.55), true).unwrap();
        assert!(matches!(v.status, Status::LiouvilleBoundedOnly(_) | Status::LiouvilleProven(_)));
        let u = classify(&pt(6, 3.5, 1.55), false).unwrap();
        if u.status == Status::Unknown {
            assert!(v.criteria_fired.contains(&Criterion::BddQ32));
        }
    }

    #[test]
    fn critical_lane_emden_is_radial() {
        // q = 0, p = (n+2)/(n-2) sits on the curve
        let v = classify(&pt(6, 2.0, 0.0), false).unwrap();
        assert_eq!(v.status, Status::RadialSolutionsExist);
        // q = 0 excludes the linear condition
        let v = classify(&pt(6, 1.9, 0.0), false).unwrap();
        assert!(!v.criteria_fired.contains(&Criterion::Cond4));
    }
}
