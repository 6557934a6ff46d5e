//! Grid scans of the `(p, q)` plane with CSV and SVG output, and the memo
//! cache for the suprema used by the classifier.

mod cache;
mod output;

use std::sync::Mutex;

use rayon::prelude::*;

use crate::domains::{
    classify_with, curve_v, sup_q_range, g_roots, h_roots, q_low, sup_phi, DomainError, FeasibleSet, ParamPoint, RowSups, Status,
    SupValue, Verdict, SUP_TOL,
};

pub use cache::{cache_roundtrip, parse_records, write_records, SupCache, SupRecord};
pub use output::{emit_csv, emit_svg, fmt9, render_csv, render_svg};

#[derive(Debug, thiserror::Error)]
pub enum AtlasError {
    #[error("invalid scan request: {0}")]
    InvalidRange(String),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A sampled curve drawn over the scan, split where it is undefined.
#[derive(Debug, Clone, PartialEq)]
pub struct Overlay {
    pub name: String,
    /// Polylines of `(p, q)` points.
    pub segments: Vec<Vec<(f64, f64)>>,
}

#[derive(Debug, Clone)]
pub struct GridScan {
    pub n: u32,
    pub bounded: bool,
    pub p_range: (f64, f64),
    pub q_range: (f64, f64),
    /// Cells along `p`, cells along `q`.
    pub resolution: (usize, usize),
    /// `cells[i][j]` sits at the `i`-th `q` row and `j`-th `p` column.
    pub cells: Vec<Vec<Verdict>>,
    pub overlays: Vec<Overlay>,
    /// Cells where radial existence and a Liouville criterion both fired.
    pub disjointness_violations: usize,
}

impl GridScan {
    pub fn p_center(&self, j: usize) -> f64 {
        center(self.p_range, self.resolution.0, j)
    }

    pub fn q_center(&self, i: usize) -> f64 {
        center(self.q_range, self.resolution.1, i)
    }

    pub fn count(&self, pred: impl Fn(Status) -> bool) -> usize {
        self.cells.iter().flatten().filter(|v| pred(v.status)).count()
    }
}

fn center(range: (f64, f64), res: usize, k: usize) -> f64 {
    range.0 + (range.1 - range.0) * (k as f64 + 0.5) / res as f64
}

fn row_sups(n: u32, q: f64, cache: Option<&SupCache>) -> Result<(RowSups, Vec<SupRecord>), DomainError> {
    let mut fresh = Vec::new();
    let sups = RowSups::compute_with(n, q, |set| {
        if let Some(hit) = cache.and_then(|c| c.get(n, q, set, SUP_TOL)) {
            return Ok(hit);
        }
        let r = sup_phi(set, n, q, SUP_TOL)?;
        fresh.push(SupRecord::new(n, q, set, SUP_TOL, &r));
        Ok(r)
    })?;
    Ok((sups, fresh))
}

/// Classifies every cell centre. Rows run in parallel and each row computes
/// its suprema once; new suprema are added to `cache` in row order.
pub fn scan_grid(
    n: u32,
    p_range: (f64, f64),
    q_range: (f64, f64),
    resolution: (usize, usize),
    bounded: bool,
    cache: Option<&mut SupCache>,
) -> Result<GridScan, AtlasError> {
    if n < 2 {
        return Err(AtlasError::InvalidRange(format!("n = {n} must be at least 2")));
    }
    if !(p_range.0 < p_range.1) || !(q_range.0 < q_range.1) {
        return Err(AtlasError::InvalidRange(format!("degenerate range p {p_range:?}, q {q_range:?}")));
    }
    if !(q_range.0 >= 0.0) || !p_range.0.is_finite() || !p_range.1.is_finite() || !q_range.1.is_finite() {
        return Err(AtlasError::InvalidRange(format!("q range {q_range:?} must be finite and within [0, inf)")));
    }
    if resolution.0 < 2 || resolution.1 < 2 {
        return Err(AtlasError::InvalidRange(format!("resolution {resolution:?} must be at least 2 per axis")));
    }
    let violations = Mutex::new(0usize);
    let cache_ref = cache.as_deref();
    let rows: Vec<(Vec<Verdict>, Vec<SupRecord>)> = (0..resolution.1)
        .into_par_iter()
        .map(|i| {
            let q = center(q_range, resolution.1, i);
            let (sups, fresh) = row_sups(n, q, cache_ref)?;
            let mut row = Vec::with_capacity(resolution.0);
            for j in 0..resolution.0 {
                let pt = ParamPoint::new(n, center(p_range, resolution.0, j), q);
                match classify_with(&pt, bounded, &sups) {
                    Ok(v) => row.push(v),
                    Err(DomainError::Inconsistent(msg)) => {
                        log::error!("{msg}");
                        *violations.lock().expect("counter lock") += 1;
                        row.push(Verdict { status: Status::Unknown, criteria_fired: Vec::new() });
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok((row, fresh))
        })
        .collect::<Result<_, DomainError>>()?;
    let mut cells = Vec::with_capacity(rows.len());
    let mut fresh_all = Vec::new();
    for (row, fresh) in rows {
        cells.push(row);
        fresh_all.extend(fresh);
    }
    if let Some(c) = cache {
        for r in fresh_all {
            c.insert(r);
        }
    }
    let overlays = overlays(n, p_range, q_range);
    Ok(GridScan {
        n,
        bounded,
        p_range,
        q_range,
        resolution,
        cells,
        overlays,
        disjointness_violations: violations.into_inner().expect("counter lock"),
    })
}

const OVERLAY_SAMPLES: usize = 400;

/// Splits samples into runs of defined points.
fn runs(points: impl Iterator<Item = Option<(f64, f64)>>) -> Vec<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for p in points {
        match p {
            Some(pt) if pt.0.is_finite() && pt.1.is_finite() => cur.push(pt),
            _ => {
                if cur.len() > 1 {
                    out.push(std::mem::take(&mut cur));
                } else {
                    cur.clear();
                }
            }
        }
    }
    if cur.len() > 1 {
        out.push(cur);
    }
    out
}

fn overlays(n: u32, p_range: (f64, f64), q_range: (f64, f64)) -> Vec<Overlay> {
    let mut out = Vec::new();
    let qs: Vec<f64> =
        (0..=OVERLAY_SAMPLES).map(|k| q_range.0 + (q_range.1 - q_range.0) * k as f64 / OVERLAY_SAMPLES as f64).collect();
    let in_p = |p: f64| p >= p_range.0 && p <= p_range.1;
    let hline = |name: &str, q: f64| Overlay { name: name.into(), segments: vec![vec![(p_range.0, q), (p_range.1, q)]] };
    if n >= 3 {
        let v = runs(qs.iter().map(|&q| curve_v(n, q).ok().map(|l| (l + 1.0 - q, q)).filter(|pt| in_p(pt.0))));
        out.push(Overlay { name: "V".into(), segments: v });
        for (name, roots) in [("G=0", g_roots as fn(u32, f64) -> _), ("H=0", h_roots)] {
            let mut segs = Vec::new();
            for k in 0..2 {
                segs.extend(runs(qs.iter().map(|&q| {
                    roots(n, q).ok().filter(|r| r.len() == 2).map(|r| (r[k], q)).filter(|pt| in_p(pt.0))
                })));
            }
            out.push(Overlay { name: name.into(), segments: segs });
        }
        let s = (n as f64 + 2.0) / (n as f64 - 2.0);
        let line = runs(qs.iter().map(|&q| Some((s - q, q)).filter(|pt| in_p(pt.0))));
        out.push(Overlay { name: "p+q=(n+2)/(n-2)".into(), segments: line });
        for (name, set) in [("L frontier", FeasibleSet::D), ("H frontier", FeasibleSet::E)] {
            let (lo, hi) = sup_q_range(set, n);
            let segs = runs(qs.iter().map(|&q| {
                if q <= lo || q >= hi {
                    return None;
                }
                match sup_phi(set, n, q, 1e-6).ok()?.value {
                    SupValue::Finite(v) => Some((v + 1.0 - q, q)).filter(|pt| in_p(pt.0)),
                    _ => None,
                }
            }));
            out.push(Overlay { name: name.into(), segments: segs });
        }
        let q0 = q_low(n);
        if q0 >= q_range.0 && q0 <= q_range.1 {
            out.push(hline("q=1-1/sqrt(n-1)", q0));
        }
    }
    for (name, q) in [("q=1", 1.0), ("q=3/2", 1.5), ("q=5/3", 5.0 / 3.0), ("q=2", 2.0)] {
        if q >= q_range.0 && q <= q_range.1 {
            out.push(hline(name, q));
        }
    }
    out
}
