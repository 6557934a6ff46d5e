//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pql_core::atlas::scan_grid;
use pql_core::coeffs::{
    bundled_corpus, critical_vanishing, verify_i_asymptotics, verify_s_reduction, ExpansionVar,
};
use pql_core::domains::{appendix_b_check, curve_v, Status};
use pql_core::exprcas::RationalNumber;
use pql_core::radial::{
    aux_f_profile, aux_f_profile_with, critical_d, delta_h_sides, existence_threshold, log_spaced,
    pde_residual_radial, pde_residual_relative, relative_spread, shoot, shoot_sampled,
    tensor_deviation, GroundState, RadialClosedForm, ShootStatus,
};

type Outcome = Result<String, String>;

const GROUND_STATES: [(u32, f64); 3] = [(3, 0.5), (4, 1.0 / 3.0), (6, 0.25)];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_reduction() -> Outcome {
    let t = Instant::now();
    let report = verify_s_reduction(bundled_corpus()).map_err(|e| e.to_string())?;
    let dt = t.elapsed();
    ensure(report.passed(), || format!("{} of {} identities failed", report.failures(), report.checks.len()))?;
    ensure(report.checks.len() == 6, || format!("expected 6 identities, got {}", report.checks.len()))?;
    ensure(dt <= Duration::from_secs(30), || format!("took {dt:?}"))?;
    Ok(format!("{} identities exact in {:.2?}", report.checks.len(), dt))
}

fn c2_critical_grid() -> Outcome {
    let mut count = 0;
    for n in 3..=12i64 {
        for k in 1..=9 {
            let q = RationalNumber::frac(k, 10);
            // n - (n-1) q > 0
            if 10 * n - (n - 1) * k <= 0 {
                continue;
            }
            let ok = critical_vanishing(n, &q).map_err(|e| e.to_string())?;
            ensure(ok, || format!("no vanishing at n={n}, q={q}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (n,q) pairs vanish exactly"))
}

fn c3_asymptotics() -> Outcome {
    let mut total = 0;
    for var in [ExpansionVar::Rho, ExpansionVar::Epsilon] {
        let r = verify_i_asymptotics(bundled_corpus(), var).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{}: {} failures\n{r}", var.name(), r.failures()))?;
        total += r.checks.len();
    }
    Ok(format!("{total} coefficient checks exact"))
}

/// For n=3, q=1/2: `u = (K + r^3)^(-1/3)`, `p = 5`, and the residual is
/// `(1 - 4K) r (K + r^3)^(-7/3)`.
fn n3_oracle(k: f64, r: f64) -> (f64, f64) {
    let s = k + r.powi(3);
    let u = s.powf(-1.0 / 3.0);
    let du = -r * r * s.powf(-4.0 / 3.0);
    let lap = -4.0 * k * r * s.powf(-7.0 / 3.0);
    let nonlin = du.abs().sqrt() * u.powi(5);
    ((lap + nonlin) / lap.abs().max(nonlin), (1.0 - 4.0 * k) * r * s.powf(-7.0 / 3.0))
}

fn c4_pde_residual() -> Outcome {
    let radii = log_spaced(0.1, 10.0, 32);
    let mut worst: f64 = 0.0;
    for (n, q) in GROUND_STATES {
        let form = RadialClosedForm::GroundState { n, q };
        for &r in &radii {
            let rel = pde_residual_relative(&form, r).map_err(|e| e.to_string())?;
            ensure(rel <= 1e-10, || format!("n={n} q={q} r={r}: relative residual {rel:e}"))?;
            worst = worst.max(rel);
        }
    }
    let gs = GroundState::new(3, 0.5).map_err(|e| e.to_string())?;
    ensure((gs.k - 0.25).abs() < 1e-15 && (gs.p - 5.0).abs() < 1e-14, || format!("K={} p={}", gs.k, gs.p))?;
    let form = RadialClosedForm::GroundState { n: 3, q: 0.5 };
    for &r in &radii {
        let (u, du, _) = gs.jet(r);
        let s = 0.25 + r.powi(3);
        ensure((u / s.powf(-1.0 / 3.0) - 1.0).abs() < 1e-13, || format!("u mismatch at r={r}"))?;
        ensure((du / (-r * r * s.powf(-4.0 / 3.0)) - 1.0).abs() < 1e-12, || format!("u' mismatch at r={r}"))?;
        let (_, exact) = n3_oracle(0.25, r);
        ensure(exact == 0.0, || "oracle residual nonzero at K = 1/4".into())?;
        let res = pde_residual_radial(&form, r).map_err(|e| e.to_string())?;
        ensure(res.abs() <= 1e-10 * s.powf(-7.0 / 3.0) * r.max(1.0), || format!("residual {res:e} at r={r}"))?;
        // a perturbed K leaves the (1 - 4K) term behind
        let (rel, predicted) = n3_oracle(0.3, r);
        ensure(rel.abs() > 1e-3 && predicted < 0.0, || format!("perturbed K cancels at r={r}"))?;
    }
    Ok(format!("worst relative residual {worst:.1e} over 96 radii"))
}

fn c5_delta_h() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20260);
    let radii = log_spaced(0.1, 10.0, 8);
    let mut worst: f64 = 0.0;
    for (n, q) in GROUND_STATES {
        for _ in 0..20 {
            let (beta, sigma) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            for &r in &radii {
                let s = delta_h_sides(n, q, beta, sigma, r).map_err(|e| e.to_string())?;
                ensure(s.relative() <= 1e-8, || format!("n={n} q={q} beta={beta} sigma={sigma} r={r}: {s:?}"))?;
                worst = worst.max(s.relative());
            }
        }
        let nf = n as f64;
        let (beta, sigma) = (2.0 / (nf - 2.0), -q / (nf - (nf - 1.0) * q));
        for &r in &radii {
            let t = tensor_deviation(n, q, beta, sigma, r).map_err(|e| e.to_string())?;
            ensure(t <= 1e-10, || format!("tensor deviation {t:e} at n={n} q={q} r={r}"))?;
        }
    }
    let off = tensor_deviation(3, 0.5, 0.0, 0.0, 1.0).map_err(|e| e.to_string())?;
    ensure(off > 1e-3, || format!("control deviation only {off:e}"))?;
    Ok(format!("worst relative identity error {worst:.1e}; control deviation {off:.3}"))
}

fn c6_constancy() -> Outcome {
    let radii = log_spaced(0.1, 10.0, 32);
    let mut parts = Vec::new();
    for (n, q) in GROUND_STATES {
        let f = aux_f_profile(n, q, &radii).map_err(|e| e.to_string())?;
        let spread = relative_spread(&f);
        ensure(spread <= 1e-10, || format!("n={n} q={q}: spread {spread:e}"))?;
        let g = aux_f_profile_with(n, q, 1.1 * critical_d(n, q), &radii).map_err(|e| e.to_string())?;
        let control = relative_spread(&g);
        ensure(control > 1e-3, || format!("n={n} q={q}: control spread only {control:e}"))?;
        parts.push(format!("{spread:.0e}/{control:.2}"));
    }
    Ok(format!("spread/control {}", parts.join(" ")))
}

fn c7_thresholds() -> Outcome {
    let cases = [
        (3u32, 0.0, 5.0, 0.1),
        (4, 0.0, 3.0, 0.1),
        (3, 0.25, curve_v(3, 0.25).unwrap() + 0.75, 0.15),
    ];
    let mut parts = Vec::new();
    for (n, q, expect, tol) in cases {
        let t = Instant::now();
        let p = existence_threshold(n, q, 1.5, 8.0, 1e-4).map_err(|e| e.to_string())?;
        let dt = t.elapsed();
        ensure((p - expect).abs() <= tol, || format!("n={n} q={q}: threshold {p} vs {expect}"))?;
        ensure(dt <= Duration::from_secs(60), || format!("n={n} q={q}: took {dt:?}"))?;
        parts.push(format!("({n},{q}) {p:.4} in {dt:.1?}"));
    }
    Ok(parts.join("; "))
}

fn c8_inequalities() -> Outcome {
    let mut checked = 0;
    for n in 3..=10 {
        let report = appendix_b_check(n, 0.01).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("n={n}\n{report}"))?;
        ensure(n == 3 || report.results.iter().any(|r| r.name.starts_with("H(p,q) < 0") && r.checked > 0), || {
            format!("n={n}: grid inequality not exercised")
        })?;
        checked += report.results.iter().map(|r| r.checked).sum::<usize>();
    }
    Ok(format!("n=3..10, {checked} evaluations, no counterexample"))
}

fn c9_atlas() -> Outcome {
    let (pr, qr, res) = ((-1.0, 4.0), (0.0, 2.0), (400, 400));
    let free = scan_grid(6, pr, qr, res, false, None).map_err(|e| e.to_string())?;
    let bdd = scan_grid(6, pr, qr, res, true, None).map_err(|e| e.to_string())?;
    let cell = (pr.1 - pr.0) / res.0 as f64;
    let row = &free.cells[0];
    let first = (0..res.0)
        .find(|&j| !matches!(row[j].status, Status::LiouvilleProven(_)))
        .ok_or("bottom row is entirely Liouville")?;
    ensure(first > 0, || "bottom row starts outside the Liouville region".into())?;
    let transition = 0.5 * (free.p_center(first - 1) + free.p_center(first));
    ensure((transition - 2.0).abs() <= cell, || format!("q=0 transition at p={transition}"))?;
    ensure(row[first..].iter().all(|v| !matches!(v.status, Status::LiouvilleProven(_))), || {
        "bottom row re-enters the Liouville region".into()
    })?;
    let liouville = |s: Status| matches!(s, Status::LiouvilleProven(_));
    let liouville_any = |s: Status| matches!(s, Status::LiouvilleProven(_) | Status::LiouvilleBoundedOnly(_));
    for (i, r) in free.cells.iter().enumerate() {
        if free.q_center(i) >= 5.0 / 3.0 {
            ensure(r.iter().all(|v| liouville(v.status)), || format!("non-Liouville cell at q={}", free.q_center(i)))?;
        }
    }
    for (i, r) in bdd.cells.iter().enumerate() {
        if bdd.q_center(i) >= 1.5 {
            ensure(r.iter().all(|v| liouville_any(v.status)), || {
                format!("bounded scan: non-Liouville cell at q={}", bdd.q_center(i))
            })?;
        }
    }
    ensure(free.disjointness_violations == 0 && bdd.disjointness_violations == 0, || {
        format!("{} + {} disjointness violations", free.disjointness_violations, bdd.disjointness_violations)
    })?;
    common::golden_matches()?;
    Ok(format!("transition at p={transition:.5}; golden snapshot identical"))
}

fn hit_radius(n: u32, p: f64, q: f64, u0: f64) -> Result<f64, String> {
    match shoot(n, p, q, u0, 1e3, 1e-10).map_err(|e| e.to_string())?.status {
        ShootStatus::HitsZero(r) => Ok(r),
        s => Err(format!("n={n} p={p} q={q} u0={u0}: {s:?}")),
    }
}

fn c10_shooting() -> Outcome {
    let (outcome, samples) = shoot_sampled(3, 5.0, 0.0, 1.0, 50.0, 1e-10, &[1.0]).map_err(|e| e.to_string())?;
    ensure(outcome.status == ShootStatus::PositiveGlobal, || format!("{:?}", outcome.status))?;
    let (u1, _) = samples[0].ok_or("no sample at r=1")?;
    let exact = (4.0f64 / 3.0).powf(-0.5);
    ensure((u1 - exact).abs() <= 1e-6, || format!("u(1) = {u1} vs {exact}"))?;
    // u0 -> lambda^(2/l) u0 maps the crossing radius R to R / lambda
    let (n, p, q) = (3u32, 3.0, 0.0);
    let l = p + q - 1.0;
    let base = hit_radius(n, p, q, 1.0)?;
    let mut worst: f64 = 0.0;
    for lambda in [0.5f64, 2.0, 3.0, 10.0] {
        let r = hit_radius(n, p, q, lambda.powf((2.0 - q) / l))?;
        let err = (r * lambda / base - 1.0).abs();
        ensure(err <= 0.01, || format!("lambda={lambda}: radius {r} vs {}", base / lambda))?;
        worst = worst.max(err);
    }
    Ok(format!("u(1) error {:.1e}; worst scaling error {worst:.1e}", (u1 - exact).abs()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("reduction identities", c1_reduction),
        ("critical-curve vanishing", c2_critical_grid),
        ("expansion coefficients", c3_asymptotics),
        ("ground-state residual", c4_pde_residual),
        ("Delta H identity", c5_delta_h),
        ("auxiliary constancy", c6_constancy),
        ("radial thresholds", c7_thresholds),
        ("supremum inequalities", c8_inequalities),
        ("atlas anchors", c9_atlas),
        ("shooting oracle", c10_shooting),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let dt = t.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({dt:.1?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({dt:.1?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
