mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use pql_core::atlas::{emit_csv, emit_svg, fmt9, scan_grid, SupCache};
use pql_core::coeffs::{
    bundled_corpus, s3_quadratic_check, verify_critical_grid, verify_i_asymptotics, verify_s_reduction,
    verify_transcription, ExpansionVar, Report,
};
use pql_core::domains::{classify, curve_v, g_roots, h_roots, sup_phi, FeasibleSet, ParamPoint, SupValue};
use pql_core::exprcas::RationalNumber;
use pql_core::radial::{
    aux_f_profile, delta_h_sides, existence_threshold, log_spaced, pde_residual_relative, relative_spread, shoot,
    tensor_deviation, RadialClosedForm, ShootStatus,
};

#[derive(Parser)]
#[command(name = "pql", version, about = "Liouville regions and radial solutions of Δu + |∇u|^q u^p = 0")]
struct Cli {
    /// TOML file of `key = value` defaults for the subcommand's flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    L,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum Lemma {
    Cl,
    A3,
    A4,
    Opt,
    S3quad,
    All,
}

#[derive(Clone, Copy, Debug)]
struct Range(f64, f64);

impl FromStr for Range {
    type Err = String;
    fn from_str(s: &str) -> Result<Range, String> {
        let (a, b) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got {s}"))?;
        let lo = a.trim().parse::<f64>().map_err(|e| format!("{a}: {e}"))?;
        let hi = b.trim().parse::<f64>().map_err(|e| format!("{b}: {e}"))?;
        Ok(Range(lo, hi))
    }
}

#[derive(Subcommand)]
#[command(rename_all = "kebab-case")]
enum Cmd {
    /// Classify one (p, q) point.
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        bounded: bool,
    },
    /// CSV of the critical curve and the roots of G and H per q.
    Curves {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q_min: f64,
        #[arg(long)]
        q_max: f64,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Supremum L(n,q) or H(n,q).
    DomainSup {
        #[arg(long, value_enum, ignore_case = true)]
        set: SetArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        tol: f64,
    },
    /// Classify a grid of the (p, q) plane.
    Atlas {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        p_range: Range,
        #[arg(long, allow_hyphen_values = true)]
        q_range: Range,
        #[arg(long)]
        res: usize,
        #[arg(long)]
        bounded: bool,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Exact checks of the coefficient systems.
    VerifyAlgebra {
        #[arg(long, value_enum, default_value = "all")]
        lemma: Lemma,
    },
    /// Residuals of the ground state identities at log-spaced radii.
    VerifyIdentity {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: RationalNumber,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<RationalNumber>,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<RationalNumber>,
        #[arg(long)]
        samples: usize,
    },
    /// Integrate one radial solution from the origin.
    Shoot {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        u0: f64,
        #[arg(long)]
        rmax: f64,
        #[arg(long)]
        tol: f64,
    },
    /// Bisect in p for the radial existence threshold.
    Threshold {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        p_lo: f64,
        #[arg(long)]
        p_hi: f64,
        #[arg(long)]
        ptol: f64,
    },
}

fn default_cache() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os("PQL_CACHE") {
        return Some(PathBuf::from(p));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("pql").join("sups.jsonl"))
}

fn print_report(rep: &Report) -> bool {
    print!("{rep}");
    rep.passed()
}

fn verify_algebra(lemma: Lemma) -> Result<bool> {
    let corpus = bundled_corpus();
    let all = matches!(lemma, Lemma::All);
    let mut ok = true;
    if all || matches!(lemma, Lemma::Cl) {
        ok &= print_report(&verify_transcription(corpus)?);
        ok &= print_report(&verify_s_reduction(corpus)?);
    }
    if all || matches!(lemma, Lemma::A3) {
        ok &= print_report(&verify_i_asymptotics(corpus, ExpansionVar::Rho)?);
    }
    if all || matches!(lemma, Lemma::A4) {
        ok &= print_report(&verify_i_asymptotics(corpus, ExpansionVar::Epsilon)?);
    }
    if all || matches!(lemma, Lemma::Opt) {
        ok &= print_report(&verify_critical_grid());
    }
    if all || matches!(lemma, Lemma::S3quad) {
        ok &= print_report(&s3_quadratic_check());
    }
    Ok(ok)
}

fn verify_identity(
    n: u32,
    q: &RationalNumber,
    beta: Option<RationalNumber>,
    sigma: Option<RationalNumber>,
    samples: usize,
) -> Result<bool> {
    if samples < 2 {
        bail!("--samples must be at least 2");
    }
    let qf = q.to_f64();
    let nf = n as f64;
    let beta = beta.map(|b| b.to_f64()).unwrap_or(2.0 / (nf - 2.0));
    let sigma = sigma.map(|s| s.to_f64()).unwrap_or(-qf / (nf - (nf - 1.0) * qf));
    let rs = log_spaced(0.1, 10.0, samples);
    let form = RadialClosedForm::GroundState { n, q: qf };
    let (mut pde, mut dh, mut dev) = (0.0_f64, 0.0_f64, 0.0_f64);
    for &r in &rs {
        pde = pde.max(pde_residual_relative(&form, r)?);
        dh = dh.max(delta_h_sides(n, qf, beta, sigma, r)?.relative());
        dev = dev.max(tensor_deviation(n, qf, beta, sigma, r)?);
    }
    let spread = relative_spread(&aux_f_profile(n, qf, &rs)?);
    println!("n={n} q={q} beta={beta} sigma={sigma} radii={samples} in [0.1, 10]");
    println!("max relative PDE residual       {pde:.3e}");
    println!("max relative Delta H residual   {dh:.3e}");
    println!("max tensor deviation            {dev:.3e}");
    println!("relative spread of F            {spread:.3e}");
    let ok = pde <= 1e-10 && dh <= 1e-8;
    println!("{}", if ok { "PASS" } else { "FAIL" });
    Ok(ok)
}

fn curves(n: u32, q_min: f64, q_max: f64, step: f64, out: &Path) -> Result<()> {
    if !(step > 0.0) || !(q_min <= q_max) {
        bail!("need step > 0 and q-min <= q-max");
    }
    let cell = |v: Option<f64>| v.map(fmt9).unwrap_or_default();
    let mut s = String::from("q,l_V,p_V,G_root1,G_root2,H_root1,H_root2\n");
    let count = ((q_max - q_min) / step + 1e-9).floor() as usize;
    for k in 0..=count {
        let q = q_min + k as f64 * step;
        let lv = curve_v(n, q).ok();
        let g = g_roots(n, q)?;
        let h = h_roots(n, q)?;
        s.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            fmt9(q),
            cell(lv),
            cell(lv.map(|l| l + 1.0 - q)),
            cell(g.first().copied()),
            cell(g.get(1).copied()),
            cell(h.first().copied()),
            cell(h.get(1).copied())
        ));
    }
    std::fs::write(out, s).with_context(|| format!("writing {}", out.display()))?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Cmd::Classify { n, p, q, bounded } => {
            let v = classify(&ParamPoint::new(n, p, q), bounded)?;
            let status = match v.status {
                pql_core::domains::Status::LiouvilleProven(c) | pql_core::domains::Status::LiouvilleBoundedOnly(c) => {
                    format!("{} ({c})", v.status.label())
                }
                s => s.label().to_string(),
            };
            println!("status: {status}");
            println!("criteria: {}", v.criteria_string());
        }
        Cmd::Curves { n, q_min, q_max, step, out } => curves(n, q_min, q_max, step, &out)?,
        Cmd::DomainSup { set, n, q, tol } => {
            let set = match set {
                SetArg::L => FeasibleSet::D,
                SetArg::H => FeasibleSet::E,
            };
            let r = sup_phi(set, n, q, tol)?;
            let value = match r.value {
                SupValue::Finite(v) => format!("{v:.12}"),
                SupValue::PosInf => "+inf".into(),
                SupValue::NegInf => "-inf (empty set)".into(),
            };
            println!("sup: {value}");
            println!("argmax_y: {}", r.argmax_y.map(|y| format!("{y:.12}")).unwrap_or_else(|| "none".into()));
            println!("attained: {}", r.attained);
            println!("grid_cells_feasible: {}", r.grid_cells_feasible);
        }
        Cmd::Atlas { n, p_range, q_range, res, bounded, csv, svg, cache } => {
            let cache_path = cache.or_else(default_cache);
            let mut store = match &cache_path {
                Some(p) => SupCache::open(p).with_context(|| format!("opening cache {}", p.display()))?,
                None => SupCache::in_memory(),
            };
            if store.skipped_lines > 0 {
                log::warn!("{} corrupt cache lines skipped", store.skipped_lines);
            }
            let scan = scan_grid(n, (p_range.0, p_range.1), (q_range.0, q_range.1), (res, res), bounded, Some(&mut store))?;
            if let Err(e) = store.flush() {
                log::warn!("cache not written: {e}");
            }
            emit_csv(&scan, &csv)?;
            if let Some(svg) = svg {
                emit_svg(&scan, &svg)?;
            }
            println!("{} cells, {} disjointness violations", res * res, scan.disjointness_violations);
            return Ok(scan.disjointness_violations == 0);
        }
        Cmd::VerifyAlgebra { lemma } => return verify_algebra(lemma),
        Cmd::VerifyIdentity { n, q, beta, sigma, samples } => return verify_identity(n, &q, beta, sigma, samples),
        Cmd::Shoot { n, p, q, u0, rmax, tol } => {
            let o = shoot(n, p, q, u0, rmax, tol)?;
            match o.status {
                ShootStatus::PositiveGlobal => println!("positive_global"),
                ShootStatus::HitsZero(r) => println!("hits_zero {r:.12}"),
                ShootStatus::Undecided(why) => println!("undecided: {why}"),
            }
            println!("steps: {} final_r: {}", o.steps, o.final_r);
        }
        Cmd::Threshold { n, q, p_lo, p_hi, ptol } => {
            let p = existence_threshold(n, q, p_lo, p_hi, ptol)?;
            println!("threshold: {p:.6}");
            if let Ok(lv) = curve_v(n, q) {
                println!("predicted: {:.6}", lv + 1.0 - q);
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = match config::merge(&Cli::command(), std::env::args_os().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
