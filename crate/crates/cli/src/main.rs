use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use accretive::catalog::{self, CheckConfig, Instance, PositiveMapSpec, TradeParam};
use accretive::harness::sweep::TrialRecord;
use accretive::harness::{demo_paper, run_sweep, SweepConfig};
use accretive::numrad::{numerical_radius, range_samples, DEFAULT_EPS};
use accretive::transform::Window;
use accretive::window::{optimal_window, Objective, Variant};
use accretive::{Matrix, Status, Tolerance};
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "accretive", version, about = "Accretive transforms, numerical radius and checked operator inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Kantorovich,
    Diameter,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one catalog case; prints a verdict as JSON.
    ///
    /// Exit status: 0 pass, 1 fail, 2 hypothesis not met, 3 input error.
    Check {
        #[arg(long = "case")]
        case_id: Option<String>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long = "matrix-b")]
        matrix_b: Option<PathBuf>,
        /// `m,M`
        #[arg(long)]
        window: Option<String>,
        /// `n,N`, the window of the second matrix
        #[arg(long = "window-b")]
        window_b: Option<String>,
        #[arg(long)]
        t: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        /// JSON file holding a positive map
        #[arg(long)]
        map: Option<PathBuf>,
        /// Replay a stored instance or a failure record from a sweep report
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        /// List the case ids and exit
        #[arg(long)]
        list: bool,
    },
    /// Run the random sweep and write a JSON report.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value = "2,3,4,5,6")]
        dims: String,
        /// Only cases whose id starts with this prefix
        #[arg(long = "case")]
        case_filter: Option<String>,
        #[arg(long, default_value_t = 0.9)]
        fill: f64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Worker threads; the report does not depend on this
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Search for the best window `(m, M)` for a matrix.
    Window {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value = "A")]
        variant: String,
        #[arg(long, default_value_t = 0.0)]
        pad: f64,
        #[arg(long, value_enum, default_value = "kantorovich")]
        objective: ObjectiveArg,
    },
    /// Certified enclosure of the numerical radius.
    Radius {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
    },
    /// Boundary points of the numerical range as CSV `theta,re,im`.
    Range {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 256)]
        count: usize,
    },
    /// Reproduce the two worked examples.
    DemoPaper {
        /// Also write the JSON rows here
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn parse_window(text: &str) -> Result<Window> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [m, big_m] = parts.as_slice() else {
        bail!("window must be given as m,M, got `{text}`");
    };
    let m: f64 = m.parse().with_context(|| format!("bad m in `{text}`"))?;
    let big_m: f64 = big_m.parse().with_context(|| format!("bad M in `{text}`"))?;
    Ok(Window::new(m, big_m)?)
}

fn parse_dims(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|d| d.trim().parse::<usize>().with_context(|| format!("bad dimension `{d}`")))
        .collect()
}

fn read_matrix(path: &Path) -> Result<Matrix> {
    Matrix::read_file(path).with_context(|| format!("reading matrix from {}", path.display()))
}

fn read_map(path: &Path) -> Result<PositiveMapSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// A stored failure record carries its own case id; a bare instance does not.
fn load_instance(path: &Path) -> Result<(Option<String>, Instance)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if let Ok(rec) = serde_json::from_str::<TrialRecord>(&text) {
        return Ok((Some(rec.case_id), rec.instance));
    }
    let inst = serde_json::from_str(&text).with_context(|| format!("parsing instance {}", path.display()))?;
    Ok((None, inst))
}

#[allow(clippy::too_many_arguments)]
fn check(
    case_id: Option<String>,
    matrix: Option<PathBuf>,
    matrix_b: Option<PathBuf>,
    window: Option<String>,
    window_b: Option<String>,
    t: Option<f64>,
    alpha: Option<f64>,
    map: Option<PathBuf>,
    instance: Option<PathBuf>,
    seed: Option<u64>,
    tol: Option<f64>,
    eps: f64,
) -> Result<Status> {
    let (stored_case, mut inst) = match (&instance, &matrix) {
        (Some(p), _) => load_instance(p)?,
        (None, Some(p)) => (None, Instance::new(read_matrix(p)?)),
        (None, None) => bail!("either --matrix or --instance is required"),
    };
    let case_id = case_id.or(stored_case).context("--case is required")?;
    if instance.is_some() {
        if let Some(p) = &matrix {
            inst.a = read_matrix(p)?;
        }
    }
    if let Some(p) = &matrix_b {
        inst.b = Some(read_matrix(p)?);
    }
    if let Some(w) = &window {
        inst.window = Some(parse_window(w)?);
    }
    if let Some(w) = &window_b {
        inst.window_b = Some(parse_window(w)?);
    }
    if let Some(t) = t {
        inst.t = Some(TradeParam::new(t)?);
    }
    if let Some(a) = alpha {
        inst.alpha = Some(a);
    }
    if let Some(p) = &map {
        inst.map = Some(read_map(p)?);
    }
    if let Some(s) = seed {
        inst.aux_seed = Some(s);
    }
    let tol = match tol {
        Some(r) => Tolerance::new(r)?,
        None => Tolerance::default(),
    };
    let verdict = catalog::evaluate(&case_id, &inst, &CheckConfig { tol, eps })?;
    println!("{}", verdict.to_json());
    Ok(verdict.status)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check { list: true, .. } => {
            for c in catalog::CASES {
                println!("{:<28} {}", c.id, c.statement);
            }
        }
        Command::Check { case_id, matrix, matrix_b, window, window_b, t, alpha, map, instance, seed, tol, eps, .. } => {
            return match check(case_id, matrix, matrix_b, window, window_b, t, alpha, map, instance, seed, tol, eps) {
                Ok(Status::Pass | Status::Boundary) => Ok(ExitCode::from(0)),
                Ok(Status::Fail) => Ok(ExitCode::from(1)),
                Ok(Status::HypothesisNotMet) => Ok(ExitCode::from(2)),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    Ok(ExitCode::from(3))
                }
            };
        }
        Command::Sweep { seed, trials, dims, case_filter, fill, tol, eps, out, csv, threads } => {
            if trials == 0 {
                bail!("--trials must be at least 1");
            }
            let config = SweepConfig {
                master_seed: seed,
                trials,
                dims: parse_dims(&dims)?,
                tol: Tolerance::new(tol)?,
                eps,
                case_filter,
                fill,
            };
            if let Some(n) = threads {
                rayon_threads(n)?;
            }
            let report = run_sweep(&config)?;
            fs::write(&out, report.to_json()).with_context(|| format!("writing {}", out.display()))?;
            if let Some(p) = csv {
                fs::write(&p, report.to_csv()).with_context(|| format!("writing {}", p.display()))?;
            }
            eprint!("{}", report.to_csv());
            let failures = report.total_failures();
            eprintln!("failures: {failures}, errors: {}", report.errors.len());
            if failures > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Window { matrix, variant, pad, objective } => {
            let a = read_matrix(&matrix)?;
            let variant: Variant = variant.parse()?;
            let objective = match objective {
                ObjectiveArg::Kantorovich => Objective::Kantorovich,
                ObjectiveArg::Diameter => Objective::Diameter,
            };
            let res = optimal_window(&a, variant, pad, objective)?;
            println!("{}", serde_json::to_string_pretty(&res)?);
        }
        Command::Radius { matrix, eps } => {
            let a = read_matrix(&matrix)?;
            let e = numerical_radius(&a, eps)?;
            let out = serde_json::json!({ "lo": e.lo, "hi": e.hi, "width": e.width(), "eps": eps });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Range { matrix, count } => {
            let a = read_matrix(&matrix)?;
            println!("theta,re,im");
            for p in range_samples(&a, count)? {
                println!("{},{},{}", p.theta, p.z.re, p.z.im);
            }
        }
        Command::DemoPaper { json } => {
            let report = demo_paper()?;
            print!("{}", report.to_table());
            let text = serde_json::to_string_pretty(&report)?;
            match json {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => println!("{text}"),
            }
            if !report.all_ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn rayon_threads(n: usize) -> Result<()> {
    accretive::harness::sweep::set_threads(n).context("configuring worker threads")
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
