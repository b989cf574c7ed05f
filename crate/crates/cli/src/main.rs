//! `duffing`: period sweeps, coefficient tables, strong-coupling limits,
//! reference trajectories and the dimensional reduction.

mod config;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use duffing_core::nondim::{physical_period, to_dimensionless, PhysicalOscillator};
use duffing_core::oscillator::{exact_period, integrate_trajectory, DuffingParams};
use duffing_core::perturbation::{alp_series, lp_series, naive_series, vlp_series, MAX_ORDER};
use duffing_core::sweep::{estimate_limit, sweep_row, Spacing, SweepTable, LIMIT_COUPLINGS};
use duffing_core::{Error, MethodKind, PeriodSource};

use config::SweepSettings;

#[derive(Parser)]
#[command(name = "duffing", version, about = "Perturbative and exact periods of the Duffing oscillator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate T_exact and each method's period and error over a coupling grid.
    Sweep(SweepArgs),
    /// Print the exact frequency coefficients of each method.
    Coeffs(CoeffsArgs),
    /// Strong-coupling limits of sqrt(lambda) * T.
    Limits(LimitsArgs),
    /// Dump a reference ODE trajectory as CSV.
    Trajectory(TrajectoryArgs),
    /// Reduce a dimensional oscillator and report its period.
    Physical(PhysicalArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Smallest coupling (default 0.01).
    #[arg(long, allow_negative_numbers = true)]
    lambda_min: Option<f64>,
    /// Largest coupling (default 100).
    #[arg(long)]
    lambda_max: Option<f64>,
    /// Number of grid points, at least 2 (default 100).
    #[arg(long)]
    points: Option<usize>,
    /// Logarithmic spacing (the default).
    #[arg(long, conflicts_with = "linear")]
    log: bool,
    /// Linear spacing.
    #[arg(long)]
    linear: bool,
    /// Perturbative order N (default 3).
    #[arg(long)]
    order: Option<usize>,
    /// Comma-separated subset of lp,alp,vlp,exact (default all).
    #[arg(long, value_parser = parse_method_list)]
    methods: Option<MethodList>,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a log-log chart of the error columns.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// key = value file; flags given on the command line take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl SweepArgs {
    fn settings(&self) -> SweepSettings {
        let spacing = match (self.log, self.linear) {
            (true, _) => Some(Spacing::Log),
            (_, true) => Some(Spacing::Linear),
            _ => None,
        };
        SweepSettings {
            lambda_min: self.lambda_min,
            lambda_max: self.lambda_max,
            points: self.points,
            spacing,
            order: self.order,
            methods: self.methods.clone().map(|m| m.0),
            out: self.out.clone(),
            svg: self.svg.clone(),
        }
    }
}

#[derive(Args)]
struct CoeffsArgs {
    #[arg(long, default_value_t = 3)]
    order: usize,
    /// One of lp, alp, vlp, naive; all periodic methods when omitted.
    #[arg(long)]
    method: Option<MethodKind>,
    /// Also print the solutions x_0..x_N.
    #[arg(long)]
    series: bool,
}

#[derive(Args)]
struct LimitsArgs {
    #[arg(long, default_value_t = 3)]
    order: usize,
}

#[derive(Args)]
struct TrajectoryArgs {
    #[arg(long, allow_negative_numbers = true)]
    lambda: f64,
    /// Integration horizon (default: ten exact periods).
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PhysicalArgs {
    #[arg(long)]
    mass: f64,
    #[arg(long)]
    v2: f64,
    #[arg(long, allow_negative_numbers = true)]
    v4: f64,
    /// Turning-point amplitude A.
    #[arg(long, required_unless_present = "q0", conflicts_with_all = ["q0", "v0"])]
    amplitude: Option<f64>,
    /// Initial position, used with --v0 instead of --amplitude.
    #[arg(long, allow_negative_numbers = true, requires = "v0")]
    q0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    v0: Option<f64>,
    /// exact, numeric, lp, alp or vlp.
    #[arg(long, default_value = "exact")]
    source: PeriodSource,
    #[arg(long, default_value_t = 3)]
    order: usize,
}

/// A `--methods` value; wrapped so clap treats the list as a single argument.
#[derive(Clone)]
struct MethodList(Vec<MethodKind>);

fn parse_method_list(s: &str) -> Result<MethodList, String> {
    config::parse_methods(s).map(MethodList)
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Config(String),
    AllRowsErrored,
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Parse(_) => Failure::Config(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(a) => sweep(&a),
        Command::Coeffs(a) => coeffs(&a),
        Command::Limits(a) => limits(&a),
        Command::Trajectory(a) => trajectory(&a),
        Command::Physical(a) => physical(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(msg)) => {
            eprintln!("duffing: configuration error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::AllRowsErrored) => {
            eprintln!("duffing: every row of the sweep failed");
            ExitCode::from(3)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("duffing: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn write_to(path: Option<&Path>, body: &str) -> io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn sweep(args: &SweepArgs) -> Result<(), Failure> {
    let file = match &args.config {
        Some(p) => config::load(p).map_err(Failure::Config)?,
        None => SweepSettings::default(),
    };
    let settings = file.overlay(args.settings());
    let cfg = settings.to_config();
    cfg.validate()?;

    let methods = cfg.columns();
    let rows = cfg.grid().par_iter().map(|&l| sweep_row(l, cfg.order, &methods)).collect();
    let table = SweepTable { order: cfg.order, methods, rows };

    write_to(settings.out.as_deref(), &table.to_csv())?;
    if let Some(svg) = &settings.svg {
        std::fs::write(svg, table.to_svg())?;
    }
    if table.all_rows_errored() {
        return Err(Failure::AllRowsErrored);
    }
    Ok(())
}

fn coeffs(args: &CoeffsArgs) -> Result<(), Failure> {
    if args.order > MAX_ORDER {
        return Err(Failure::Config(format!("order must be at most {MAX_ORDER}")));
    }
    let methods = match args.method {
        Some(m) => vec![m],
        None => MethodKind::PERIODIC.to_vec(),
    };
    let mut out = String::new();
    for m in methods {
        let text = match m {
            MethodKind::Naive => naive_series(args.order)?.to_text(),
            MethodKind::Lp => lp_series(args.order)?.to_text(),
            MethodKind::Alp => alp_series(args.order)?.to_text(),
            MethodKind::Vlp => {
                // The polynomials in p = lambda/(1+alpha^2), q = alpha^2/(1+alpha^2)
                // do not depend on alpha or lambda themselves.
                out.push_str("# vlp: p = lambda/(1+alpha^2), q = alpha^2/(1+alpha^2)\n");
                vlp_series(args.order, 0.0, 0.0)?.to_text().replacen("# alpha 0\n", "", 1)
            }
        };
        // Without --series keep only the header and coefficient table.
        let keep = text.find("x[0] =").filter(|_| !args.series).unwrap_or(text.len());
        out.push_str(&text[..keep]);
    }
    write_to(None, &out)?;
    Ok(())
}

fn limits(args: &LimitsArgs) -> Result<(), Failure> {
    let (l1, l2) = LIMIT_COUPLINGS;
    let mut out =
        format!("# lim sqrt(lambda) T, extrapolated from lambda = {l1:e}, {l2:e}; order {}\n", args.order);
    out.push_str("source,limit\n");
    let sources = std::iter::once(PeriodSource::Exact).chain(MethodKind::PERIODIC.map(PeriodSource::Method));
    for src in sources {
        match estimate_limit(src, args.order) {
            Ok(v) => out.push_str(&format!("{src},{v}\n")),
            Err(e) => out.push_str(&format!("{src},NaN # {e}\n")),
        }
    }
    write_to(None, &out)?;
    Ok(())
}

fn trajectory(args: &TrajectoryArgs) -> Result<(), Failure> {
    let p = DuffingParams::new(args.lambda)?;
    let t_end = args.t_end.unwrap_or_else(|| 10.0 * exact_period(&p).value);
    let tr = integrate_trajectory(&p, t_end, args.tol)?;
    match &args.out {
        Some(path) => tr.write_csv(BufWriter::new(File::create(path)?))?,
        None => tr.write_csv(BufWriter::new(io::stdout().lock()))?,
    }
    eprintln!("{} samples, max energy drift {:.3e}", tr.samples.len(), tr.max_energy_drift());
    Ok(())
}

fn physical(args: &PhysicalArgs) -> Result<(), Failure> {
    let osc = match (args.amplitude, args.q0, args.v0) {
        (Some(a), _, _) => PhysicalOscillator::new(args.mass, args.v2, args.v4, a),
        (None, Some(q0), Some(v0)) => PhysicalOscillator::from_state(args.mass, args.v2, args.v4, q0, v0)?,
        _ => return Err(Failure::Config("give --amplitude or both --q0 and --v0".into())),
    };
    let nd = to_dimensionless(&osc)?;
    let t = physical_period(&osc, args.source, args.order)?;
    let out = format!(
        "amplitude = {}\nlambda = {}\nomega0 = {}\nperiod ({}) = {}\n",
        osc.amplitude, nd.lambda, nd.omega0, args.source, t
    );
    write_to(None, &out)?;
    Ok(())
}
