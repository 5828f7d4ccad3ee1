//! Command-line front end: sample curves to CSV, run the verification
//! suites, print the limit table, compare chase strategies and render the
//! standard figures as SVG.
//!
//! Exit codes: 0 all checks pass, 1 a verification check failed, 2 internal
//! or usage error.

mod csvout;
mod figures;
mod svg;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use intercept_core::lemmas::DEFAULT_SEED;
use intercept_core::planar::{interception, pursuit};
use intercept_core::verification::{run_suite, Suite};
use std::path::PathBuf;
use std::process::ExitCode;

use csvout::{fmt_f64, CurveId};
use figures::Figure;

#[derive(Parser)]
#[command(
    name = "intercept",
    about = "Planar and spherical interception curves: sampling, verification, limits and plots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum SuiteArg {
    #[value(name = "planar")]
    Planar,
    #[value(name = "spherical")]
    Spherical,
    #[value(name = "projections")]
    Projections,
    #[value(name = "lemmas")]
    Lemmas,
    #[value(name = "all")]
    All,
}

impl From<SuiteArg> for Suite {
    fn from(a: SuiteArg) -> Suite {
        match a {
            SuiteArg::Planar => Suite::Planar,
            SuiteArg::Spherical => Suite::Spherical,
            SuiteArg::Projections => Suite::Projections,
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sample a curve to CSV (header row, 17 significant digits per value).
    Sample {
        /// Curve to sample.
        #[arg(long, value_enum)]
        curve: CurveId,
        /// Parameter range as lo:hi (defaults to a curve-specific range).
        #[arg(long)]
        range: Option<String>,
        /// Number of samples, endpoints included.
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Numerical tolerance for curve generation where one applies.
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a verification suite; one line per check, nonzero exit on failure.
    Verify {
        /// Which suite to run.
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Seed for the Monte-Carlo harnesses.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the lemniscate constants and the limiting gaps with residuals.
    Limits,
    /// Render one of the standard figures as a static SVG.
    Plot {
        /// Which figure to draw.
        #[arg(long, value_enum)]
        figure: Figure,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Limiting-gap comparison across chase strategies, as CSV.
    Compare {
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_range(spec: &str) -> Result<(f64, f64)> {
    let (lo, hi) = spec
        .split_once(':')
        .with_context(|| format!("range must look like lo:hi, got {spec:?}"))?;
    Ok((
        lo.trim().parse().with_context(|| format!("bad range start {lo:?}"))?,
        hi.trim().parse().with_context(|| format!("bad range end {hi:?}"))?,
    ))
}

fn cmd_sample(curve: CurveId, range: Option<String>, n: usize, tol: f64, out: &PathBuf) -> Result<()> {
    let (lo, hi) = match range {
        Some(spec) => parse_range(&spec)?,
        None => curve.default_range(),
    };
    let csv = csvout::sample_csv(curve, lo, hi, n, tol)?;
    std::fs::write(out, csv).with_context(|| format!("writing {}", out.display()))?;
    Ok(())
}

fn cmd_verify(suite: SuiteArg, seed: u64) -> Result<bool> {
    let checks = run_suite(suite.into(), seed)?;
    let mut all_pass = true;
    println!("name,residual,tolerance,status");
    for c in &checks {
        let status = if c.pass() { "pass" } else { "fail" };
        all_pass &= c.pass();
        println!("{},{},{},{}", c.name, fmt_f64(c.residual), fmt_f64(c.tolerance), status);
    }
    let passed = checks.iter().filter(|c| c.pass()).count();
    println!("# {passed}/{} checks passed", checks.len());
    Ok(all_pass)
}

fn cmd_limits() -> Result<()> {
    let (b_agm, b_quad, b_gamma) = intercept_core::constants::lemniscate_b_routes()?;
    let consts = intercept_core::lemniscate_constants()?;
    let limit_pq = interception::limit_pq()?;
    let limit_diff = interception::limit_pt_minus_tq()?;

    println!("quantity,value,residual");
    println!("b_agm,{},{}", fmt_f64(b_agm), fmt_f64((b_agm - consts.b).abs()));
    println!("b_quadrature,{},{}", fmt_f64(b_quad), fmt_f64((b_quad - consts.b).abs()));
    println!("b_gamma,{},{}", fmt_f64(b_gamma), fmt_f64(0.0));
    println!(
        "gauss_constant,{},{}",
        fmt_f64(consts.g),
        fmt_f64((consts.b - 1.0 / (2.0 * consts.g)).abs())
    );
    println!("b_squared,{},{}", fmt_f64(consts.b_squared), fmt_f64(0.0));
    println!(
        "gap_limit_interception,{},{}",
        fmt_f64(limit_pq.value),
        fmt_f64((limit_pq.value - consts.b_squared).abs())
    );
    println!(
        "gap_limit_pt_minus_tq,{},{}",
        fmt_f64(limit_diff.value),
        fmt_f64((limit_diff.value - limit_pq.value).abs())
    );
    println!("gap_limit_pursuit,{},{}", fmt_f64(pursuit::limit_gap()), fmt_f64(0.0));
    println!(
        "consistency_b2_4g2,{},{}",
        fmt_f64(consts.b_squared * 4.0 * consts.g * consts.g),
        fmt_f64((consts.b_squared * 4.0 * consts.g * consts.g - 1.0).abs())
    );
    Ok(())
}

fn cmd_plot(figure: Figure, out: &PathBuf) -> Result<()> {
    let svg = figures::render(figure)?;
    std::fs::write(out, svg).with_context(|| format!("writing {}", out.display()))?;
    Ok(())
}

fn cmd_compare(out: Option<PathBuf>) -> Result<()> {
    let report = pursuit::comparison_report()?;
    let mut csv = String::from("strategy,limit_gap\n");
    for row in &report.rows {
        csv.push_str(&format!("{},{}\n", row.strategy, fmt_f64(row.limit_gap)));
    }
    csv.push_str(&format!(
        "# b_squared {} interception_beats_pursuit {}\n",
        fmt_f64(report.b_squared),
        report.interception_beats_pursuit
    ));
    match out {
        Some(path) => {
            std::fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Sample {
            curve,
            range,
            n,
            tol,
            out,
        } => {
            cmd_sample(curve, range, n, tol, &out)?;
            Ok(true)
        }
        Command::Verify { suite, seed } => cmd_verify(suite, seed),
        Command::Limits => {
            cmd_limits()?;
            Ok(true)
        }
        Command::Plot { figure, out } => {
            cmd_plot(figure, &out)?;
            Ok(true)
        }
        Command::Compare { out } => {
            cmd_compare(out)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
