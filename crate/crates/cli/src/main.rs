//! `radii`: starlikeness, convexity and strong-starlikeness radii of
//! normalized special functions.
//!
//! Exit status: 0 on success, 1 on a computation error or a failed
//! certificate, 2 on an argument error.

mod args;
mod record;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use radii_core::domains::{alpha_numeric, alpha_of, TargetDomain};
use radii_core::solver::{solve_with, Problem, RadiusQuery, RootOptions, DEFAULT_TABLE_LEN};
use radii_core::verify::{
    certify_result, check_disk_lemma, check_lambda_inequality, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use radii_core::zeros::{positive_zeros_with, ZeroKind, ZeroOptions};
use radii_core::Error;

use args::{DomainArgs, FunctionArgs, ProblemArgs};
use record::{emit, AlphaRecord, CheckRecord, Format, RadiusRecord, ZeroRecord};

#[derive(Parser, Debug)]
#[command(
    name = "radii",
    version,
    about = "Radii of starlikeness and convexity for normalized special functions"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write records to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Tolerances {
    /// Root residual at which Newton stops
    #[arg(long, default_value_t = 1e-12)]
    residual_tol: f64,
    /// Zeros in the table for strongly-starlike radii (doubled as needed)
    #[arg(long = "zeros", default_value_t = DEFAULT_TABLE_LEN)]
    table_len: usize,
}

impl Tolerances {
    fn root_options(&self) -> RootOptions {
        RootOptions {
            residual_tol: self.residual_tol,
            ..RootOptions::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one radius equation
    Radius {
        #[command(flatten)]
        function: FunctionArgs,
        #[command(flatten)]
        problem: ProblemArgs,
        #[command(flatten)]
        tol: Tolerances,
    },
    /// First positive zeros of a kernel
    Zeros {
        #[command(flatten)]
        family: args::FamilyArgs,
        /// Kernel: base, weighted_derivative, g_prime, h_prime
        #[arg(long, default_value = "base")]
        kind: String,
        /// Number of zeros
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Largest abscissa to scan (default: min(50 x first-zero estimate, 500); "inf" for none)
        #[arg(long)]
        ceiling: Option<f64>,
    },
    /// Disk radius alpha of a target domain
    Alpha {
        #[command(flatten)]
        domain: DomainArgs,
        /// Print every catalogued domain
        #[arg(long)]
        all: bool,
        /// Boundary grid for the numeric value
        #[arg(long, default_value_t = 4096)]
        grid: usize,
    },
    /// Certify a radius (0.99 r* inside, 1.01 r* outside, sharpness) or run
    /// the random inequality suites
    Verify {
        #[command(flatten)]
        function: FunctionArgs,
        #[command(flatten)]
        problem: ProblemArgs,
        #[command(flatten)]
        tol: Tolerances,
        /// Boundary samples on [0, pi]
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Run the disk-lemma and lambda-inequality suites with this many trials
        #[arg(long)]
        inequalities: Option<usize>,
        /// Random seed for the inequality suites
        #[arg(long, env = "RADII_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Radii over a grid of alpha (starlike/convex) or epsilon values
    Sweep {
        #[command(flatten)]
        function: FunctionArgs,
        /// Radius problem; starlike and convex sweep alpha, strongly-starlike sweeps epsilon
        #[arg(long, value_enum, default_value = "starlike")]
        problem: args::ProblemName,
        /// Grid points k/points for k = 1..=points
        #[arg(long, default_value_t = 10)]
        points: usize,
        #[command(flatten)]
        tol: Tolerances,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("computation failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Returns whether every certificate passed.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    };
    let ok = match &cli.command {
        Command::Radius {
            function,
            problem,
            tol,
        } => {
            let nf = function.build()?;
            let problem = problem.build()?;
            let q = RadiusQuery { nf, problem };
            let r = solve_with(&q, tol.table_len, &tol.root_options())?;
            emit(
                &mut out,
                cli.format,
                &[RadiusRecord::new(&nf, &problem, &r)],
            )?;
            true
        }
        Command::Zeros {
            family,
            kind,
            count,
            ceiling,
        } => {
            let fam = family.build()?;
            let kind: ZeroKind = kind.parse()?;
            let opts = ZeroOptions {
                ceiling: *ceiling,
                ..ZeroOptions::default()
            };
            let t = positive_zeros_with(&fam, kind, *count, &opts)?;
            emit(&mut out, cli.format, &ZeroRecord::from_table(&t))?;
            true
        }
        Command::Alpha { domain, all, grid } => {
            let domains = if *all {
                TargetDomain::catalog()
            } else {
                vec![domain.build()?]
            };
            let mut recs = Vec::new();
            for d in &domains {
                let closed = alpha_of(d)?;
                let numeric = if d.boundary_evaluable() {
                    Some(alpha_numeric(d, *grid)?)
                } else {
                    None
                };
                if let Some(w) = &closed.warning {
                    eprintln!("warning: {}: {w}", d.name());
                }
                recs.push(AlphaRecord::new(d, &closed, numeric.as_ref()));
            }
            emit(&mut out, cli.format, &recs)?;
            true
        }
        Command::Verify {
            function,
            problem,
            tol,
            samples,
            inequalities,
            seed,
        } => {
            let mut recs = Vec::new();
            if let Some(trials) = inequalities {
                recs.push(CheckRecord::new(
                    "disk_lemma",
                    check_disk_lemma(*trials, *seed),
                ));
                recs.push(CheckRecord::new(
                    "lambda_inequality",
                    check_lambda_inequality(*trials, *seed),
                ));
            }
            let mut protocol_ok = true;
            if function.family.family.is_some() {
                let nf = function.build()?;
                let q = RadiusQuery {
                    nf,
                    problem: problem.build()?,
                };
                let r = solve_with(&q, tol.table_len, &tol.root_options())?;
                let rep = certify_result(&q, r, *samples)?;
                protocol_ok = rep.passed;
                recs.push(CheckRecord::new("inner", rep.inner));
                if let Some(o) = rep.outer {
                    let name = format!("outer_{}", verdict_name(rep.outer_verdict));
                    recs.push(CheckRecord::new(&name, o));
                }
                recs.push(CheckRecord::new("sharpness", rep.sharpness));
            } else if inequalities.is_none() {
                return Err(Failure::Usage(
                    "verify needs a function (--family ...) or --inequalities N".into(),
                ));
            }
            let all_passed = recs
                .iter()
                .all(|r| r.report.passed || r.check.starts_with("outer_"));
            emit(&mut out, cli.format, &recs)?;
            all_passed && protocol_ok
        }
        Command::Sweep {
            function,
            problem,
            points,
            tol,
        } => {
            let nf = function.build()?;
            if *points == 0 {
                return Err(Failure::Usage("--points must be positive".into()));
            }
            let opts = tol.root_options();
            let mut recs = Vec::new();
            for k in 1..=*points {
                let v = k as f64 / *points as f64;
                let problem = match problem {
                    args::ProblemName::Starlike => Problem::Starlike {
                        domain: TargetDomain::Disk { alpha: v },
                    },
                    args::ProblemName::Convex => Problem::Convex {
                        domain: TargetDomain::Disk { alpha: v },
                    },
                    args::ProblemName::StronglyStarlike => Problem::StronglyStarlike { epsilon: v },
                };
                let r = solve_with(&RadiusQuery { nf, problem }, tol.table_len, &opts)?;
                recs.push(RadiusRecord::new(&nf, &problem, &r));
            }
            emit(&mut out, cli.format, &recs)?;
            true
        }
    };
    out.flush()?;
    Ok(ok)
}

fn verdict_name(v: radii_core::verify::OuterVerdict) -> &'static str {
    use radii_core::verify::OuterVerdict::*;
    match v {
        FailsAsExpected => "fails_as_expected",
        Conservative => "conservative",
        Skipped => "skipped",
        UnexpectedPass => "unexpected_pass",
    }
}
