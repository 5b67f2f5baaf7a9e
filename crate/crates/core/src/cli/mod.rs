//! Job runner behind the `darboux` binary.
//!
//! Each subcommand builds a chain from a [`JobConfig`] (flags over an
//! optional JSON/TOML file) and writes one data file. Diagnostics go to
//! stderr. Exit codes: 0 success, 1 configuration or I/O error, 2 singular
//! chain, 3 verification failure.

mod commands;
mod config;
mod table;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::exp_algebra::Hyperbolic;

pub use commands::{
    jost, oracle_level_deviation, potential, spectrum, verify, verify_checks, Check, Output,
    ORACLE_LEVEL_TOL,
};
pub use config::{Format, Job, JobConfig, KGrid};
pub use table::{Cell, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_SINGULAR: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "darboux", version, about = "Solvable semiaxis potentials from Darboux chains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample V_N on the x-grid
    Potential(JobArgs),
    /// Bound-state table and normalized eigenfunctions
    Spectrum(JobArgs),
    /// Jost function and phase shift on the k-grid
    Jost(JobArgs),
    /// Run the verification suite and write a report
    Verify(JobArgs),
}

fn parse_kind(s: &str) -> Result<Hyperbolic, String> {
    match s.trim() {
        "cosh" => Ok(Hyperbolic::Cosh),
        "sinh" => Ok(Hyperbolic::Sinh),
        other => Err(format!("expected cosh or sinh, got {other:?}")),
    }
}

#[derive(Debug, Clone, Args)]
pub struct JobArgs {
    /// JSON or TOML job file; flags override its fields
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Chain length (defaults to the number of rates)
    #[arg(long)]
    pub n: Option<usize>,
    /// Rates a_1 < ... < a_N, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Option<Vec<f64>>,
    /// Shifts b_1..b_N (default 0)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub b: Option<Vec<f64>>,
    /// cosh/sinh per function (default alternating, starting with cosh)
    #[arg(long, value_delimiter = ',', value_parser = parse_kind)]
    pub kinds: Option<Vec<Hyperbolic>>,
    #[arg(long, allow_hyphen_values = true)]
    pub xmin: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub xmax: Option<f64>,
    /// Number of x samples
    #[arg(long)]
    pub points: Option<usize>,
    /// kmin:kmax:count or a comma list
    #[arg(long)]
    pub kgrid: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Skip the finite-difference spectrum cross-check
    #[arg(long)]
    pub no_oracle: bool,
}

impl JobArgs {
    fn flags(&self) -> JobConfig {
        JobConfig {
            n: self.n,
            a: self.a.clone(),
            b: self.b.clone(),
            kinds: self.kinds.clone(),
            xmin: self.xmin,
            xmax: self.xmax,
            points: self.points,
            kgrid: self.kgrid.clone().map(KGrid::Text),
            format: self.format,
            out: self.out.clone(),
            no_oracle: self.no_oracle.then_some(true),
        }
    }

    pub fn job(&self, command: &str) -> crate::Result<Job> {
        let base = match &self.config {
            Some(path) => JobConfig::from_file(path)?,
            None => JobConfig::default(),
        };
        base.overlay(self.flags()).resolve(command)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SingularChain { .. } | Error::Pole { .. } => EXIT_SINGULAR,
        Error::Accuracy { .. } | Error::Integration(_) => EXIT_VERIFY,
        _ => EXIT_CONFIG,
    }
}

fn side_path(out: &Path, suffix: &str) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    out.with_file_name(format!("{stem}_{suffix}.csv"))
}

fn write_output(output: &Output, job: &Job) -> std::io::Result<()> {
    output.main.write(&job.out, job.format)?;
    for (suffix, table) in &output.side {
        table.write(&side_path(&job.out, suffix), Format::Csv)?;
    }
    Ok(())
}

type Runner = fn(&Job) -> crate::Result<Output>;

/// Runs one parsed command and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let (name, args, command): (&str, &JobArgs, Runner) = match &cli.command {
        Command::Potential(a) => ("potential", a, potential),
        Command::Spectrum(a) => ("spectrum", a, spectrum),
        Command::Jost(a) => ("jost", a, jost),
        Command::Verify(a) => ("verify", a, verify),
    };
    let job = match args.job(name) {
        Ok(job) => job,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let output = match command(&job) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    if let Err(e) = write_output(&output, &job) {
        eprintln!("error: cannot write {}: {e}", job.out.display());
        return EXIT_CONFIG;
    }
    if output.failed {
        EXIT_VERIFY
    } else {
        EXIT_OK
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_CONFIG
            } else {
                EXIT_OK
            }
        }
    }
}
