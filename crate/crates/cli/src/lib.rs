//! Command-line front end for `salem-core`: argument parsing, subcommands
//! and JSON/CSV output.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub mod commands;
pub mod config;
pub mod report;

pub use config::SystemConfig;
pub use report::{Format, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{flag}, column {column}: {message}")]
    Parse {
        flag: &'static str,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Core(#[from] salem_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn parse(flag: &'static str, column: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            flag,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "salem",
    version,
    about = "P-representations and the digit-flip map g"
)]
pub struct Cli {
    #[command(flatten)]
    pub system: SystemArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// Digit weights p_0,…,p_{q-1} as fractions or decimals summing to 1.
    #[arg(long, global = true, default_value = "1/2,1/2")]
    pub p: String,
    /// Flipped positions: none, all, even, finite:2,5 or mask:<pre>;<period>.
    #[arg(long, global = true, default_value = "none")]
    pub flips: String,
    /// Output format; defaults to json for single results and csv for tables.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Digits, classification and cylinder of x.
    Convert {
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 32)]
        depth: usize,
    },
    /// Exact value or enclosure of g(x).
    EvalG {
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 64)]
        depth: usize,
    },
    /// Closed form, series and Riemann enclosures of the integral of g.
    Integral {
        /// Width target for the series enclosure.
        #[arg(long, default_value = "1/1000000000000")]
        tol: String,
        /// Riemann partition rank; defaults to the largest with q^rank ≤ 65536.
        #[arg(long)]
        rank: Option<usize>,
    },
    /// One-sided limits of g at the first P-rationals.
    Jumps {
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Orbit steps allowed when confirming a point is P-rational.
        #[arg(long, default_value_t = 64)]
        depth: usize,
    },
    /// Points of the graph of g at the rank-depth cylinder endpoints.
    Graph {
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Add exact num/den columns.
        #[arg(long)]
        exact: bool,
    },
    /// Entropy-sum dimension estimates and the Moran dimension.
    Dimension {
        #[arg(long, default_value = "4,6,8,10,12")]
        ranks: String,
        /// Block digit u of the Moran-type set.
        #[arg(long)]
        u: Option<u32>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Cylinder derivative ratios along random digit strings.
    ScanDerivative {
        #[arg(long, default_value_t = 10)]
        points: usize,
        #[arg(long, default_value_t = 64)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn default_format(&self) -> Format {
        match self {
            Command::Jumps { .. } | Command::Graph { .. } | Command::ScanDerivative { .. } => {
                Format::Csv
            }
            _ => Format::Json,
        }
    }
}

/// Runs a parsed command and returns its report.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let cfg = SystemConfig::new(&cli.system.p, &cli.system.flips);
    match &cli.command {
        Command::Convert { x, depth } => {
            commands::convert(&cfg, &config::parse_rational_flag(x, "--x")?, *depth)
        }
        Command::EvalG { x, depth } => {
            commands::eval_g_cmd(&cfg, &config::parse_rational_flag(x, "--x")?, *depth)
        }
        Command::Integral { tol, rank } => {
            commands::integral(&cfg, &config::parse_tolerance(tol)?, *rank)
        }
        Command::Jumps { count, depth } => commands::jumps(&cfg, *count, *depth),
        Command::Graph { depth, exact } => commands::graph(&cfg, *depth, *exact),
        Command::Dimension { ranks, u, tol } => {
            commands::dimension(&cfg, &config::parse_ranks(ranks)?, *u, *tol)
        }
        Command::ScanDerivative { points, rank, seed } => {
            commands::scan_derivative(&cfg, *points, *rank, *seed)
        }
    }
}

/// Runs the command and writes its report to `--out` or `stdout`.
pub fn write_report(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let report = execute(cli)?;
    let format = cli
        .system
        .format
        .unwrap_or_else(|| cli.command.default_format());
    match &cli.system.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            report.write(format, &mut file)?;
            file.flush()?;
        }
        None => report.write(format, stdout)?,
    }
    Ok(())
}
