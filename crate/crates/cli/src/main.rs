//! `netresil` command-line tool.
//!
//! Every subcommand reads its inputs, computes all results in memory and
//! only then writes them, together with `manifest.json`, into `--out`.

mod commands;
mod output;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use netresil::attack::{Mode, Selector};
use netresil::metrics::CentralityKind;

#[derive(Parser)]
#[command(name = "netresil", version, about = "Resilience analysis for undirected social networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary statistics, degree tables and clustering by degree.
    Stats(StatsArgs),
    /// Scores of one centrality index in ranking order.
    Centrality(CentralityArgs),
    /// Vertex-removal attack curves.
    Attack(AttackArgs),
    /// Discrete power-law fit of the degree sequence.
    Fit(FitArgs),
    /// Synthetic network in edge-list and role-file form.
    Generate(GenerateArgs),
    /// Edge-wise union of two layers.
    Aggregate(AggregateArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Edge list, one `src,dst` pair per line.
    #[arg(long)]
    edges: PathBuf,
    /// Optional `node,role` file.
    #[arg(long)]
    roles: Option<PathBuf>,
}

#[derive(Args)]
struct OutDir {
    /// Directory for result files and manifest.json.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Largest degree of class A.
    #[arg(long, default_value_t = 15)]
    lo: usize,
    /// Largest degree of class B.
    #[arg(long, default_value_t = 85)]
    hi: usize,
    #[command(flatten)]
    out: OutDir,
}

#[derive(Args)]
struct CentralityArgs {
    #[command(flatten)]
    input: GraphInput,
    /// dc, bc or cc.
    #[arg(long, value_parser = parse_from_str::<CentralityKind>)]
    kind: CentralityKind,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: OutDir,
}

#[derive(Args)]
struct AttackArgs {
    #[command(flatten)]
    input: GraphInput,
    /// random, dc, bc or cc; repeatable. Defaults to all four.
    #[arg(long = "selector", value_parser = parse_from_str::<Selector>)]
    selectors: Vec<Selector>,
    /// parallel or sequential; repeatable. Defaults to parallel.
    #[arg(long = "mode", value_parser = parse_from_str::<Mode>)]
    modes: Vec<Mode>,
    /// Comma-separated removal fractions for parallel attacks.
    #[arg(long, value_delimiter = ',')]
    grid: Vec<f64>,
    /// Removal budget for sequential attacks.
    #[arg(long, default_value_t = 0.30)]
    f_max: f64,
    /// Trials for random selection.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: OutDir,
}

#[derive(Args)]
struct FitArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Bootstrap replicates for a goodness-of-fit p-value (at least 100).
    #[arg(long)]
    bootstrap_reps: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    out: OutDir,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeneratorName {
    Er,
    Pa,
    Config,
    TwoClan,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: GeneratorName,
    /// Node count.
    #[arg(long)]
    n: usize,
    /// Edge probability (er).
    #[arg(long)]
    p: Option<f64>,
    /// Edges per new node (pa).
    #[arg(long)]
    m: Option<usize>,
    /// Degree exponent (config).
    #[arg(long)]
    alpha: Option<f64>,
    /// Smallest degree (config).
    #[arg(long, default_value_t = 1)]
    kmin: u64,
    /// Link probability inside clans (two-clan).
    #[arg(long)]
    density: Option<f64>,
    /// Liaison count (two-clan).
    #[arg(long)]
    liaisons: Option<usize>,
    /// Boss count (two-clan).
    #[arg(long, default_value_t = 0)]
    bosses: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    out: OutDir,
}

#[derive(Args)]
struct AggregateArgs {
    /// Layer edge lists; give exactly two.
    #[arg(long, required = true)]
    edges: Vec<PathBuf>,
    #[command(flatten)]
    out: OutDir,
}

fn parse_from_str<T: std::str::FromStr<Err = String>>(s: &str) -> Result<T, String> {
    s.parse()
}

/// A failed run: message plus process exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub const USAGE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const COMPUTE: u8 = 3;

    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: Self::USAGE, message: message.into() }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: Self::INPUT, message: message.into() }
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        Failure::input(format!("{}: {e}", path.display()))
    }

    /// Errors raised while reading a named input file.
    pub fn loading(path: &Path, e: netresil::Error) -> Self {
        Failure::input(format!("{}: {e}", path.display()))
    }
}

impl From<netresil::Error> for Failure {
    fn from(e: netresil::Error) -> Self {
        use netresil::Error::*;
        let code = match e {
            Parse { .. } | SelfLoop { .. } | Io(_) => Failure::INPUT,
            InvalidParameter(_) => Failure::USAGE,
            _ => Failure::COMPUTE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Failure::USAGE),
            };
        }
    };
    let result = match cli.command {
        Command::Stats(a) => commands::stats(a),
        Command::Centrality(a) => commands::centrality(a),
        Command::Attack(a) => commands::attack(a),
        Command::Fit(a) => commands::fit(a),
        Command::Generate(a) => commands::generate(a),
        Command::Aggregate(a) => commands::aggregate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
