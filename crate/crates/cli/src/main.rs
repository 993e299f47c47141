//! `cutwiener`: compute and cross-check Wiener-type indices from the
//! command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::CliError;

#[derive(Debug, Parser)]
#[command(name = "cutwiener", version, about = "Exact Wiener-type indices via the cut method")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute indices with one method (or all of them).
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        partition: PartitionArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Cut)]
        method: MethodArg,
        /// Indices to report; comma-separated or repeated.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        index: Vec<IndexArg>,
        #[command(flatten)]
        extras: CutExtras,
    },
    /// Run direct, cut and line-graph methods and compare them.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        partition: PartitionArgs,
        #[command(flatten)]
        extras: CutExtras,
    },
    /// Write a generated graph in edge-list format.
    Generate {
        /// gmn, random, path, cycle, star, complete or bipartite.
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report an edge partition and check that it is coarser than Θ*.
    Partition {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        partition: PartitionArgs,
    },
    /// Reduce twin classes until none is left; print the trace.
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        /// Where to write the reduced graph. Without it the graph is
        /// embedded in the report.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge-list file.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Generated graph, e.g. `--gen gmn 3 2` or `--gen random 10 0.3`.
    #[arg(long = "gen", num_args = 1.., value_name = "FAMILY PARAMS")]
    generator: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct PartitionArgs {
    #[arg(long, value_enum)]
    partition: Option<PartitionSource>,
    /// Partition file; implies `--partition file`.
    #[arg(long, value_name = "PATH")]
    partition_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CutExtras {
    /// Reduce each quotient by twin classes before evaluating it.
    #[arg(long)]
    reduce: bool,
    /// Include per-class quotient graphs and weights.
    #[arg(long)]
    dump_quotients: bool,
    /// Include the quotient reduction steps (implies --reduce).
    #[arg(long)]
    trace_reduction: bool,
    /// Fill in `elapsed_ms`; reports are otherwise byte-stable.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    Cut,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexArg {
    W,
    We,
    Wehat,
    Wve,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PartitionSource {
    ThetaStar,
    File,
    SingleClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("CUTWIENER_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("CUTWIENER_THREADS={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = configure_threads().and_then(|()| commands::run(cli.command));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("cutwiener: {err}");
            ExitCode::from(err.code())
        }
    }
}
