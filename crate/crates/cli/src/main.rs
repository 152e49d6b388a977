mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Vertex cover above and below tight degree bounds.
///
/// Exit status: 0 for yes (or a check that passed), 1 for no (or a failed
/// check), 2 for errors.
#[derive(Parser, Debug)]
#[command(name = "paramvc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a vertex cover instance against an exact degree-based bound.
    Solve(SolveArgs),
    /// Build a hardness construction and write its instance and sidecar.
    Reduce(ReduceArgs),
    /// Carry a solution across a reduction recorded in a sidecar.
    Map(MapArgs),
    /// Check an object against its definition.
    Verify(VerifyArgs),
    /// Write a generated instance in DIMACS format.
    Gen(GenArgs),
    /// Run a brute-force reference solver.
    Oracle(OracleArgs),
    /// Minimum edge bipartization within a budget.
    Bipartize(BipartizeArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Problem {
    /// cover of size at most m/B + k
    Vcl1,
    /// cover of size at most nB/(B+1) - k
    Vcu1,
}

#[derive(Args, Debug)]
struct SolveArgs {
    problem: Problem,
    #[arg(long)]
    graph: PathBuf,
    #[arg(short = 'B')]
    b: usize,
    #[arg(short = 'k')]
    k: usize,
    /// Write the certificate JSON here.
    #[arg(long)]
    certificate: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Include wall time in the report (breaks byte-identical output).
    #[arg(long)]
    timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    DsToCvcl1,
    IsToVcu2,
    VcToVcu1u,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    kind: ReduceKind,
    #[arg(long)]
    graph: PathBuf,
    #[arg(short = 'k')]
    k: usize,
    /// Constructed instance (DIMACS, with capacity lines when needed).
    #[arg(long)]
    out: PathBuf,
    /// Sidecar JSON path; defaults to the instance path with `.json` appended.
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Back,
}

#[derive(Args, Debug)]
struct MapArgs {
    direction: Direction,
    #[arg(long)]
    reduction: PathBuf,
    /// JSON vertex list, or an object holding one under `cover`, `set` or `vertices`.
    #[arg(long)]
    solution: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Cover,
    CapacitatedCover,
    MatchingMaximal,
    Bipartization,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    kind: VerifyKind,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    object: PathBuf,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Family {
    /// t disjoint stars with B leaves
    Stars {
        t: usize,
        b: usize,
    },
    /// t disjoint copies of K_{B+1}
    Cliques {
        t: usize,
        b: usize,
    },
    Cycle {
        l: usize,
    },
    /// path on L vertices
    Path {
        l: usize,
    },
    /// random graph of maximum degree B
    Random {
        n: usize,
        b: usize,
        seed: u64,
    },
    /// t disjoint paths on three vertices
    P3s {
        t: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OracleProblem {
    MinVc,
    MinCvc,
    MinDs,
    MaxIs,
    MinEbip,
    MaxMatching,
}

#[derive(Args, Debug)]
struct OracleArgs {
    problem: OracleProblem,
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args, Debug)]
struct BipartizeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(short = 'p', long)]
    budget: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => commands::solve(a),
        Command::Reduce(a) => commands::reduce(a),
        Command::Map(a) => commands::map(a),
        Command::Verify(a) => commands::verify(a),
        Command::Gen(a) => commands::gen(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Bipartize(a) => commands::bipartize(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
