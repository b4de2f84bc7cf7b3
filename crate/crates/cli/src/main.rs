mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "isored", version, about = "Isospectral reductions and cospectral vertices")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Schur,
    Branch,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a graph over a set of kept vertices.
    Reduce {
        graph: PathBuf,
        /// Comma-separated vertex indices to keep.
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Method::Schur)]
        method: Method,
    },
    /// Test whether two vertices are cospectral.
    Cospectral {
        graph: PathBuf,
        a: usize,
        b: usize,
        /// Also test strong cospectrality.
        #[arg(long)]
        strong: bool,
        /// Cross-check strong cospectrality with floating-point projectors.
        #[arg(long)]
        numeric_check: bool,
        #[arg(long, default_value_t = isored_core::cospec::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Measure of latency of a cospectral pair.
    Latency {
        graph: PathBuf,
        a: usize,
        b: usize,
        /// Refuse graphs with more vertices than this (the search is exponential).
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
    /// Build a graph whose reduction over vertices 0 and 1 is a given 2x2 matrix.
    Unpack {
        /// Reduced matrix in JSON form.
        matrix: PathBuf,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed and non-returning walk counts at a vertex.
    Walks {
        graph: PathBuf,
        a: usize,
        #[arg(short = 'K', long = "K", default_value_t = 8)]
        k: usize,
    },
    /// Characteristic polynomial det(M - λI), optionally after deleting vertices.
    Charpoly {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        delete: Vec<usize>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Reduce { graph, keep, method } => commands::reduce(&graph, &keep, method, json),
        Command::Cospectral {
            graph,
            a,
            b,
            strong,
            numeric_check,
            tol,
        } => commands::cospectral(&graph, a, b, strong, numeric_check.then_some(tol), json),
        Command::Latency { graph, a, b, max_n } => commands::latency(&graph, a, b, max_n, json),
        Command::Unpack { matrix, out } => commands::unpack(&matrix, out.as_deref(), json),
        Command::Walks { graph, a, k } => commands::walks(&graph, a, k, json),
        Command::Charpoly { graph, delete } => commands::charpoly(&graph, &delete, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("isored: {e}");
            e.exit_code()
        }
    }
}
