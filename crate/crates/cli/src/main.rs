//! `shiftlab`: build, derive, check, color and orient the graph families.
//!
//! Exit codes: 0 success (or HasAOP / verified), 1 NoAOP / refuted / failed
//! recipe, 2 search timeout, 64 usage or input error, 65 size cap,
//! 70 internal invariant breach, 74 I/O error.

mod commands;
mod error;
mod io;
mod repro;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::EXIT_USAGE;

#[derive(Parser)]
#[command(name = "shiftlab", version, about = "Shift graphs, line digraphs and AOP orientations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph family.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Build the line digraph of a directed input, once or iterated.
    Derive {
        #[command(subcommand)]
        op: DeriveOp,
    },
    /// Print girth, odd girth, clique number, degeneracy and chromatic number.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        /// Exact chromatic number only up to this many vertices.
        #[arg(long, default_value_t = shiftlab::invariants::DEFAULT_CHROMATIC_CAP)]
        chi_cap: usize,
        /// Machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Constructive colorings.
    Color {
        #[command(subcommand)]
        op: ColorOp,
    },
    /// Verify or decide the AOP property.
    Aop {
        #[command(subcommand)]
        op: AopOp,
    },
    /// Run a reproduction recipe and print PASS/FAIL per assertion.
    Repro(repro::ReproArgs),
}

#[derive(Args)]
pub struct Output {
    /// Write the graph or coloring here instead of stdout.
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
    /// Graphviz DOT instead of JSON.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Subcommand)]
pub enum GenFamily {
    /// Acyclic tournament T_n with arcs i -> j for i < j.
    Tournament {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Shift graph G(n,k) on increasing k-tuples of 1..=n.
    Shift {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Triangle-free Zykov graph Z_n, oriented with apexes as sinks.
    Zykov {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = shiftlab::constructors::DEFAULT_SIZE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Odd-girth gadget: odd cycle u plus a copy u' with u'_i ~ u_(i-1), u_(i+1).
    Gadget {
        #[arg(long, default_value_t = 5)]
        g: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Girth-5 construction closing every 3-edge path of a base graph.
    Girth5 {
        /// Base graph JSON; defaults to the Brinkmann graph.
        #[arg(long)]
        base: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
pub enum DeriveOp {
    /// L(G) with arc labels "(a,b)".
    Line {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// L^G(G).
    Iterate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        times: usize,
        #[arg(long, default_value_t = shiftlab::constructors::DEFAULT_SIZE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
pub enum ColorOp {
    /// k*(c)-coloring of L(G) from a c-coloring of G.
    Log {
        #[arg(long = "in")]
        input: PathBuf,
        /// Base coloring JSON; defaults to an exact (or DSATUR, above the cap) coloring.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Coloring of L(T') for a subdigraph T' of T_n through the out-degree split.
    Kabfree {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Translate between colorings and acyclic orientations.
    GallaiRoy {
        #[command(subcommand)]
        op: GallaiRoyOp,
    },
}

#[derive(Subcommand)]
pub enum GallaiRoyOp {
    /// Orient every edge from the smaller color to the larger.
    ToOrient {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Color every vertex by the longest directed path ending at it.
    ToColor {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        orient: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum AopOp {
    /// Check one orientation. Exit 0 when it is AOP, 1 otherwise.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        orient: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Search for an AOP orientation. Exit 0 found, 1 none exists, 2 timeout.
    Decide {
        #[arg(long = "in")]
        input: PathBuf,
        /// Maximum number of committed edge directions.
        #[arg(long, default_value_t = shiftlab::aop::DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Branch without forcing propagation.
        #[arg(long)]
        no_propagate: bool,
        /// Write the orientation found here.
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen { family } => commands::gen(family),
        Command::Derive { op } => commands::derive(op),
        Command::Check { input, chi_cap, json } => commands::check(&input, chi_cap, json),
        Command::Color { op } => commands::color(op),
        Command::Aop { op } => commands::aop(op),
        Command::Repro(args) => repro::run(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
