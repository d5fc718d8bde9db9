//! `arrowkit`: exact Ramsey arrowing from the command line.
//!
//! Results are JSON on stdout; graphs, colourings and gadgets go to files.
//! Exit codes: 0 done, 2 usage, 3 bad input, 10 undecided within budget,
//! 11 infeasible at this scale.

mod commands;

use anyhow::Result;
use arrowkit_core::arrowing::ArrowOptions;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "arrowkit", version, about = "Exact Ramsey arrowing toolkit")]
struct Cli {
    #[command(flatten)]
    search: SearchFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SearchFlags {
    /// Node budget per command (search tree nodes).
    #[arg(long, global = true, env = "ARROWKIT_BUDGET")]
    budget: Option<u64>,
    /// Wall-clock limit per command, in seconds.
    #[arg(long, global = true)]
    time_limit: Option<f64>,
    /// Worker threads for the arrowing search.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Twin-class symmetry pruning.
    #[arg(long, global = true)]
    orbit_pruning: bool,
    /// Leave timing fields out of the output.
    #[arg(long, global = true)]
    no_timing: bool,
}

impl SearchFlags {
    fn options(&self) -> ArrowOptions {
        ArrowOptions {
            node_budget: self.budget,
            time_budget: self.time_limit.map(Duration::from_secs_f64),
            workers: self.workers.max(1),
            orbit_pruning: self.orbit_pruning,
            ..Default::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph arrows (red, blue).
    Arrow {
        graph: String,
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        /// Write a good colouring here when one exists.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Smallest complete graph arrowing (red, blue).
    Ramsey {
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
    },
    /// Check minimality, or shrink to a minimal subgraph.
    Minimal {
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        minimalize: bool,
        /// Where the minimalized graph goes (graph6).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Minimal graphs and their minimum degrees up to a given order.
    Survey {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        nmax: usize,
        /// Survey the graph6 lines of this file instead of all graphs.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Search for a graph arrowing h1 but not h2.
    Distinguish {
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: String,
        #[arg(long)]
        nmax: usize,
    },
    /// Build a gadget graph or hypergraph.
    Gadget {
        #[command(subcommand)]
        kind: commands::GadgetCommand,
    },
    /// Write a gadget's canonical colouring and check its properties.
    Colour {
        #[arg(long)]
        kind: String,
        gadget: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Check this colouring file instead of writing a new one.
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// Iterated focusing of a colouring on a product gadget.
    Focus {
        gadget: PathBuf,
        colouring: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export the good-colouring problem as DIMACS CNF.
    Cnf {
        graph: String,
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        #[arg(short, long)]
        output: PathBuf,
        /// Also run the built-in solver.
        #[arg(long)]
        solve: bool,
        /// Decoded model goes here (with --solve).
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.search) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            let code = commands::exit_code(&e);
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}

pub(crate) type CmdResult = Result<commands::Output>;
