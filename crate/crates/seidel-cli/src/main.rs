//! Command-line frontend: every library operation as a subcommand with
//! text, JSON, and CSV output.

mod output;
mod verify;

use std::io::BufRead;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use seidel::families::{Family, FamilySpec};
use seidel::graph::{Graph, VertexSet};
use seidel::graph6::parse_graph6;
use seidel::linalg::DEFAULT_FILTER_PRIME;
use seidel::search::{scan_trees, ScanConfig};

#[derive(Parser)]
#[command(
    name = "seidel",
    version,
    about = "Exact Seidel-matrix kernels, switching classes, and tree scans",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "SEIDEL_FORMAT")]
    format: Format,

    /// Worker threads for scans (0 = all cores).
    #[arg(long, global = true, default_value_t = 0, env = "SEIDEL_WORKERS")]
    workers: usize,

    /// Odd prime for the modular rank stage.
    #[arg(long, global = true, default_value_t = DEFAULT_FILTER_PRIME, env = "SEIDEL_PRIME")]
    prime: u64,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1, env = "SEIDEL_SEED")]
    seed: u64,

    /// Disable the congruence pre-filter stage.
    #[arg(long, global = true, env = "SEIDEL_NO_PREFILTER")]
    no_prefilter: bool,

    /// Disable the modular rank stage.
    #[arg(long, global = true, env = "SEIDEL_NO_MODP")]
    no_modp: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "p4")]
    P4,
    #[value(name = "cycle-leaves")]
    CycleLeaves,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::G => Family::G,
            FamilyArg::H => Family::H,
            FamilyArg::P4 => Family::P4Union,
            FamilyArg::CycleLeaves => Family::CycleLeaves,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the primitive kernel vector of a graph, or "nonsingular".
    ///
    /// With no argument (or after `--`), graph6 lines are read from stdin,
    /// one result per line.
    Phi {
        /// graph6 line; omit to read lines from stdin.
        graph6: Option<String>,
    },
    /// Full report on one graph: pre-filter verdict, exact rank, phi, and
    /// every theorem check.
    Analyze { graph6: String },
    /// Build a family member and compare its closed-form phi with the
    /// kernel solver.
    Family {
        #[arg(value_enum)]
        family: FamilyArg,
        k: usize,
    },
    /// Scan all non-isomorphic free trees of the given order.
    SearchTrees { order: usize },
    /// Switch a graph with respect to a set of 0-based vertices.
    Switch {
        graph6: String,
        /// Vertices of the switching set.
        vertices: Vec<usize>,
    },
    /// Run the library's property suite at desk scale.
    VerifyTheorems {
        /// Largest tree order for the pre-filter soundness sweep.
        #[arg(long, default_value_t = 13)]
        order: usize,
    },
}

/// Exit 1: computation failed. Exit 2: the request itself was bad.
enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> CliError {
        CliError::Usage(e.to_string())
    }

    fn compute(e: impl std::fmt::Display) -> CliError {
        CliError::Compute(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Phi { graph6 } => run_phi(&cli, graph6.as_deref()),
        Command::Analyze { graph6 } => run_analyze(&cli, graph6),
        Command::Family { family, k } => run_family(&cli, (*family).into(), *k),
        Command::SearchTrees { order } => run_search_trees(&cli, *order),
        Command::Switch { graph6, vertices } => run_switch(&cli, graph6, vertices),
        Command::VerifyTheorems { order } => verify::run(&cli, *order),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_usage(line: &str) -> Result<Graph, CliError> {
    parse_graph6(line.as_bytes()).map_err(CliError::usage)
}

fn scan_config(cli: &Cli) -> ScanConfig {
    ScanConfig {
        use_prefilter: !cli.no_prefilter,
        use_modp: !cli.no_modp,
        filter_prime: cli.prime,
        workers: cli.workers,
        ..ScanConfig::default()
    }
}

fn run_phi(cli: &Cli, graph6: Option<&str>) -> Result<(), CliError> {
    if let Format::Csv = cli.format {
        println!("graph6,singular,phi");
    }
    match graph6 {
        Some(line) => emit_phi_line(cli, line),
        None => {
            let stdin = std::io::stdin();
            for line in stdin.lock().lines() {
                let line = line.map_err(CliError::compute)?;
                if line.trim().is_empty() {
                    continue;
                }
                emit_phi_line(cli, &line)?;
            }
            Ok(())
        }
    }
}

fn emit_phi_line(cli: &Cli, line: &str) -> Result<(), CliError> {
    let g = parse_usage(line)?;
    let phi = seidel::analysis::phi(&g).map_err(CliError::compute)?;
    println!("{}", output::phi_line(cli.format, line.trim(), phi.as_ref()));
    Ok(())
}

fn run_analyze(cli: &Cli, graph6: &str) -> Result<(), CliError> {
    let g = parse_usage(graph6)?;
    let report = output::analyze(&g).map_err(CliError::compute)?;
    print!("{}", output::render_analysis(cli.format, &report));
    Ok(())
}

fn run_family(cli: &Cli, family: Family, k: usize) -> Result<(), CliError> {
    let spec = FamilySpec::new(family, k);
    let g = spec.build().map_err(CliError::usage)?;
    let expected = spec.expected_phi().map_err(CliError::usage)?;
    let computed = seidel::analysis::phi(&g)
        .map_err(CliError::compute)?
        .expect("family members are singular by construction");
    print!("{}", output::render_family(cli.format, &spec, &g, &expected, &computed));
    Ok(())
}

fn run_search_trees(cli: &Cli, order: usize) -> Result<(), CliError> {
    let cfg = scan_config(cli);
    let report = scan_trees(order, &cfg).map_err(CliError::usage)?;
    print!("{}", output::render_scan(cli.format, &report));
    Ok(())
}

fn run_switch(cli: &Cli, graph6: &str, vertices: &[usize]) -> Result<(), CliError> {
    let g = parse_usage(graph6)?;
    for &v in vertices {
        if v >= g.order() {
            return Err(CliError::Usage(format!(
                "vertex {v} out of range for order {}",
                g.order()
            )));
        }
    }
    let set = VertexSet::from_iter(g.order(), vertices.iter().copied());
    let switched = g.switch(&set);
    print!("{}", output::render_switch(cli.format, graph6.trim(), vertices, &switched));
    Ok(())
}
