//! `trifree`: certificates, tables and experiments for list colouring of
//! triangle-free and bipartite graphs.
//!
//! Every run prints one JSON report and exits with 0 (certified true or
//! success), 1 (certified false), 2 (undecided), 3 (size cap) or 64 (usage).

mod bip;
mod graph;
mod property_p;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use report::{Clock, Outcome, RunReport, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(
    name = "trifree",
    version,
    about = "Certified list-colouring computations"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write tabular output (CSV) here; `-` means stdout, which then
    /// replaces the JSON report there.
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
    /// Worker threads for window scans.
    #[arg(long, global = true, env = "TRIFREE_THREADS")]
    threads: Option<usize>,
    /// Omit wall-clock timing so reports are byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The degree threshold condition for the counting argument.
    #[command(name = "property-p", subcommand)]
    PropertyP(property_p::Cmd),
    /// Local-lemma choosability of bipartite graphs with per-part degrees.
    #[command(subcommand)]
    Bip(bip::Cmd),
    /// Queries on a single graph.
    #[command(subcommand)]
    Graph(graph::Cmd),
}

impl Command {
    fn name(&self) -> String {
        let (top, sub) = match self {
            Command::PropertyP(c) => ("property-p", c.name()),
            Command::Bip(c) => ("bip", c.name()),
            Command::Graph(c) => ("graph", c.name()),
        };
        format!("{top} {sub}")
    }

    fn parameters(&self) -> Value {
        match self {
            Command::PropertyP(c) => c.parameters(),
            Command::Bip(c) => c.parameters(),
            Command::Graph(c) => c.parameters(),
        }
    }

    fn run(&self) -> trifree_core::Result<Outcome> {
        match self {
            Command::PropertyP(c) => c.run(),
            Command::Bip(c) => c.run(),
            Command::Graph(c) => c.run(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    ExitCode::from(run(cli) as u8)
}

fn run(cli: Cli) -> i32 {
    if let Some(n) = cli.global.threads {
        if n == 0
            || rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .is_err()
        {
            eprintln!("error: invalid thread count {n}");
            return EXIT_USAGE;
        }
    }
    let clock = Clock::start();
    let result = cli.command.run();
    let timing = clock.timing(!cli.global.no_timing);
    let mut report = RunReport {
        command: cli.command.name(),
        parameters: cli.command.parameters(),
        verdict: None,
        exit_code: 0,
        results: Value::Null,
        error: None,
        seeds: Vec::new(),
        timing,
        version: report::version(),
    };
    let mut csv = None;
    match result {
        Ok(outcome) => {
            report.exit_code = outcome.code();
            report.verdict = outcome.verdict;
            report.results = outcome.results;
            report.seeds = outcome.seeds;
            csv = outcome.csv;
        }
        Err(e) => {
            eprintln!("error: {e}");
            report.exit_code = report::error_code(&e);
            report.error = Some(e.to_string());
        }
    }
    let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    let csv_to_stdout = cli
        .global
        .csv
        .as_deref()
        .is_some_and(|p| p.as_os_str() == "-");
    if let (Some(path), Some(text)) = (&cli.global.csv, &csv) {
        if csv_to_stdout {
            print!("{text}");
        } else if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None if csv_to_stdout && csv.is_some() => {}
        None => print!("{json}"),
    }
    report.exit_code
}
