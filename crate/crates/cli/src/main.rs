//! `graphcx`: enumeration, complexes, homology, representation tables and
//! certificates from the command line.
//!
//! Exit codes: 0 when everything passed, 1 when a check failed, 2 on usage,
//! build or I/O errors.

mod commands;
mod config;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Claim, Outcome};
use config::Settings;
use output::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] graphcx::Error),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
}

#[derive(Parser, Debug)]
#[command(
    name = "graphcx",
    version,
    about = "Exact graph complexes and wheel class certificates"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, global = true)]
    genus: Option<usize>,
    #[arg(long, global = true)]
    legs: Option<usize>,
    #[arg(long, global = true)]
    j: Option<usize>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    degree: Option<i64>,
    /// com or hlie
    #[arg(long, global = true)]
    operad: Option<String>,
    #[arg(long, global = true)]
    no_loops: bool,
    /// Drop graphs with a loop at a trivalent genus zero vertex.
    #[arg(long, global = true)]
    no_simple_loops: bool,
    /// json, csv or human
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Flat key = value file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads; all cores by default.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allow computations that take minutes.
    #[arg(long, global = true)]
    opt_in_slow: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List isomorphism classes of stable graphs.
    Enumerate,
    /// Dimensions of the Feynman transform complex.
    Complex,
    /// Matrix of the differential out of `--degree`.
    Differential,
    /// Homology ranks, of the Feynman transform or of GC2 with `--gc2`.
    Homology {
        #[arg(long)]
        gc2: bool,
    },
    /// Representation theory tables.
    Rep {
        #[command(flatten)]
        args: RepArgs,
        #[command(subcommand)]
        table: RepTable,
    },
    /// Run a certificate producing check.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        /// For `nontrivial`: build GC2 directly instead of combining the other checks.
        #[arg(long)]
        brute_force: bool,
    },
}

#[derive(Args, Debug)]
struct RepArgs {
    #[arg(long, global = true)]
    shape: Option<String>,
    #[arg(long, global = true)]
    hook: Option<String>,
    #[arg(long, global = true)]
    beta: Option<String>,
    #[arg(long, global = true)]
    q: Option<usize>,
    #[arg(long, global = true)]
    i: Option<usize>,
    #[arg(long, global = true)]
    t: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum RepTable {
    /// Multiplicity of L_q x beta in the restriction of a shape.
    Restrict,
    /// Multiplicity of L_q in the restriction of a hook to S2 wr Sq.
    Wreath,
    /// Multiplicities of the characters of the cyclic group.
    Cyclic,
    /// Dimension of the span of the composition relations.
    Relations,
}

fn settings(cli: &Cli) -> Result<Settings, CliError> {
    let c = &cli.common;
    let mut s = match &c.config {
        Some(p) => Settings::load(p)?,
        None => Settings::default(),
    };
    s.flag("genus", c.genus);
    s.flag("legs", c.legs);
    s.flag("j", c.j);
    s.flag("degree", c.degree);
    s.flag("operad", c.operad.as_ref());
    s.switch("no-loops", c.no_loops);
    s.switch("no-simple-loops", c.no_simple_loops);
    s.flag("format", c.format.as_ref());
    s.flag("out", c.out.as_ref().map(|p| p.display()));
    s.flag("jobs", c.jobs);
    s.switch("opt-in-slow", c.opt_in_slow);
    match &cli.command {
        Command::Homology { gc2 } => s.switch("gc2", *gc2),
        Command::Verify { brute_force, .. } => s.switch("brute-force", *brute_force),
        Command::Rep { args, .. } => {
            s.flag("shape", args.shape.as_ref());
            s.flag("hook", args.hook.as_ref());
            s.flag("beta", args.beta.as_ref());
            s.flag("q", args.q);
            s.flag("i", args.i);
            s.flag("t", args.t);
        }
        _ => {}
    }
    Ok(s)
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let s = settings(cli)?;
    let format: Format = s.get("format")?.unwrap_or(Format::Human);
    if let Some(jobs) = s.get::<usize>("jobs")? {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        // fails only if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let outcome: Outcome = match &cli.command {
        Command::Enumerate => commands::enumerate(&s)?,
        Command::Complex => commands::complex(&s)?,
        Command::Differential => commands::differential(&s)?,
        Command::Homology { .. } => commands::homology(&s)?,
        Command::Rep { table, .. } => match table {
            RepTable::Restrict => commands::rep_restrict(&s)?,
            RepTable::Wreath => commands::rep_wreath(&s)?,
            RepTable::Cyclic => commands::rep_cyclic(&s)?,
            RepTable::Relations => commands::rep_relations(&s)?,
        },
        Command::Verify { claim, .. } => commands::verify(&s, *claim)?,
    };
    let text = outcome.report.render(format);
    match s.raw("out") {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(path.to_string(), e))?,
        None => print!("{text}"),
    }
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
