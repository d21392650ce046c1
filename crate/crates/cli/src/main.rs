//! Command-line front end for the action graph library.
//!
//! Exit codes: 0 success or feasible, 1 infeasible / contradiction / failed
//! check, 2 usage or size errors.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "actiongraphs",
    version,
    about = "Action graphs for Catalan-type sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first terms of a sequence, one per line.
    Seq {
        /// Family name (catalan, fuss:K, triangle-row:N, triangle-column:K,
        /// triangle-diagonal:I, internal-triangles, super-catalan[:M]) or a
        /// comma separated list.
        sequence: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        json: bool,
    },
    /// Catalan's triangle, or the (a,b) fraction table with --ab.
    Triangle {
        #[arg(long, default_value_t = 9)]
        rows: u64,
        /// Print cat(a,b) as C(a-1,b)/(a-b) for a = 1..=rows.
        #[arg(long)]
        ab: bool,
    },
    /// Build a family and print G_n.
    Build {
        family: Family,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, value_enum, default_value_t = GraphFormat::Summary)]
        format: GraphFormat,
        /// Print the expanded form instead of the condensed one.
        #[arg(long)]
        expand: bool,
        /// Largest expanded graph to materialize.
        #[arg(long, default_value_t = actiongraphs::DEFAULT_EXPAND_LIMIT)]
        limit: u64,
    },
    /// Check the three axioms on every step of a family.
    CheckAxioms {
        family: Family,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        params: FamilyParams,
        /// Sequence for the step-count axiom; defaults to the family's own.
        #[arg(long)]
        seq: Option<String>,
        #[arg(long, default_value_t = actiongraphs::DEFAULT_EXPAND_LIMIT)]
        limit: u64,
        #[arg(long)]
        json: bool,
    },
    /// Necessary-condition gate on the first terms of a sequence.
    Gate {
        #[command(flatten)]
        input: SeqInput,
        #[arg(long, default_value_t = 3)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Infer path-length rules step by step.
    Infer {
        #[command(flatten)]
        input: SeqInput,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        /// Require every rule to be a non-negative integer.
        #[arg(long)]
        integral: bool,
        #[arg(long)]
        json: bool,
    },
    /// Gate first, then inference: the cheapest decisive certificate.
    Certify {
        #[command(flatten)]
        input: SeqInput,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[arg(long)]
        integral: bool,
        #[arg(long)]
        json: bool,
    },
    /// The n-table of the super Catalan graph G_n.
    Ntable {
        #[arg(long)]
        n: u32,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check both n-table recurrences for every n < n-max.
    Verify {
        #[arg(long, default_value_t = 7)]
        n_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Write a whole family as a JSON envelope or DOT.
    Export {
        family: Family,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read a graph document and re-emit it, optionally in the other form.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Option<Form>,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
        #[arg(long, default_value_t = actiongraphs::DEFAULT_EXPAND_LIMIT)]
        limit: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Classic,
    Fuss,
    Super,
}

#[derive(Args)]
struct FamilyParams {
    /// Arity for the fuss family.
    #[arg(long)]
    k: Option<u64>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SeqInput {
    /// Family name or comma separated list.
    #[arg(long)]
    seq: Option<String>,
    /// File with one integer per line.
    #[arg(long)]
    seq_file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Summary,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    Expanded,
    Condensed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
