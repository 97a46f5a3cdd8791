//! Command-line surface for `flagrep`: feasibility scans, table reproduction,
//! design construction and design checking, all reporting JSON.

pub mod commands;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use report::{CliError, Report, Status};

#[derive(Debug, Parser)]
#[command(name = "flagrep", version, about = "Flag-transitive 2-designs with prime replication number")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every parameter set that passes the counting conditions.
    Feasible {
        #[arg(long)]
        max_v: u64,
        #[arg(long)]
        max_lambda: u64,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Recompute the rows of a table and compare them with the printed values.
    VerifyTables {
        /// 1 to 7, or `all`.
        #[arg(long, default_value = "all")]
        table: String,
        /// Prime powers substituted into symbolic rows.
        #[arg(long, value_delimiter = ',')]
        q_grid: Option<Vec<u64>>,
        /// Stream rows of the elimination tables as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Build a design and verify it.
    Construct {
        /// `pg`, `pg-planes`, `wbs` or `table1:<line>`.
        #[arg(long)]
        design: String,
        #[arg(long)]
        q: Option<u64>,
        /// Projective dimension for `pg` (default 2) and `pg-planes` (default 3).
        #[arg(long)]
        dim: Option<u32>,
        /// Also write the design JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a design file, optionally against a group.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        group: Option<PathBuf>,
    },
}

/// Runs one parsed command; CSV output, when requested, is returned alongside.
pub fn run(cli: &Cli) -> Result<(Report, Option<String>), CliError> {
    let pool = commands::thread_pool()?;
    pool.install(|| match &cli.command {
        Command::Feasible { max_v, max_lambda, csv, .. } => commands::feasible(*max_v, *max_lambda, *csv),
        Command::VerifyTables { table, q_grid, csv } => commands::verify_tables(table, q_grid.as_deref(), *csv),
        Command::Construct { design, q, dim, out } => {
            commands::construct(design, *q, *dim, out.as_deref()).map(|r| (r, None))
        }
        Command::Check { input, group } => commands::check(input, group.as_deref()).map(|r| (r, None)),
    })
}

pub fn command_name(cli: &Cli) -> &'static str {
    match cli.command {
        Command::Feasible { .. } => "feasible",
        Command::VerifyTables { .. } => "verify-tables",
        Command::Construct { .. } => "construct",
        Command::Check { .. } => "check",
    }
}

/// Parses, runs and prints; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok((report, csv)) => {
            match csv {
                Some(text) => print!("{text}"),
                None => println!("{}", report.to_json_string()),
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            println!("{}", Report::failure(command_name(&cli), &e).to_json_string());
            e.exit_code()
        }
    }
}
