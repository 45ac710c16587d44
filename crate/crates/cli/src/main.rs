use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wittenmzv::cache::Cache;
use wittenmzv::record::{self, RecordOptions, ValueKind};
use wittenmzv::{table, verify, Failure};

/// Exact reduction of sl(4) Witten multiple zeta values to multiple zeta values.
#[derive(Parser)]
#[command(name = "wittenmzv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce one value: `sl4` takes 6 arguments, `zeta3` 7, `mt` the parts then the outer exponent.
    Reduce {
        kind: String,
        #[arg(required = true, allow_negative_numbers = true)]
        args: Vec<i64>,
        #[arg(long)]
        json: bool,
        /// Print the applied reduction rules.
        #[arg(long)]
        trace: bool,
        /// Decimal places of the numeric value.
        #[arg(long, default_value_t = 15)]
        precision: usize,
        /// JSON-lines cache file.
        #[arg(long, env = "WITTENMZV_CACHE")]
        cache: Option<PathBuf>,
    },
    /// List all convergent ζ_sl4 values of one weight, grouped by value.
    Table {
        weight: i64,
        #[arg(long)]
        regular_only: bool,
        #[arg(long)]
        json: bool,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
    Oracle,
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Reduce { kind, args, json, trace, precision, cache } => {
            let kind = ValueKind::parse(&kind)?;
            let opts = RecordOptions { digits: precision, trace };
            let rec = match cache {
                Some(path) => Cache::new(path).get_or_build(kind, &args, opts)?,
                None => record::build(kind, &args, opts)?,
            };
            Ok(if json { rec.to_json() + "\n" } else { rec.to_text() })
        }
        Command::Table { weight, regular_only, json, out } => {
            let t = table::build(weight, regular_only)?;
            let text = if json {
                serde_json::to_string(&t).map_err(|e| Failure::Internal(e.to_string()))? + "\n"
            } else {
                t.to_text()
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, &text)?;
                    Ok(format!("wrote {} tuples to {}\n", t.tuple_count, path.display()))
                }
                None => Ok(text),
            }
        }
        Command::Verify { suite, tolerance, samples, seed, json } => {
            let report = match suite {
                Suite::Paper => verify::paper_suite(tolerance.unwrap_or(1e-8))?,
                Suite::Oracle => verify::oracle_suite(samples, seed, tolerance.unwrap_or(1e-3))?,
            };
            let text = if json {
                serde_json::to_string(&report).map_err(|e| Failure::Internal(e.to_string()))? + "\n"
            } else {
                report.to_text()
            };
            if report.passed() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Verification(format!("{} of {} cases", report.failures(), report.cases.len())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(text) => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
