//! The `threefold` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use super::io::{load_corpus, CorpusFile, SCHEMA_JSON, SCHEMA_VERSION};
use super::run::{run_all, FactorSummary, RunReport};
use crate::chern_bounds::c3_window;
use crate::cubic_factor::find_linear_factors;
use crate::report::CheckReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCHEMA: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "threefold", version, about = "Exact checks on threefold invariant systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every check on every record; exit 1 if any check fails.
    Check { file: PathBuf },
    /// Print linear factors of each cubic form with signatures and lattice data.
    Factor {
        file: PathBuf,
        #[arg(long)]
        record: Option<String>,
    },
    /// Print every inequality with its slack; exit 1 if any fails.
    Bounds { file: PathBuf },
    /// Print the window for c3/2 given mu(x,x,x) of a very ample class.
    Window {
        #[arg(long, allow_negative_numbers = true)]
        mu: BigInt,
    },
    /// Print the JSON schema of corpus files.
    Schema,
    /// Dump all results.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn cli_main<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match run(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_VIOLATIONS
        }
    }
}

fn load(file: &PathBuf, err: &mut dyn Write) -> Result<CorpusFile, i32> {
    load_corpus(file).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", file.display());
        EXIT_SCHEMA
    })
}

fn run(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cmd {
        Command::Window { mu } => match c3_window(&mu) {
            Ok((lo, hi)) => {
                writeln!(out, "c3/2 in [{lo}, {hi}]")?;
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(EXIT_USAGE)
            }
        },
        Command::Schema => {
            write!(out, "{SCHEMA_JSON}")?;
            Ok(EXIT_OK)
        }
        Command::Check { file } => {
            let corpus = match load(&file, err) {
                Ok(c) => c,
                Err(code) => return Ok(code),
            };
            let mut bad = false;
            for rec in &corpus.records {
                let r = run_all(rec);
                bad |= r.has_violations();
                write!(out, "{}", r.to_text())?;
            }
            Ok(if bad { EXIT_VIOLATIONS } else { EXIT_OK })
        }
        Command::Bounds { file } => {
            let corpus = match load(&file, err) {
                Ok(c) => c,
                Err(code) => return Ok(code),
            };
            let mut bad = false;
            for rec in &corpus.records {
                let r = run_all(rec);
                writeln!(out, "# {}", r.name)?;
                for b in r.bounds() {
                    bad |= b.status == crate::report::Status::Fail;
                    writeln!(out, "{}", CheckReport::Bound(b.clone()).text_line())?;
                }
            }
            Ok(if bad { EXIT_VIOLATIONS } else { EXIT_OK })
        }
        Command::Factor { file, record } => {
            let corpus = match load(&file, err) {
                Ok(c) => c,
                Err(code) => return Ok(code),
            };
            let selected: Vec<_> = corpus
                .records
                .iter()
                .filter(|r| record.as_ref().is_none_or(|n| *n == r.name))
                .collect();
            if selected.is_empty() {
                if let Some(name) = record {
                    writeln!(err, "error: no record named `{name}`")?;
                    return Ok(EXIT_USAGE);
                }
            }
            for rec in selected {
                writeln!(out, "# {}", rec.name)?;
                let Some(mu) = &rec.mu else {
                    writeln!(out, "  no trilinear form")?;
                    continue;
                };
                let kahler = rec.kahler_sample().map(|s| s.vector());
                match find_linear_factors(mu, kahler.as_ref()) {
                    Ok(fs) if fs.is_empty() => writeln!(out, "  no rational linear factor")?,
                    Ok(fs) => {
                        for f in fs {
                            write!(out, "{}", FactorSummary::new(f).to_text())?;
                        }
                    }
                    Err(e) => writeln!(out, "  {e}")?,
                }
            }
            Ok(EXIT_OK)
        }
        Command::Report { file, format } => {
            let corpus = match load(&file, err) {
                Ok(c) => c,
                Err(code) => return Ok(code),
            };
            let reports: Vec<RunReport> = corpus.records.iter().map(run_all).collect();
            match format {
                Format::Text => {
                    for r in &reports {
                        write!(out, "{}", r.to_text())?;
                        for f in &r.factorizations {
                            write!(out, "{}", f.to_text())?;
                        }
                    }
                }
                Format::Json => {
                    let v: Value = json!({
                        "schema_version": SCHEMA_VERSION,
                        "records": reports.iter().map(RunReport::to_json).collect::<Vec<_>>(),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}
