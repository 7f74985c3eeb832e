use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use pgal_cli::{emit_report, run_document_timed, CliError, Entry, Format, Limits, RunReport};

/// Runs a declaration document and prints its report.
#[derive(Parser)]
#[command(name = "pgal", version)]
struct Args {
    /// Declaration document (JSON).
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest function space or relation table that may be materialised.
    #[arg(long, default_value_t = pgal_value::DEFAULT_CAP)]
    cap: usize,
    /// Longest list accepted in values and list functors.
    #[arg(long, default_value_t = pgal_value::DEFAULT_LIST_BOUND)]
    list_bound: usize,
    /// Print per-command wall time to stderr.
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let limits = Limits { cap: args.cap, list_bound: args.list_bound };
    let (report, times) = match std::fs::read_to_string(&args.file) {
        Ok(text) => run_document_timed(&text, limits),
        Err(source) => {
            let e = CliError::Io { path: args.file.display().to_string(), source };
            (RunReport::new(vec![Entry::error(0, "load", "document", &e)]), vec![])
        }
    };
    print!("{}", emit_report(&report, args.format));
    if args.timing {
        for (e, t) in report.entries.iter().zip(&times) {
            eprintln!("{:>8.1}ms {} {}", t.as_secs_f64() * 1e3, e.cmd, e.subject);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
