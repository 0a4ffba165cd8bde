mod args;
mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use permstat::ExhaustionLimit;

use crate::args::{Cli, Format};
use crate::commands::{CliError, Context, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use crate::output::{emit, OutputRecord, Rendered};

const LIMIT_VAR: &str = "PERMSTAT_MAX_EXHAUSTIVE";

fn exhaustion_limit() -> Result<ExhaustionLimit, CliError> {
    match std::env::var(LIMIT_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(ExhaustionLimit)
            .map_err(|_| CliError::usage(format!("{LIMIT_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(ExhaustionLimit::DEFAULT),
    }
}

fn thread_count(requested: Option<usize>) -> Result<usize, CliError> {
    match requested {
        Some(0) => Err(CliError::usage("--threads must be at least 1")),
        Some(t) => Ok(t),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK as u8),
                _ => ExitCode::from(EXIT_USAGE as u8),
            };
        }
    };

    let start = Instant::now();
    let (name, parameters) = commands::run_parameters(&cli.command);
    let outcome = exhaustion_limit().and_then(|limit| {
        let threads = thread_count(cli.threads)?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::usage(e.to_string()))?;
        let ctx = Context { limit, threads };
        pool.install(|| commands::run(&cli.command, &ctx))
    });
    let elapsed_ms = start.elapsed().as_millis() as u64;

    let (rendered, code) = match outcome {
        Ok(r) => {
            let code = if r.verdict == Some(false) { EXIT_FAILED } else { EXIT_OK };
            (r, code)
        }
        Err(e) => {
            eprintln!("permstat: {}", e.message);
            let rendered = Rendered {
                result: json!({ "error": { "kind": e.kind, "message": e.message } }),
                text: String::new(),
                csv: Vec::new(),
                verdict: None,
            };
            if cli.format != Format::Json {
                return ExitCode::from(e.code as u8);
            }
            (rendered, e.code)
        }
    };

    let record = OutputRecord {
        command: name.to_string(),
        parameters,
        result: rendered.result.clone(),
        elapsed_ms,
    };
    if let Err(e) = emit(cli.format, &record, &rendered) {
        eprintln!("permstat: failed to write output: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(code as u8)
}
