mod args;
mod commands;
mod render;
mod reproduce;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command};
use commands::Failure;

const SCHEMA_VERSION: u32 = 1;

const EXIT_COMPUTE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

fn document(cli: &Cli, key: &str, body: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "config": serde_json::to_value(cli).expect("config serializes"),
        key: body,
    })
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = out.write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let (outcome, mismatch) = match &cli.command {
        Command::Hilbert(a) => (commands::hilbert(a), false),
        Command::Cohomology(a) => (commands::cohomology(a), false),
        Command::Reduction(a) => (commands::reduction(a), false),
        Command::Verify(a) => (commands::verify(a), false),
        Command::Reproduce(a) => match reproduce::run(a.example) {
            Ok((v, ok)) => (Ok(v), !ok),
            Err(e) => (Err(Failure::Compute(e)), false),
        },
    };
    match outcome {
        Ok(body) => {
            emit(&render::render(&document(&cli, "result", body), cli.format));
            if mismatch {
                eprintln!("reproduction mismatch: see the checks with \"ok\": false");
                ExitCode::from(EXIT_MISMATCH)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nRun with --help for usage.");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Compute(e)) => {
            let diag = json!({"kind": format!("{e:?}").split(['(', ' ', '{']).next().unwrap_or("Error"), "message": e.to_string()});
            emit(&render::render(&document(&cli, "error", diag), args::Format::Json));
            ExitCode::from(EXIT_COMPUTE)
        }
    }
}
