use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use perfbase_cli::{run, Cli};
use serde_json::json;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    // Write errors (e.g. a closed pipe) do not change the verdict.
    let code = match run(&cli) {
        Ok(outcome) => {
            for line in &outcome.lines {
                let _ = writeln!(out, "{line}");
            }
            let _ = writeln!(out, "{}", outcome.summary);
            outcome.exit_code
        }
        Err(err) => {
            eprintln!("error: {err}");
            let summary =
                json!({"status": "error", "exit": err.exit_code(), "error": err.to_string()});
            let _ = writeln!(out, "{summary}");
            err.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
