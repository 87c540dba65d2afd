//! Library half of the `floer` binary: argument types, the JSON envelope,
//! command implementations and renderers. The binary is a thin wrapper so
//! tests can drive commands without spawning processes.

pub mod args;
pub mod commands;
pub mod envelope;
pub mod render;

use std::io::Write;

use args::{Cli, Command, Format};
use commands::Limits;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("computation failed: {0}")]
    Compute(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) | CliError::Io(_) => 1,
        }
    }
}

/// Rendered output of one invocation and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let limits = Limits::from_env()?;
    let bad = cli.corrupt_recursion;
    macro_rules! emit {
        ($env:expr, $format:expr, $text:path, $csv:path) => {{
            let env = $env;
            let text = match $format {
                Format::Json => render::json(&env)?,
                Format::Text => $text(&env),
                Format::Csv => $csv(&env)?,
            };
            Output {
                text,
                ok: env.summary.ok,
            }
        }};
    }
    Ok(match cli.command {
        Command::Nilpotency {
            genus_range,
            format,
        } => emit!(
            commands::nilpotency(genus_range, format, &limits, bad)?,
            format,
            render::nilpotency_text,
            render::nilpotency_csv
        ),
        Command::Table {
            which,
            genus_range,
            format,
            path,
        } => emit!(
            commands::table(which, genus_range, path, format, &limits, bad)?,
            format,
            render::table_text,
            render::table_csv
        ),
        Command::Groebner {
            family,
            genus,
            format,
        } => emit!(
            commands::groebner(family, genus, format, &limits, bad)?,
            format,
            render::groebner_text,
            render::groebner_csv
        ),
        Command::Verify {
            max_genus,
            seed,
            format,
        } => emit!(
            commands::verify(max_genus, seed, format, bad)?,
            format,
            render::verify_text,
            render::verify_csv
        ),
    })
}

/// Runs one invocation end to end and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = execute(cli).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.text)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(out.text.as_bytes())?;
                stdout.flush()?;
            }
        }
        Ok(out.ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("floer: {e}");
            e.exit_code()
        }
    }
}
