//! `xpt`: tables of integrals, cross-sections and toy amplitudes.
//!
//! Exit status: 0 on success, 1 when a check or a computation fails, 2 on
//! usage or configuration errors.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Compute(m) => write!(f, "computation failed: {m}"),
        }
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let g = &cli.global;
    let (table, ok) = match &cli.command {
        Command::Integrals(a) => (commands::integrals(g, a)?, true),
        Command::Dcs(a) => (commands::dcs(g, a)?, true),
        Command::Sigma(a) => (commands::sigma(g, a)?, true),
        Command::Table1 => (commands::table1(g)?, true),
        Command::Verify(a) => verify::verify(a.tol)?,
        Command::Toy(a) => (commands::toy(a)?, true),
    };
    let write = |out: &mut dyn Write| {
        table
            .write(g.format, out)
            .map_err(|e| CliError::Compute(e.to_string()))
    };
    match &g.output {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            write(&mut f)?;
        }
        None => write(&mut std::io::stdout().lock())?,
    }
    if !ok {
        for row in &table.rows {
            if matches!(row.last(), Some(output::Cell::Text(s)) if s == "fail") {
                if let Some(output::Cell::Text(name)) = row.first() {
                    eprintln!("check failed: {name}");
                }
            }
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ CliError::Usage(_)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
