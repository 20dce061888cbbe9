mod args;
mod commands;
mod error;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: &Cli) -> Result<commands::Outcome, CliError> {
    match &cli.command {
        Command::Check { source, output } => commands::check(source, output),
        Command::Sample {
            source,
            sampling,
            output,
        } => commands::sample(source, sampling, output),
        Command::Explore {
            source,
            sampling,
            start,
            multigraph,
            output,
        } => commands::explore(source, sampling, *start, *multigraph, output),
        Command::Census {
            source,
            sampling,
            max_width,
            output,
        } => commands::census(source, sampling, *max_width, output),
        Command::Oracle { source, output } => commands::oracle(source, output),
        Command::Tightness {
            scaled,
            sizes,
            sampling,
            output,
        } => commands::tightness(scaled, sizes, sampling, output),
    }
}

fn output_path(cli: &Cli) -> Option<&std::path::Path> {
    let output = match &cli.command {
        Command::Check { output, .. }
        | Command::Sample { output, .. }
        | Command::Explore { output, .. }
        | Command::Census { output, .. }
        | Command::Oracle { output, .. }
        | Command::Tightness { output, .. } => output,
    };
    output.out.as_deref()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&cli).and_then(|outcome| {
        commands::emit(&outcome.emitted, output_path(&cli))?;
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            if cli.error_json {
                eprintln!("{}", e.to_json());
            } else {
                eprintln!("error: {}", e.message());
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
