//! Batch front end: every operation and verifier is a registered
//! subcommand reading structured files and emitting a JSON report.

mod args;
mod commands;
mod registry;

use registry::{classify_error, EXIT_INPUT};
use std::path::PathBuf;
use std::process::ExitCode;

fn main() -> ExitCode {
    let registry = commands::registry();
    let mut cli = clap::Command::new("kkm")
        .about("Degrees of labelings and covers of simplicial complexes, and KKM/Sperner-type verifiers")
        .subcommand_required(true)
        .arg_required_else_help(true);
    for command in registry.iter() {
        cli = cli.subcommand(
            command.configure(clap::Command::new(command.name()).about(command.about())),
        );
    }
    let matches = cli.get_matches();
    let (name, sub) = matches.subcommand().expect("subcommand required");
    let command = registry.find(name).expect("registered subcommand");
    match command.run(sub) {
        Ok(outcome) => {
            let mut text =
                serde_json::to_string_pretty(&outcome.report).expect("report serializes");
            text.push('\n');
            match sub.get_one::<String>("out") {
                Some(path) => {
                    if let Err(e) = std::fs::write(PathBuf::from(path), text) {
                        eprintln!("error: cannot write {path}: {e}");
                        return ExitCode::from(EXIT_INPUT as u8);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(outcome.exit as u8)
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(classify_error(&error) as u8)
        }
    }
}
