//! The fuzz command: seeded randomized suites over the verifier family.

use crate::args::*;
use crate::registry::{Command, Outcome, EXIT_HYPOTHESIS};
use clap::{Arg, ArgMatches, Command as ClapCommand};
use kkm_core::fuzz::{run_suite, SUITES};
use kkm_core::Error;

pub struct Fuzz;

impl Command for Fuzz {
    fn name(&self) -> &'static str {
        "fuzz"
    }

    fn about(&self) -> &'static str {
        "Run a seeded randomized suite; any falsification fails the run"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(
                Arg::new("suite")
                    .long("suite")
                    .value_name("NAME")
                    .required(true)
                    .help("One of: sperner, degbound, polytope, bloch, tucker, kkm, gkkm, gsperner, cov, prop31"),
            )
            .arg(
                Arg::new("fuzz-count")
                    .long("fuzz-count")
                    .value_name("N")
                    .default_value("50")
                    .help("Number of instances"),
            )
            .arg(
                Arg::new("seed")
                    .long("seed")
                    .value_name("U64")
                    .default_value("0")
                    .help("Stream seed; identical seeds reproduce byte-identical reports"),
            ),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let suite = matches.get_one::<String>("suite").unwrap();
        if !SUITES.contains(&suite.as_str()) {
            return Err(Error::InvalidInput(format!(
                "unknown suite {suite:?}; available: {}",
                SUITES.join(", ")
            )));
        }
        let count: usize = matches
            .get_one::<String>("fuzz-count")
            .unwrap()
            .parse()
            .map_err(|e| Error::InvalidInput(format!("bad fuzz count: {e}")))?;
        let seed: u64 = matches
            .get_one::<String>("seed")
            .unwrap()
            .parse()
            .map_err(|e| Error::InvalidInput(format!("bad seed: {e}")))?;
        let report = run_suite(suite, count, seed)?;
        let exit = if report.ok() { 0 } else { EXIT_HYPOTHESIS };
        Outcome::with_exit(&report, exit)
    }
}
