use clap::{ArgMatches, Command as ClapCommand};
use kkm_core::Error;

/// Exit status conventions: 0 success/verified, 1 input error, 2
/// hypothesis violation or falsified check.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;

/// A report plus the exit status it implies.
pub struct Outcome {
    pub report: serde_json::Value,
    pub exit: i32,
}

impl Outcome {
    pub fn ok<T: kkm_core::serde::Serialize>(report: &T) -> Result<Outcome, Error> {
        Ok(Outcome {
            report: serde_json::to_value(report)?,
            exit: EXIT_OK,
        })
    }

    pub fn with_exit<T: kkm_core::serde::Serialize>(report: &T, exit: i32) -> Result<Outcome, Error> {
        Ok(Outcome {
            report: serde_json::to_value(report)?,
            exit,
        })
    }
}

/// One registered subcommand: named, self-describing, and runnable. The
/// registry is consulted at runtime to dispatch the selected name.
pub trait Command: Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn configure(&self, cmd: ClapCommand) -> ClapCommand;
    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error>;
}

pub struct Registry {
    commands: Vec<Box<dyn Command>>,
}

impl Registry {
    pub fn new(commands: Vec<Box<dyn Command>>) -> Self {
        Self { commands }
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Command> {
        self.commands.iter().map(|c| c.as_ref())
    }

    pub fn find(&self, name: &str) -> Option<&dyn Command> {
        self.commands
            .iter()
            .map(|c| c.as_ref())
            .find(|c| c.name() == name)
    }
}

/// Maps a core error to the exit status class: malformed input is 1,
/// violated mathematical hypotheses are 2.
pub fn classify_error(error: &Error) -> i32 {
    match error {
        Error::Io(_)
        | Error::Json(_)
        | Error::InvalidInput(_)
        | Error::InvalidRational(_)
        | Error::DuplicateVertex(_)
        | Error::EmptySimplex
        | Error::UnusedVertex(_)
        | Error::VertexOutOfRange { .. }
        | Error::LabelCountMismatch { .. }
        | Error::LabelOutOfRange { .. }
        | Error::Unsupported(_) => EXIT_INPUT,
        _ => EXIT_HYPOTHESIS,
    }
}
