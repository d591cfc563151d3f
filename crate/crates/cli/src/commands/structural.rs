//! Commands over complexes and labelings: build, subdivide,
//! sperner-check, fully-labeled, bloch.

use crate::args::*;
use crate::registry::{Command, Outcome, EXIT_HYPOTHESIS};
use clap::{Arg, ArgMatches, Command as ClapCommand};
use kkm_core::complex::{bloch_boundary, manifold_boundary};
use kkm_core::io::ComplexFile;
use kkm_core::labeling::{validate_sperner, SpernerContext};
use kkm_core::subdivision::barycentric_subdivision;
use kkm_core::Error;
use serde_json::json;

pub struct Build;

impl Command for Build {
    fn name(&self) -> &'static str {
        "build"
    }

    fn about(&self) -> &'static str {
        "Parse, validate and canonicalize a complex file"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(cmd.arg(file_arg("complex", "Complex file to canonicalize")))
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let complex = load_complex(matches, "complex")?;
        let file = ComplexFile::from_complex(&complex);
        Outcome::ok(&json!({
            "complex": file,
            "dimension": complex.dimension(),
            "maximal_count": complex.maximal_simplices().count(),
            "pure": complex.is_pure(),
        }))
    }
}

pub struct Subdivide;

impl Command for Subdivide {
    fn name(&self) -> &'static str {
        "subdivide"
    }

    fn about(&self) -> &'static str {
        "Iterated barycentric subdivision with vertex carriers"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("complex", "Complex file to subdivide")).arg(
                Arg::new("depth")
                    .long("depth")
                    .value_name("N")
                    .default_value("1")
                    .help("Number of subdivision rounds"),
            ),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let complex = load_complex(matches, "complex")?;
        let depth: usize = matches
            .get_one::<String>("depth")
            .unwrap()
            .parse()
            .map_err(|e| Error::InvalidInput(format!("bad depth: {e}")))?;
        let sd = barycentric_subdivision(&complex, depth);
        Outcome::ok(&ComplexFile::from_subdivision(&sd))
    }
}

pub struct SpernerCheck;

impl Command for SpernerCheck {
    fn name(&self) -> &'static str {
        "sperner-check"
    }

    fn about(&self) -> &'static str {
        "Validate the Sperner rules of a labeling against subdivision carriers"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg(
                "complex",
                "Subdivision file with carriers (from the subdivide command)",
            ))
            .arg(file_arg("labels", "Labeling file")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let file = load_complex_file(matches, "complex")?;
        let labeling = load_labels(matches, "labels")?;
        let context: SpernerContext = file.to_sperner_context(labeling.m)?;
        let complex = file.to_complex()?;
        labeling.check_covers(&complex)?;
        let verdict = validate_sperner(&context, &labeling);
        let exit = if verdict.valid { 0 } else { EXIT_HYPOTHESIS };
        Outcome::with_exit(&verdict, exit)
    }
}

pub struct FullyLabeledCmd;

impl Command for FullyLabeledCmd {
    fn name(&self) -> &'static str {
        "fully-labeled"
    }

    fn about(&self) -> &'static str {
        "Enumerate simplices whose labels contain a given set"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("complex", "Complex file"))
                .arg(file_arg("labels", "Labeling file"))
                .arg(
                    Arg::new("set")
                        .long("set")
                        .value_name("I,J,...")
                        .default_value("")
                        .help("Comma-separated label set; empty matches every simplex"),
                ),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let complex = load_complex(matches, "complex")?;
        let labeling = load_labels(matches, "labels")?;
        let raw = matches.get_one::<String>("set").unwrap();
        let set = if raw.is_empty() {
            Vec::new()
        } else {
            parse_index_set(raw)?
        };
        let found = kkm_core::labeling::fully_labeled(&complex, &labeling, &set)?;
        Outcome::ok(&json!({
            "set": set,
            "containing_count": found.containing.len(),
            "exact_count": found.exact.len(),
            "containing": found.containing,
            "exact": found.exact,
        }))
    }
}

pub struct Bloch;

impl Command for Bloch {
    fn name(&self) -> &'static str {
        "bloch"
    }

    fn about(&self) -> &'static str {
        "Bloch boundary: faces with odd top-simplex incidence"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(cmd.arg(file_arg("complex", "Complex file")))
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let complex = load_complex(matches, "complex")?;
        let bloch = bloch_boundary(&complex)?;
        let manifold = manifold_boundary(&complex)?;
        Outcome::ok(&json!({
            "bloch_boundary": bloch,
            "manifold_boundary_face_count": manifold.faces.len(),
        }))
    }
}
