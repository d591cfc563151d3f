//! Degree commands: degree, boundary-degree, winding, dg2, cover-degree.

use crate::args::*;
use crate::registry::{Command, Outcome};
use clap::{Arg, ArgMatches, Command as ClapCommand};
use kkm_core::degree::{boundary_degree, degree_labeling};
use kkm_core::orientation::orient;
use kkm_core::polytope::dg2;
use kkm_core::winding::winding_number;
use kkm_core::Error;
use serde_json::json;

pub struct Degree;

impl Command for Degree {
    fn name(&self) -> &'static str {
        "degree"
    }

    fn about(&self) -> &'static str {
        "Simplicial degree of the labeling map on a closed oriented complex"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("complex", "Closed orientable complex file"))
                .arg(file_arg("labels", "Labeling file with m = dimension + 1"))
                .arg(seed_sign_arg())
                .arg(
                    Arg::new("target")
                        .long("target")
                        .value_name("I,J,...")
                        .help("Preferred target face (labels); the cross-check still runs all"),
                ),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let oriented = oriented_complex(matches, "complex")?;
        let labeling = load_labels(matches, "labels")?;
        let mut report = degree_labeling(&oriented, &labeling)?;
        if let Some(raw) = matches.get_one::<String>("target") {
            let target = parse_index_set(raw)?;
            if !report.cross_checked.iter().any(|(t, _)| *t == target) {
                return Err(Error::InvalidInput(format!(
                    "target {target:?} is not a face of the label simplex"
                )));
            }
            report.target_used = target;
        }
        Outcome::ok(&report)
    }
}

pub struct BoundaryDegree;

impl Command for BoundaryDegree {
    fn name(&self) -> &'static str {
        "boundary-degree"
    }

    fn about(&self) -> &'static str {
        "Degree of the labeling restricted to the induced oriented boundary"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("complex", "Oriented complex with boundary"))
                .arg(file_arg("labels", "Labeling file with m = dimension"))
                .arg(seed_sign_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let oriented = oriented_complex(matches, "complex")?;
        let labeling = load_labels(matches, "labels")?;
        let report = boundary_degree(&oriented, &labeling)?;
        Outcome::ok(&report)
    }
}

pub struct Winding;

impl Command for Winding {
    fn name(&self) -> &'static str {
        "winding"
    }

    fn about(&self) -> &'static str {
        "Exact winding number of the polygonal loop V around p"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("config", "Points file: V is the loop, p the base point"))
                .arg(
                    Arg::new("p")
                        .long("p")
                        .value_name("X,Y")
                        .allow_hyphen_values(true)
                        .help("Override the base point, e.g. \"3/10,3/10\""),
                ),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let points = load_points(matches, "config")?;
        let p = query_point(matches, &points)?;
        let winding = winding_number(&points.v, &p)?;
        Outcome::ok(&json!({ "winding": winding, "p": p }))
    }
}

pub struct Dg2;

impl Command for Dg2 {
    fn name(&self) -> &'static str {
        "dg2"
    }

    fn about(&self) -> &'static str {
        "Mod-2 degree of the labeling map on the Bloch boundary"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("complex", "Complex file"))
                .arg(file_arg("labels", "Labeling file into the polytope vertices"))
                .arg(file_arg("points", "Points file: V is the polytope vertex list")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let complex = load_complex(matches, "complex")?;
        let labeling = load_labels(matches, "labels")?;
        let points = load_points(matches, "points")?;
        let parity = dg2(&complex, &labeling, &points.v)?;
        Outcome::ok(&json!({ "dg2": parity }))
    }
}

pub struct CoverDegree;

impl Command for CoverDegree {
    fn name(&self) -> &'static str {
        "cover-degree"
    }

    fn about(&self) -> &'static str {
        "Degree of a cover of a closed oriented complex by dim + 2 sets"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(cmd.arg(file_arg("cover", "Cover file")).arg(seed_sign_arg()))
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let cover = load_cover(matches, "cover")?;
        let oriented = orient(cover.ambient(), seed_sign(matches)?)?;
        let report = kkm_core::cover::cover_degree(&cover, &oriented)?;
        Outcome::ok(&report)
    }
}
