//! Cover and configuration commands: cov, complement-check, nerve,
//! extension-check, pebble.

use crate::args::*;
use crate::registry::{Command, Outcome, EXIT_HYPOTHESIS};
use clap::{Arg, ArgMatches, Command as ClapCommand};
use kkm_core::cover::{extension_check, nerve, p_in_complement};
use kkm_core::geometry::{cov_v, PointConfig};
use kkm_core::pebble::pebble_set;
use kkm_core::Error;
use serde_json::json;

pub struct Cov;

impl Command for Cov {
    fn name(&self) -> &'static str {
        "cov"
    }

    fn about(&self) -> &'static str {
        "Minimal generators of the cov family of p over the points V"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("config", "Points file with V and p")).arg(
                Arg::new("p")
                    .long("p")
                    .value_name("X,Y,...")
                    .allow_hyphen_values(true)
                    .help("Override the query point"),
            ),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let points = load_points(matches, "config")?;
        let p = query_point(matches, &points)?;
        let config = PointConfig::new(points.v, p)?;
        let cov = cov_v(&config)?;
        let up_closure = cov.up_closure();
        Outcome::ok(&json!({
            "minimal_sets": cov.minimal_sets,
            "up_closure_size": up_closure.len(),
        }))
    }
}

pub struct ComplementCheck;

impl Command for ComplementCheck {
    fn name(&self) -> &'static str {
        "complement-check"
    }

    fn about(&self) -> &'static str {
        "Whether p avoids the cover's image: every minimal cov set has empty intersection"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("cover", "Cover file"))
                .arg(file_arg("config", "Points file with V and p"))
                .arg(
                    Arg::new("p")
                        .long("p")
                        .value_name("X,Y,...")
                        .allow_hyphen_values(true)
                        .help("Override the query point"),
                ),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let cover = load_cover(matches, "cover")?;
        let points = load_points(matches, "config")?;
        let p = query_point(matches, &points)?;
        let verdict = p_in_complement(&cover, &points.v, &p)?;
        let exit = if verdict.in_complement { 0 } else { EXIT_HYPOTHESIS };
        Outcome::with_exit(&verdict, exit)
    }
}

pub struct NerveCmd;

impl Command for NerveCmd {
    fn name(&self) -> &'static str {
        "nerve"
    }

    fn about(&self) -> &'static str {
        "Nerve of a cover, by its maximal index sets"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(cmd.arg(file_arg("cover", "Cover file")))
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let cover = load_cover(matches, "cover")?;
        let n = nerve(&cover);
        Outcome::ok(&json!({
            "index_count": n.index_count,
            "maximal": n.maximal,
            "has_top_cell": n.has_top_cell(),
            "simplex_count": n.simplices().len(),
        }))
    }
}

pub struct ExtensionCheck;

impl Command for ExtensionCheck {
    fn name(&self) -> &'static str {
        "extension-check"
    }

    fn about(&self) -> &'static str {
        "Whether a cover of X restricts to the given cover of a subspace"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("base", "Cover of the subspace"))
                .arg(file_arg("extension", "Cover of the whole space")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let base = load_cover(matches, "base")?;
        let extension = load_cover(matches, "extension")?;
        let report = extension_check(&base, &extension)?;
        let exit = if report.extends { 0 } else { EXIT_HYPOTHESIS };
        Outcome::with_exit(&report, exit)
    }
}

pub struct Pebble;

impl Command for Pebble {
    fn name(&self) -> &'static str {
        "pebble"
    }

    fn about(&self) -> &'static str {
        "Certified pebble set of the polytope spanned by V"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(cmd.arg(file_arg("points", "Points file: V is the vertex list").alias("V")))
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let points = load_points(matches, "points")?;
        let d = points
            .v
            .first()
            .map(|p| p.dim())
            .ok_or_else(|| Error::InvalidInput("empty vertex list".into()))?;
        let set = pebble_set(&points.v, d)?;
        Outcome::ok(&set)
    }
}
