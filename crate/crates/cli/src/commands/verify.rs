//! Theorem verifier commands. Exit status: 0 when the conclusion is a
//! witness (or the theorem makes no claim), 2 on hypothesis violations
//! and falsification alarms.

use crate::args::*;
use crate::registry::{Command, Outcome, EXIT_HYPOTHESIS};
use clap::{Arg, ArgMatches, Command as ClapCommand};
use kkm_core::theorems::{
    bloch_sperner_verify, deg_lower_bound_verify, generalized_kkm_verify,
    generalized_sperner_verify, kkm_verify, polytope_sperner_verify, tucker_bacon_verify,
    EpHypothesis, TheoremReport,
};
use kkm_core::Error;

fn ep_mode(matches: &ArgMatches) -> EpHypothesis {
    if matches.get_flag("assert-ep") {
        EpHypothesis::Assert
    } else {
        EpHypothesis::DetectManifold
    }
}

fn report_outcome(report: TheoremReport) -> Result<Outcome, Error> {
    let exit = if report.verified() { 0 } else { EXIT_HYPOTHESIS };
    Outcome::with_exit(&report, exit)
}

pub struct VerifyKkm;

impl Command for VerifyKkm {
    fn name(&self) -> &'static str {
        "verify-kkm"
    }

    fn about(&self) -> &'static str {
        "KKM-type theorem: a non-trivial boundary cover forces a common point of the extension"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("base", "Cover of the boundary subspace"))
                .arg(file_arg("extension", "Cover of the whole space"))
                .arg(assert_ep_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let base = load_cover(matches, "base")?;
        let extension = load_cover(matches, "extension")?;
        report_outcome(kkm_verify(&base, &extension, ep_mode(matches)))
    }
}

pub struct VerifyGkkm;

impl Command for VerifyGkkm {
    fn name(&self) -> &'static str {
        "verify-gkkm"
    }

    fn about(&self) -> &'static str {
        "Generalized KKM theorem over a point configuration"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("base", "Cover of the boundary subspace"))
                .arg(file_arg("extension", "Cover of the whole space"))
                .arg(file_arg("config", "Points file with V and p"))
                .arg(
                    Arg::new("p")
                        .long("p")
                        .value_name("X,Y,...")
                        .allow_hyphen_values(true)
                        .help("Override the query point"),
                )
                .arg(assert_ep_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let base = load_cover(matches, "base")?;
        let extension = load_cover(matches, "extension")?;
        let points = load_points(matches, "config")?;
        let p = query_point(matches, &points)?;
        report_outcome(generalized_kkm_verify(
            &base,
            &extension,
            &points.v,
            &p,
            ep_mode(matches),
        ))
    }
}

pub struct VerifySperner;

impl Command for VerifySperner {
    fn name(&self) -> &'static str {
        "verify-sperner"
    }

    fn about(&self) -> &'static str {
        "Generalized Sperner theorem: a cov-labeled simplex exists"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("complex", "Complex K"))
                .arg(file_arg("sub", "Subcomplex Q of K"))
                .arg(file_arg("labels", "Labeling of K"))
                .arg(file_arg("config", "Points file with V and p"))
                .arg(
                    Arg::new("p")
                        .long("p")
                        .value_name("X,Y,...")
                        .allow_hyphen_values(true)
                        .help("Override the query point"),
                )
                .arg(assert_ep_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let complex = load_complex(matches, "complex")?;
        let sub = load_complex(matches, "sub")?;
        let labeling = load_labels(matches, "labels")?;
        let points = load_points(matches, "config")?;
        let p = query_point(matches, &points)?;
        report_outcome(generalized_sperner_verify(
            &complex,
            &sub,
            &labeling,
            &points.v,
            &p,
            ep_mode(matches),
        ))
    }
}

pub struct VerifyDegBound;

impl Command for VerifyDegBound {
    fn name(&self) -> &'static str {
        "verify-degbound"
    }

    fn about(&self) -> &'static str {
        "Degree lower bound: at least |deg(L, boundary)| fully labeled simplices"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("complex", "Oriented complex with boundary"))
                .arg(file_arg("labels", "Labeling with m = dimension"))
                .arg(seed_sign_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let oriented = oriented_complex(matches, "complex")?;
        let labeling = load_labels(matches, "labels")?;
        report_outcome(deg_lower_bound_verify(&oriented, &labeling))
    }
}

pub struct VerifyPolytope;

impl Command for VerifyPolytope {
    fn name(&self) -> &'static str {
        "verify-polytope"
    }

    fn about(&self) -> &'static str {
        "Polytope bound: at least (m-d)|deg| fully labeled simplices via pebbles"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("complex", "Oriented manifold with boundary"))
                .arg(file_arg("labels", "Labeling into the polytope vertices"))
                .arg(file_arg("points", "Points file: V is the polytope vertex list"))
                .arg(seed_sign_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let oriented = oriented_complex(matches, "complex")?;
        let labeling = load_labels(matches, "labels")?;
        let points = load_points(matches, "points")?;
        report_outcome(polytope_sperner_verify(&oriented, &labeling, &points.v))
    }
}

pub struct VerifyBloch;

impl Command for VerifyBloch {
    fn name(&self) -> &'static str {
        "verify-bloch"
    }

    fn about(&self) -> &'static str {
        "Bloch variant: odd dg2 forces m-d fully labeled simplices"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("complex", "Complex file"))
                .arg(file_arg("labels", "Labeling into the polytope vertices"))
                .arg(file_arg("points", "Points file: V is the polytope vertex list")),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let complex = load_complex(matches, "complex")?;
        let labeling = load_labels(matches, "labels")?;
        let points = load_points(matches, "points")?;
        report_outcome(bloch_sperner_verify(&complex, &labeling, &points.v))
    }
}

pub struct VerifyTucker;

impl Command for VerifyTucker {
    fn name(&self) -> &'static str {
        "verify-tucker"
    }

    fn about(&self) -> &'static str {
        "Antipodal (Tucker-type) theorem: a complementary pair intersects"
    }

    fn configure(&self, cmd: ClapCommand) -> ClapCommand {
        with_out(
            cmd.arg(file_arg("base", "Cover of the boundary with 2n sets"))
                .arg(file_arg("extension", "Cover of the whole space"))
                .arg(
                    Arg::new("n")
                        .long("n")
                        .value_name("N")
                        .required(true)
                        .help("Half the set count: sets i and n+i are antipodal"),
                )
                .arg(assert_ep_arg()),
        )
    }

    fn run(&self, matches: &ArgMatches) -> Result<Outcome, Error> {
        let base = load_cover(matches, "base")?;
        let extension = load_cover(matches, "extension")?;
        let n: usize = matches
            .get_one::<String>("n")
            .unwrap()
            .parse()
            .map_err(|e| Error::InvalidInput(format!("bad n: {e}")))?;
        report_outcome(tucker_bacon_verify(&base, &extension, n, ep_mode(matches)))
    }
}
