//! Shared argument plumbing for the registered commands.

use clap::{Arg, ArgAction, ArgMatches, Command as ClapCommand};
use kkm_core::cover::Cover;
use kkm_core::io::{load_json, load_labeling, ComplexFile, CoverFile, PointsFile};
use kkm_core::labeling::Labeling;
use kkm_core::orientation::{orient, OrientedComplex};
use kkm_core::rational::parse_rational;
use kkm_core::{Error, Point, SimplicialComplex};
use std::path::{Path, PathBuf};

pub fn file_arg(name: &'static str, help: &'static str) -> Arg {
    Arg::new(name)
        .long(name)
        .value_name("FILE")
        .required(true)
        .help(help)
}

pub fn out_arg() -> Arg {
    Arg::new("out")
        .long("out")
        .value_name("FILE")
        .help("Write the report to this file instead of stdout")
}

pub fn seed_sign_arg() -> Arg {
    Arg::new("orientation-seed")
        .long("orientation-seed")
        .value_name("+1|-1")
        .default_value("+1")
        .allow_hyphen_values(true)
        .help("Sign given to the lexicographically smallest top simplex of each component")
}

pub fn assert_ep_arg() -> Arg {
    Arg::new("assert-ep")
        .long("assert-ep")
        .action(ArgAction::SetTrue)
        .help("Assert the extension-pair hypothesis instead of detecting an oriented manifold")
}

pub fn with_out(cmd: ClapCommand) -> ClapCommand {
    cmd.arg(out_arg())
}

pub fn path_of(matches: &ArgMatches, name: &str) -> PathBuf {
    PathBuf::from(matches.get_one::<String>(name).expect("required arg"))
}

pub fn load_complex(matches: &ArgMatches, name: &str) -> Result<SimplicialComplex, Error> {
    let file: ComplexFile = load_json(&path_of(matches, name))?;
    file.to_complex()
}

pub fn load_complex_file(matches: &ArgMatches, name: &str) -> Result<ComplexFile, Error> {
    load_json(&path_of(matches, name))
}

pub fn load_labels(matches: &ArgMatches, name: &str) -> Result<Labeling, Error> {
    load_labeling(&path_of(matches, name))
}

pub fn load_points(matches: &ArgMatches, name: &str) -> Result<PointsFile, Error> {
    load_json(&path_of(matches, name))
}

pub fn load_cover(matches: &ArgMatches, name: &str) -> Result<Cover, Error> {
    let path = path_of(matches, name);
    let file: CoverFile = load_json(&path)?;
    let base_dir = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    file.to_cover(&base_dir)
}

pub fn seed_sign(matches: &ArgMatches) -> Result<i8, Error> {
    match matches
        .get_one::<String>("orientation-seed")
        .map(String::as_str)
    {
        None | Some("+1") | Some("1") => Ok(1),
        Some("-1") => Ok(-1),
        Some(other) => Err(Error::InvalidInput(format!(
            "orientation seed must be +1 or -1, got {other:?}"
        ))),
    }
}

pub fn oriented_complex(
    matches: &ArgMatches,
    name: &str,
) -> Result<OrientedComplex, Error> {
    let complex = load_complex(matches, name)?;
    orient(&complex, seed_sign(matches)?)
}

/// Parses a comma-separated rational point, e.g. "3/10,3/10".
pub fn parse_point(text: &str) -> Result<Point, Error> {
    let coords = text
        .split(',')
        .map(|c| parse_rational(c.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Point::new(coords))
}

/// The query point: the --p override when present, else the file's "p".
pub fn query_point(matches: &ArgMatches, points: &PointsFile) -> Result<Point, Error> {
    match matches.get_one::<String>("p") {
        Some(text) => parse_point(text),
        None => points.require_p(),
    }
}

/// Parses a comma-separated index set, e.g. "0,1,3".
pub fn parse_index_set(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<usize>()
                .map_err(|e| Error::InvalidInput(format!("bad index {c:?}: {e}")))
        })
        .collect()
}
