pub mod covers_cmd;
pub mod degrees;
pub mod fuzz_cmd;
pub mod structural;
pub mod verify;

use crate::registry::{Command, Registry};

/// Every available subcommand, registered by name.
pub fn registry() -> Registry {
    let commands: Vec<Box<dyn Command>> = vec![
        Box::new(structural::Build),
        Box::new(structural::Subdivide),
        Box::new(structural::SpernerCheck),
        Box::new(structural::FullyLabeledCmd),
        Box::new(structural::Bloch),
        Box::new(degrees::Degree),
        Box::new(degrees::BoundaryDegree),
        Box::new(degrees::Winding),
        Box::new(degrees::Dg2),
        Box::new(degrees::CoverDegree),
        Box::new(covers_cmd::Cov),
        Box::new(covers_cmd::ComplementCheck),
        Box::new(covers_cmd::NerveCmd),
        Box::new(covers_cmd::ExtensionCheck),
        Box::new(covers_cmd::Pebble),
        Box::new(verify::VerifyKkm),
        Box::new(verify::VerifyGkkm),
        Box::new(verify::VerifySperner),
        Box::new(verify::VerifyDegBound),
        Box::new(verify::VerifyPolytope),
        Box::new(verify::VerifyBloch),
        Box::new(verify::VerifyTucker),
        Box::new(fuzz_cmd::Fuzz),
    ];
    Registry::new(commands)
}
