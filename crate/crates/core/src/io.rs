//! File formats consumed and produced by the command-line tool. All
//! numerics are exact rationals serialized as canonical "num/den" strings
//! (plain integers accepted on input).

use crate::complex::SimplicialComplex;
use crate::cover::{Cover, CoverSemantics};
use crate::error::{Error, Result};
use crate::labeling::{Labeling, SpernerContext};
use crate::rational::Point;
use crate::simplex::AbstractSimplex;
use crate::subdivision::Subdivision;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Complex file: `{ "vertices": N, "maximal_simplices": [[int,...],...] }`.
/// Subdivision output adds a `"carriers"` field with one face per vertex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: usize,
    pub maximal_simplices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carriers: Option<Vec<Vec<usize>>>,
}

impl ComplexFile {
    pub fn from_complex(complex: &SimplicialComplex) -> Self {
        Self {
            vertices: complex.vertex_count(),
            maximal_simplices: complex
                .maximal_simplices()
                .map(|s| s.vertices().to_vec())
                .collect(),
            carriers: None,
        }
    }

    pub fn from_subdivision(sd: &Subdivision) -> Self {
        let mut file = Self::from_complex(&sd.complex);
        file.carriers = Some(sd.carriers.iter().map(|c| c.vertices().to_vec()).collect());
        file
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let complex = crate::complex::build_complex(&self.maximal_simplices)?;
        if complex.vertex_count() != self.vertices {
            return Err(Error::InvalidInput(format!(
                "field \"vertices\" is {}, but the simplices use {} vertices",
                self.vertices,
                complex.vertex_count()
            )));
        }
        Ok(complex)
    }

    pub fn to_sperner_context(&self, m: usize) -> Result<SpernerContext> {
        let Some(raw) = &self.carriers else {
            return Err(Error::InvalidInput(
                "field \"carriers\" is required (produce it with the subdivide command)".into(),
            ));
        };
        let mut carriers = Vec::with_capacity(raw.len());
        for c in raw {
            carriers.push(AbstractSimplex::new(c.clone())?);
        }
        Ok(SpernerContext { m, carriers })
    }
}

/// Points file: `{ "V": [point,...], "p": point }` with rational
/// coordinates; `p` may be omitted where a command does not need it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointsFile {
    #[serde(rename = "V")]
    pub v: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Point>,
}

impl PointsFile {
    pub fn require_p(&self) -> Result<Point> {
        self.p
            .clone()
            .ok_or_else(|| Error::InvalidInput("field \"p\" is required".into()))
    }
}

/// Reference to a complex: inline object or a path relative to the
/// referencing file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexRef {
    Path(String),
    Inline(ComplexFile),
}

impl ComplexRef {
    pub fn resolve(&self, base_dir: &Path) -> Result<SimplicialComplex> {
        match self {
            ComplexRef::Inline(file) => file.to_complex(),
            ComplexRef::Path(path) => {
                let full: PathBuf = base_dir.join(path);
                let file: ComplexFile = load_json(&full)?;
                file.to_complex()
            }
        }
    }
}

/// Cover file: `{ "ambient": complex-ref, "semantics": "star"|"closed",
/// "sets": [[simplex,...],...] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverFile {
    pub ambient: ComplexRef,
    pub semantics: CoverSemantics,
    pub sets: Vec<Vec<Vec<usize>>>,
}

impl CoverFile {
    pub fn from_cover(cover: &Cover) -> Self {
        Self {
            ambient: ComplexRef::Inline(ComplexFile::from_complex(cover.ambient())),
            semantics: cover.semantics(),
            sets: (0..cover.set_count())
                .map(|i| {
                    cover
                        .set(i)
                        .iter()
                        .map(|s| s.vertices().to_vec())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_cover(&self, base_dir: &Path) -> Result<Cover> {
        let ambient = self.ambient.resolve(base_dir)?;
        let mut generators = Vec::with_capacity(self.sets.len());
        for set in &self.sets {
            let mut gens = Vec::with_capacity(set.len());
            for s in set {
                gens.push(AbstractSimplex::new(s.clone())?);
            }
            generators.push(gens);
        }
        Cover::new(ambient, self.semantics, generators)
    }
}

pub fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn save_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

/// Loads a labeling file `{ "m": int, "labels": [int,...] }`, validating
/// the label range.
pub fn load_labeling(path: &Path) -> Result<Labeling> {
    let raw: Labeling = load_json(path)?;
    Labeling::new(raw.m, raw.labels)
}
