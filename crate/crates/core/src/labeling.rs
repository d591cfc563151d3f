//! Vertex labelings, Sperner-rule validation, the induced simplicial maps,
//! and fully-labeled simplex enumeration.

use crate::complex::{build_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::rational::Point;
use crate::simplex::AbstractSimplex;
use crate::subdivision::Subdivision;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A total assignment of labels in {0..m} to the vertices 0..len-1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub m: usize,
    pub labels: Vec<usize>,
}

impl Labeling {
    pub fn new(m: usize, labels: Vec<usize>) -> Result<Self> {
        for &l in &labels {
            if l > m {
                return Err(Error::LabelOutOfRange { label: l, m });
            }
        }
        Ok(Self { m, labels })
    }

    pub fn label(&self, vertex: usize) -> usize {
        self.labels[vertex]
    }

    /// Checks that the labeling covers every vertex of the complex.
    pub fn check_covers(&self, complex: &SimplicialComplex) -> Result<()> {
        if self.labels.len() < complex.vertex_count() {
            return Err(Error::LabelCountMismatch {
                expected: complex.vertex_count(),
                got: self.labels.len(),
            });
        }
        Ok(())
    }

    /// Distinct labels on a simplex, ascending.
    pub fn label_set(&self, s: &AbstractSimplex) -> Vec<usize> {
        let set: BTreeSet<usize> = s.vertices().iter().map(|&v| self.labels[v]).collect();
        set.into_iter().collect()
    }

    /// Labels in vertex order (with repetitions).
    pub fn label_sequence(&self, s: &AbstractSimplex) -> Vec<usize> {
        s.vertices().iter().map(|&v| self.labels[v]).collect()
    }
}

/// Carrier data for Sperner validation: for each vertex of a subdivision of
/// the m-simplex (or of its boundary), the face of the base simplex it lies
/// in, given by the corner indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpernerContext {
    pub m: usize,
    pub carriers: Vec<AbstractSimplex>,
}

impl SpernerContext {
    /// Reads the carriers off a subdivision whose base complex has the
    /// corners of the m-simplex as vertices 0..=m.
    pub fn from_subdivision(m: usize, subdivision: &Subdivision) -> Self {
        Self {
            m,
            carriers: subdivision.carriers.clone(),
        }
    }

    /// The canonical Sperner labeling: each vertex takes the least corner
    /// index of its carrier face.
    pub fn canonical_labeling(&self) -> Labeling {
        Labeling {
            m: self.m,
            labels: self.carriers.iter().map(|c| c.vertices()[0]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpernerViolation {
    /// Rule (i): a corner vertex must carry its own index.
    CornerLabel {
        vertex: usize,
        expected: usize,
        got: usize,
    },
    /// Rule (ii): a vertex may only carry a corner index of its carrier.
    CarrierLabel {
        vertex: usize,
        carrier: AbstractSimplex,
        got: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpernerVerdict {
    pub valid: bool,
    pub violations: Vec<SpernerViolation>,
}

/// Validates the Sperner rules against the carriers: corners carry their
/// own index and every vertex's label indexes a corner of its carrier.
pub fn validate_sperner(context: &SpernerContext, labeling: &Labeling) -> SpernerVerdict {
    let mut violations = Vec::new();
    for (v, carrier) in context.carriers.iter().enumerate() {
        if v >= labeling.labels.len() {
            break;
        }
        let got = labeling.labels[v];
        if carrier.dimension() == 0 {
            let expected = carrier.vertices()[0];
            if got != expected {
                violations.push(SpernerViolation::CornerLabel { vertex: v, expected, got });
                continue;
            }
        }
        if !carrier.contains_vertex(got) {
            violations.push(SpernerViolation::CarrierLabel {
                vertex: v,
                carrier: carrier.clone(),
                got,
            });
        }
    }
    SpernerVerdict {
        valid: violations.is_empty(),
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxLabelVerdict {
    pub ok: bool,
    pub offenders: Vec<AbstractSimplex>,
}

/// True iff no simplex of the complex carries m+1 distinct labels, listing
/// the offenders otherwise.
pub fn max_label_check(complex: &SimplicialComplex, labeling: &Labeling) -> Result<MaxLabelVerdict> {
    labeling.check_covers(complex)?;
    let full = labeling.m + 1;
    let offenders: Vec<AbstractSimplex> = complex
        .all_simplices()
        .into_iter()
        .filter(|s| labeling.label_set(s).len() == full)
        .collect();
    Ok(MaxLabelVerdict {
        ok: offenders.is_empty(),
        offenders,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullyLabeled {
    /// Simplices whose label set contains the query set.
    pub containing: Vec<AbstractSimplex>,
    /// The sublist whose label set equals the query set.
    pub exact: Vec<AbstractSimplex>,
}

/// Enumerates the simplices whose vertex labels contain `set`, with the
/// exact-match sublist.
pub fn fully_labeled(
    complex: &SimplicialComplex,
    labeling: &Labeling,
    set: &[usize],
) -> Result<FullyLabeled> {
    labeling.check_covers(complex)?;
    let query: BTreeSet<usize> = set.iter().copied().collect();
    let mut containing = Vec::new();
    let mut exact = Vec::new();
    for s in complex.all_simplices() {
        let labels: BTreeSet<usize> = labeling.label_set(&s).into_iter().collect();
        if query.iter().all(|l| labels.contains(l)) {
            if labels == query {
                exact.push(s.clone());
            }
            containing.push(s);
        }
    }
    Ok(FullyLabeled { containing, exact })
}

/// The image vertex list of a simplex under the map sending each vertex to
/// the polytope vertex indexed by its label, in vertex order.
pub fn f_lp_image(
    s: &AbstractSimplex,
    labeling: &Labeling,
    polytope_vertices: &[Point],
) -> Result<Vec<Point>> {
    let mut out = Vec::with_capacity(s.vertices().len());
    for &v in s.vertices() {
        let l = labeling.labels[v];
        let Some(p) = polytope_vertices.get(l) else {
            return Err(Error::LabelOutOfRange {
                label: l,
                m: polytope_vertices.len().saturating_sub(1),
            });
        };
        out.push(p.clone());
    }
    Ok(out)
}

/// A circle labeling realizing the prescribed winding class k for m = 2:
/// a cycle with 3 max(|k|,1) vertices labeled 0,1,2 repeating for k > 0,
/// reversed for k < 0, and the non-surjective pattern 0,1,1 for k = 0.
pub fn construct_winding_labeling(k: i64) -> (SimplicialComplex, Labeling) {
    let n = 3 * k.unsigned_abs().max(1) as usize;
    let mut edges: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
    edges.push(vec![0, n - 1]);
    let complex = build_complex(&edges).expect("cycle is a valid complex");
    let labels: Vec<usize> = (0..n)
        .map(|i| {
            if k > 0 {
                i % 3
            } else if k < 0 {
                (3 - i % 3) % 3
            } else {
                [0, 1, 1][i % 3]
            }
        })
        .collect();
    (complex, Labeling { m: 2, labels })
}
