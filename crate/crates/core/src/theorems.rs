//! Verifiers and witness finders for the KKM- and Sperner-type theorems.
//!
//! Every verifier separates hypothesis checking from the conclusion
//! search, so a fuzzing harness can tell "theorem vacuous here" from
//! "theorem exercised here". A conclusion witness is produced iff every
//! hypothesis is satisfied or asserted; a completed search that finds no
//! witness under satisfied hypotheses is a falsification alarm and must
//! fail any suite.

use crate::complex::{manifold_boundary, SimplicialComplex};
use crate::cover::{
    cover_class_degree, cover_degree, extension_check, p_in_complement, Cover,
};
use crate::degree::{boundary_degree, signed_fully_labeled_count};
use crate::error::Result;
use crate::geometry::{cov_v, PointConfig};
use crate::hull::{determinant, point_in_hull};
use crate::labeling::{f_lp_image, fully_labeled, Labeling};
use crate::orientation::{induced_boundary_orientation, orient, OrientedComplex};
use crate::pebble::{pebble_set, PebbleSet};
use crate::polytope::{boundary_maps_into_polytope_boundary, require_full_dimensional};
use crate::rational::{rat, sign, Point};
use crate::simplex::AbstractSimplex;
use crate::sphere::sphere_degree_from_point;
use crate::winding::winding_of_oriented_edges;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HypothesisStatus {
    Satisfied { evidence: String },
    Asserted { note: String },
    Violated { evidence: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub name: String,
    #[serde(flatten)]
    pub status: HypothesisStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A simplex common to every set of the extension cover.
    CommonSimplex { simplex: AbstractSimplex },
    /// A minimal cov set together with a simplex in the matching sets.
    IndexedIntersection {
        indices: Vec<usize>,
        simplex: AbstractSimplex,
    },
    /// A labeled simplex carrying a minimal cov set.
    LabeledSimplex {
        indices: Vec<usize>,
        simplex: AbstractSimplex,
    },
    /// An antipodal pair of sets with a common simplex.
    ComplementaryPair {
        index: usize,
        antipode: usize,
        simplex: AbstractSimplex,
    },
    /// The degree lower bound data.
    DegreeBound {
        degree: i64,
        signed_count: i64,
        fully_labeled: u64,
        bound: u64,
    },
    /// The polytope (m-d)|deg| bound data.
    PolytopeBound {
        degree: i64,
        pebbles: usize,
        per_pebble_signed: Vec<i64>,
        fully_labeled: u64,
        bound: u64,
    },
    /// The Bloch mod-2 bound data.
    BlochBound {
        dg2: u8,
        pebbles: usize,
        per_pebble_parity: Vec<u8>,
        fully_labeled: u64,
        bound: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Conclusion {
    Witness(Witness),
    HypothesisFailed,
    /// The theorem makes no claim on this instance (e.g. even parity).
    NoClaim { reason: String },
    /// Hypotheses held but the exhaustive search found no witness: the
    /// theorem would be falsified. Must be unreachable.
    FalsificationAlarm { detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub hypotheses: Vec<HypothesisCheck>,
    pub conclusion: Conclusion,
}

impl TheoremReport {
    pub fn all_hypotheses_hold(&self) -> bool {
        self.hypotheses
            .iter()
            .all(|h| !matches!(h.status, HypothesisStatus::Violated { .. }))
    }

    pub fn verified(&self) -> bool {
        matches!(
            self.conclusion,
            Conclusion::Witness(_) | Conclusion::NoClaim { .. }
        )
    }
}

struct ReportBuilder {
    theorem: &'static str,
    hypotheses: Vec<HypothesisCheck>,
}

impl ReportBuilder {
    fn new(theorem: &'static str) -> Self {
        Self {
            theorem,
            hypotheses: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, ok: bool, evidence: impl Into<String>) -> bool {
        let evidence = evidence.into();
        self.hypotheses.push(HypothesisCheck {
            name: name.to_string(),
            status: if ok {
                HypothesisStatus::Satisfied { evidence }
            } else {
                HypothesisStatus::Violated { evidence }
            },
        });
        ok
    }

    fn assert_item(&mut self, name: &str, note: impl Into<String>) {
        self.hypotheses.push(HypothesisCheck {
            name: name.to_string(),
            status: HypothesisStatus::Asserted { note: note.into() },
        });
    }

    fn ok(&self) -> bool {
        self.hypotheses
            .iter()
            .all(|h| !matches!(h.status, HypothesisStatus::Violated { .. }))
    }

    fn finish(self, conclusion: Conclusion) -> TheoremReport {
        TheoremReport {
            theorem: self.theorem.to_string(),
            hypotheses: self.hypotheses,
            conclusion,
        }
    }

    fn failed(self) -> TheoremReport {
        self.finish(Conclusion::HypothesisFailed)
    }
}

/// How the extension-pair hypothesis (the obstruction-theoretic pair
/// condition on (X, A)) enters a verifier: detected structurally for an
/// oriented manifold with boundary, or asserted by the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EpHypothesis {
    DetectManifold,
    Assert,
}

fn ep_item(builder: &mut ReportBuilder, base: &Cover, extension: &Cover, ep: EpHypothesis) -> bool {
    match ep {
        EpHypothesis::Assert => {
            builder.assert_item("extension pair", "asserted, not computed");
            true
        }
        EpHypothesis::DetectManifold => {
            let detected = (|| -> Result<bool> {
                let x = extension.ambient();
                if orient(x, 1).is_err() {
                    return Ok(false);
                }
                let boundary = manifold_boundary(x)?;
                let Some(bc) = boundary.as_complex() else {
                    return Ok(false);
                };
                Ok(&bc == base.ambient())
            })()
            .unwrap_or(false);
            builder.check(
                "extension pair",
                detected,
                if detected {
                    "oriented manifold with boundary, detected structurally"
                } else {
                    "ambient complex is not an oriented manifold with the base cover's boundary"
                },
            )
        }
    }
}

/// The class of the base cover as an integer degree, when the base space
/// supports one: a closed orientable pseudomanifold of dimension d covered
/// by d+2 sets.
fn base_cover_degree(base: &Cover) -> Result<i64> {
    let oriented = orient(base.ambient(), 1)?;
    Ok(cover_degree(base, &oriented)?.value)
}

/// KKM-type verifier: a boundary cover with empty total intersection and
/// non-zero class, extended over the pair, forces a common point of the
/// extension sets.
pub fn kkm_verify(base: &Cover, extension: &Cover, ep: EpHypothesis) -> TheoremReport {
    let mut builder = ReportBuilder::new("kkm");
    match extension_check(base, extension) {
        Ok(report) => {
            builder.check(
                "extension",
                report.extends,
                if report.extends {
                    "restriction equals the base cover set-wise".to_string()
                } else {
                    format!("{} sets differ on the subspace", report.diffs.len())
                },
            );
        }
        Err(e) => {
            builder.check("extension", false, e.to_string());
        }
    }
    match base.total_intersection_witness() {
        None => builder.check("base total intersection empty", true, "no common simplex"),
        Some(w) => builder.check(
            "base total intersection empty",
            false,
            format!("common simplex {w}"),
        ),
    };
    match base_cover_degree(base) {
        Ok(degree) => {
            builder.check(
                "base class non-zero",
                degree != 0,
                format!("degree {degree}"),
            );
        }
        Err(e) => {
            builder.assert_item(
                "base class non-zero",
                format!("asserted, not computed ({e})"),
            );
        }
    }
    ep_item(&mut builder, base, extension, ep);
    if !builder.ok() {
        return builder.failed();
    }
    let all: Vec<usize> = (0..extension.set_count()).collect();
    match extension.intersection_witness(&all) {
        Some(simplex) => builder.finish(Conclusion::Witness(Witness::CommonSimplex { simplex })),
        None => builder.finish(Conclusion::FalsificationAlarm {
            detail: "hypotheses hold but no simplex lies in every extension set".into(),
        }),
    }
}

/// Generalized KKM verifier over a point configuration: when p avoids the
/// base cover's image and h(base, V, p) is non-zero, some cov set J is
/// realized by the extension.
pub fn generalized_kkm_verify(
    base: &Cover,
    extension: &Cover,
    v_points: &[Point],
    p: &Point,
    ep: EpHypothesis,
) -> TheoremReport {
    let mut builder = ReportBuilder::new("generalized_kkm");
    match extension_check(base, extension) {
        Ok(report) => {
            builder.check(
                "extension",
                report.extends,
                if report.extends {
                    "restriction equals the base cover set-wise".to_string()
                } else {
                    format!("{} sets differ on the subspace", report.diffs.len())
                },
            );
        }
        Err(e) => {
            builder.check("extension", false, e.to_string());
        }
    }
    let cov = match PointConfig::new(v_points.to_vec(), p.clone()).and_then(|c| cov_v(&c)) {
        Ok(cov) => cov,
        Err(e) => {
            builder.check("cov family computable", false, e.to_string());
            return builder.failed();
        }
    };
    match p_in_complement(base, v_points, p) {
        Ok(verdict) => {
            builder.check(
                "p avoids the base image",
                verdict.in_complement,
                match &verdict.violating {
                    None => "every minimal cov set has empty base intersection".to_string(),
                    Some(j) => format!("cov set {j:?} is realized by the base cover"),
                },
            );
        }
        Err(e) => {
            builder.check("p avoids the base image", false, e.to_string());
        }
    }
    match (|| -> Result<i64> {
        let oriented = orient(base.ambient(), 1)?;
        cover_class_degree(base, &oriented, v_points, p)
    })() {
        Ok(h) => {
            builder.check("h(base, V, p) non-zero", h != 0, format!("degree {h}"));
        }
        Err(e) => {
            builder.assert_item(
                "h(base, V, p) non-zero",
                format!("asserted, not computed ({e})"),
            );
        }
    }
    ep_item(&mut builder, base, extension, ep);
    if !builder.ok() {
        return builder.failed();
    }
    for j in &cov.minimal_sets {
        if let Some(simplex) = extension.intersection_witness(j) {
            return builder.finish(Conclusion::Witness(Witness::IndexedIntersection {
                indices: j.clone(),
                simplex,
            }));
        }
    }
    builder.finish(Conclusion::FalsificationAlarm {
        detail: "hypotheses hold but no minimal cov set is realized by the extension".into(),
    })
}

/// The class h(Q, L, V, p) of a labeled subcomplex, as a winding number
/// (dimension 1) or sphere degree (dimension 2) of the vertex realization
/// u -> v_{L(u)}.
pub fn labeling_class_degree(
    q: &SimplicialComplex,
    labeling: &Labeling,
    v_points: &[Point],
    p: &Point,
) -> Result<i64> {
    let oriented = orient(q, 1)?;
    let mut realization = Vec::with_capacity(labeling.labels.len());
    for &l in &labeling.labels {
        realization.push(
            v_points
                .get(l)
                .ok_or(crate::error::Error::LabelOutOfRange {
                    label: l,
                    m: v_points.len().saturating_sub(1),
                })?
                .clone(),
        );
    }
    match q.dimension() {
        1 => winding_of_oriented_edges(&oriented, &realization, p),
        2 => sphere_degree_from_point(&oriented, &realization, p),
        d => Err(crate::error::Error::UnsupportedDimension(d)),
    }
}

/// Generalized Sperner verifier: a labeling of K whose restriction to the
/// subcomplex Q realizes no cov set and has non-zero class forces a
/// simplex of K labeled by some cov set.
pub fn generalized_sperner_verify(
    complex: &SimplicialComplex,
    subcomplex: &SimplicialComplex,
    labeling: &Labeling,
    v_points: &[Point],
    p: &Point,
    ep: EpHypothesis,
) -> TheoremReport {
    let mut builder = ReportBuilder::new("generalized_sperner");
    let is_sub = subcomplex
        .maximal_simplices()
        .all(|s| complex.contains(s));
    builder.check(
        "subcomplex",
        is_sub,
        if is_sub {
            "Q is a subcomplex of K"
        } else {
            "Q has a simplex outside K"
        },
    );
    let cov = match PointConfig::new(v_points.to_vec(), p.clone()).and_then(|c| cov_v(&c)) {
        Ok(cov) => cov,
        Err(e) => {
            builder.check("cov family computable", false, e.to_string());
            return builder.failed();
        }
    };
    let mut offending: Option<(Vec<usize>, AbstractSimplex)> = None;
    for j in &cov.minimal_sets {
        match fully_labeled(subcomplex, labeling, j) {
            Ok(found) => {
                if let Some(s) = found.containing.first() {
                    offending = Some((j.clone(), s.clone()));
                    break;
                }
            }
            Err(e) => {
                builder.check("no cov-labeled simplex in Q", false, e.to_string());
                return builder.failed();
            }
        }
    }
    builder.check(
        "no cov-labeled simplex in Q",
        offending.is_none(),
        match &offending {
            None => "no Q-simplex carries a minimal cov set".to_string(),
            Some((j, s)) => format!("Q-simplex {s} carries cov set {j:?}"),
        },
    );
    match labeling_class_degree(subcomplex, labeling, v_points, p) {
        Ok(h) => {
            builder.check("h(Q, L, V, p) non-zero", h != 0, format!("degree {h}"));
        }
        Err(e) => match ep {
            EpHypothesis::Assert => builder.assert_item(
                "h(Q, L, V, p) non-zero",
                format!("asserted, not computed ({e})"),
            ),
            EpHypothesis::DetectManifold => {
                builder.check("h(Q, L, V, p) non-zero", false, e.to_string());
            }
        },
    }
    match ep {
        EpHypothesis::Assert => builder.assert_item("extension pair", "asserted, not computed"),
        EpHypothesis::DetectManifold => {
            let detected = (|| -> Result<bool> {
                if orient(complex, 1).is_err() {
                    return Ok(false);
                }
                let boundary = manifold_boundary(complex)?;
                let Some(bc) = boundary.as_complex() else {
                    return Ok(false);
                };
                Ok(&bc == subcomplex)
            })()
            .unwrap_or(false);
            builder.check(
                "extension pair",
                detected,
                if detected {
                    "K is an oriented manifold with boundary Q"
                } else {
                    "(|K|, |Q|) not detected as an oriented manifold with boundary"
                },
            );
        }
    }
    if !builder.ok() {
        return builder.failed();
    }
    for j in &cov.minimal_sets {
        if let Ok(found) = fully_labeled(complex, labeling, j) {
            if let Some(s) = found.containing.first() {
                return builder.finish(Conclusion::Witness(Witness::LabeledSimplex {
                    indices: j.clone(),
                    simplex: s.clone(),
                }));
            }
        }
    }
    builder.finish(Conclusion::FalsificationAlarm {
        detail: "hypotheses hold but no simplex of K carries a cov set".into(),
    })
}

/// Degree lower bound: a labeling of an oriented n-manifold with boundary
/// into {0..n} forces at least |deg(L, boundary)| fully labeled top
/// simplices; the signed count equals the degree exactly.
pub fn deg_lower_bound_verify(oriented: &OrientedComplex, labeling: &Labeling) -> TheoremReport {
    let mut builder = ReportBuilder::new("degree_lower_bound");
    let n = oriented.dimension();
    builder.check(
        "label range",
        labeling.m == n,
        format!("m = {} over dimension {n}", labeling.m),
    );
    let degree = match boundary_degree(oriented, labeling) {
        Ok(report) => {
            builder.check(
                "boundary degree computable",
                true,
                format!("deg(L, boundary) = {}", report.value),
            );
            Some(report.value)
        }
        Err(e) => {
            builder.check("boundary degree computable", false, e.to_string());
            None
        }
    };
    if !builder.ok() {
        return builder.failed();
    }
    let degree = degree.unwrap();
    let counts = match signed_fully_labeled_count(oriented, labeling) {
        Ok(c) => c,
        Err(e) => {
            builder.check("count computable", false, e.to_string());
            return builder.failed();
        }
    };
    let bound = degree.unsigned_abs();
    if counts.unsigned >= bound && counts.signed == degree {
        builder.finish(Conclusion::Witness(Witness::DegreeBound {
            degree,
            signed_count: counts.signed,
            fully_labeled: counts.unsigned,
            bound,
        }))
    } else {
        builder.finish(Conclusion::FalsificationAlarm {
            detail: format!(
                "degree {degree} but unsigned count {} and signed count {}",
                counts.unsigned, counts.signed
            ),
        })
    }
}

/// Signed count of preimages of a generic interior point under the
/// polytope realization: the geometric orientation of each fully labeled
/// simplex's image times the simplex sign, summed over images containing
/// the point.
fn signed_preimages_at(
    oriented: &OrientedComplex,
    labeling: &Labeling,
    p_vertices: &[Point],
    x: &Point,
) -> Result<i64> {
    let d = oriented.dimension();
    let mut total = 0i64;
    for (s, g) in oriented.signs() {
        let image = f_lp_image(s, labeling, p_vertices)?;
        let rows: Vec<Vec<crate::rational::Rat>> =
            image[1..].iter().map(|q| q.sub(&image[0])).collect();
        let det = determinant(&rows);
        let orientation = sign(&det);
        if orientation == 0 {
            continue; // degenerate image cannot contain a generic point
        }
        debug_assert_eq!(rows.len(), d);
        if point_in_hull(&image, x)? {
            total += i64::from(g) * i64::from(orientation);
        }
    }
    Ok(total)
}

/// Parity of the number of fully labeled top simplices whose image
/// contains the point.
fn preimage_parity_at(
    complex: &SimplicialComplex,
    labeling: &Labeling,
    p_vertices: &[Point],
    x: &Point,
) -> Result<u8> {
    let mut count = 0usize;
    for s in complex.maximal_simplices() {
        if labeling.label_set(s).len() != s.vertices().len() {
            continue;
        }
        let image = f_lp_image(s, labeling, p_vertices)?;
        if point_in_hull(&image, x)? {
            count += 1;
        }
    }
    Ok((count % 2) as u8)
}

/// Count of fully labeled top simplices (all vertex labels distinct).
fn fully_labeled_top_count(complex: &SimplicialComplex, labeling: &Labeling) -> u64 {
    complex
        .maximal_simplices()
        .filter(|s| labeling.label_set(s).len() == s.vertices().len())
        .count() as u64
}

/// Polytope bound: a labeling of an oriented d-manifold with boundary into
/// the vertices of a polytope P with m vertices, mapping the boundary into
/// the boundary of P, forces at least (m - d)|deg| fully labeled
/// d-simplices, witnessed pebble by pebble.
pub fn polytope_sperner_verify(
    oriented: &OrientedComplex,
    labeling: &Labeling,
    p_vertices: &[Point],
) -> TheoremReport {
    let mut builder = ReportBuilder::new("polytope_sperner");
    let d = oriented.dimension();
    let full_dim = require_full_dimensional(p_vertices);
    builder.check(
        "polytope full-dimensional",
        full_dim.is_ok(),
        match &full_dim {
            Ok(dd) => format!("dimension {dd}"),
            Err(e) => e.to_string(),
        },
    );
    builder.check(
        "supported dimension",
        d == 2 || d == 3,
        format!("ambient dimension {d}"),
    );
    if full_dim.map(|dd| dd != d).unwrap_or(true) {
        builder.check(
            "dimension agreement",
            false,
            "polytope and complex dimensions differ",
        );
        return builder.failed();
    }
    builder.check(
        "label range",
        labeling.m + 1 == p_vertices.len(),
        format!("m = {}, |P| = {}", labeling.m, p_vertices.len()),
    );
    let boundary = match manifold_boundary(oriented.complex()) {
        Ok(b) => b,
        Err(e) => {
            builder.check("boundary computable", false, e.to_string());
            return builder.failed();
        }
    };
    builder.check(
        "boundary non-empty",
        !boundary.is_empty(),
        format!("{} boundary faces", boundary.faces.len()),
    );
    if !builder.ok() {
        return builder.failed();
    }
    let faces: Vec<AbstractSimplex> = boundary.faces.iter().cloned().collect();
    match boundary_maps_into_polytope_boundary(&faces, labeling, p_vertices) {
        Ok(()) => builder.check(
            "boundary maps into the polytope boundary",
            true,
            "every boundary image lies in a common proper face",
        ),
        Err(e) => builder.check("boundary maps into the polytope boundary", false, e.to_string()),
    };
    let pebbles = match pebble_set(p_vertices, d) {
        Ok(set) => {
            builder.check(
                "pebble set certified",
                true,
                format!("{} pebbles for bound {}", set.pebbles.len(), set.required),
            );
            Some(set)
        }
        Err(e) => {
            builder.check("pebble set certified", false, e.to_string());
            None
        }
    };
    // The boundary class: h at an interior point, which any pebble is.
    let degree = match (|| -> Result<i64> {
        let bd = induced_boundary_orientation(oriented)?;
        let centroid = Point::centroid(p_vertices);
        let mut realization = Vec::with_capacity(labeling.labels.len());
        for &l in &labeling.labels {
            realization.push(p_vertices[l].clone());
        }
        match d {
            2 => winding_of_oriented_edges(&bd, &realization, &centroid),
            3 => sphere_degree_from_point(&bd, &realization, &centroid),
            other => Err(crate::error::Error::UnsupportedDimension(other)),
        }
    })() {
        Ok(k) => {
            builder.check("boundary degree computable", true, format!("deg = {k}"));
            Some(k)
        }
        Err(e) => {
            builder.check("boundary degree computable", false, e.to_string());
            None
        }
    };
    if !builder.ok() {
        return builder.failed();
    }
    let degree = degree.unwrap();
    let pebbles = pebbles.unwrap();
    let mut per_pebble_signed = Vec::with_capacity(pebbles.pebbles.len());
    for pebble in &pebbles.pebbles {
        match signed_preimages_at(oriented, labeling, p_vertices, &pebble.point) {
            Ok(s) => per_pebble_signed.push(s),
            Err(e) => {
                builder.check("pebble counting", false, e.to_string());
                return builder.failed();
            }
        }
    }
    let fully = fully_labeled_top_count(oriented.complex(), labeling);
    let bound = (pebbles.required as u64) * degree.unsigned_abs();
    // Every interior generic point has signed preimage count equal to the
    // boundary degree; a mismatch would falsify the degree argument.
    if per_pebble_signed.iter().any(|&s| s != degree) {
        return builder.finish(Conclusion::FalsificationAlarm {
            detail: format!(
                "per-pebble signed counts {per_pebble_signed:?} differ from degree {degree}"
            ),
        });
    }
    if fully < bound {
        return builder.finish(Conclusion::FalsificationAlarm {
            detail: format!("only {fully} fully labeled simplices, bound {bound}"),
        });
    }
    builder.finish(Conclusion::Witness(Witness::PolytopeBound {
        degree,
        pebbles: pebbles.pebbles.len(),
        per_pebble_signed,
        fully_labeled: fully,
        bound,
    }))
}

/// Bloch variant: when dg2(L, Bd K) is odd, the complex contains at least
/// m - d fully labeled d-simplices, one odd preimage class per pebble.
pub fn bloch_sperner_verify(
    complex: &SimplicialComplex,
    labeling: &Labeling,
    p_vertices: &[Point],
) -> TheoremReport {
    let mut builder = ReportBuilder::new("bloch_sperner");
    let d = complex.dimension();
    builder.check(
        "supported dimension",
        d == 2 || d == 3,
        format!("complex dimension {d}"),
    );
    if !builder.ok() {
        return builder.failed();
    }
    let parity = match crate::polytope::dg2(complex, labeling, p_vertices) {
        Ok(p) => {
            builder.check(
                "boundary maps into the polytope boundary",
                true,
                format!("dg2 = {p}"),
            );
            p
        }
        Err(e) => {
            builder.check("boundary maps into the polytope boundary", false, e.to_string());
            return builder.failed();
        }
    };
    if parity == 0 {
        return builder.finish(Conclusion::NoClaim {
            reason: "dg2 is even; the theorem makes no claim".into(),
        });
    }
    let pebbles: PebbleSet = match pebble_set(p_vertices, d) {
        Ok(set) => {
            builder.check(
                "pebble set certified",
                true,
                format!("{} pebbles for bound {}", set.pebbles.len(), set.required),
            );
            set
        }
        Err(e) => {
            builder.check("pebble set certified", false, e.to_string());
            return builder.failed();
        }
    };
    let mut per_pebble_parity = Vec::with_capacity(pebbles.pebbles.len());
    for pebble in &pebbles.pebbles {
        match preimage_parity_at(complex, labeling, p_vertices, &pebble.point) {
            Ok(p) => per_pebble_parity.push(p),
            Err(e) => {
                builder.check("pebble counting", false, e.to_string());
                return builder.failed();
            }
        }
    }
    let fully = fully_labeled_top_count(complex, labeling);
    let bound = pebbles.required as u64;
    if per_pebble_parity.iter().any(|&p| p != 1) {
        return builder.finish(Conclusion::FalsificationAlarm {
            detail: format!(
                "odd dg2 but per-pebble parities {per_pebble_parity:?} are not all odd"
            ),
        });
    }
    if fully < bound {
        return builder.finish(Conclusion::FalsificationAlarm {
            detail: format!("only {fully} fully labeled simplices, bound {bound}"),
        });
    }
    builder.finish(Conclusion::Witness(Witness::BlochBound {
        dg2: parity,
        pebbles: pebbles.pebbles.len(),
        per_pebble_parity,
        fully_labeled: fully,
        bound,
    }))
}

/// The standard-basis configuration for the antipodal corollary: the
/// points e_1..e_n then -e_1..-e_n in R^n, with the origin.
pub fn antipodal_configuration(n: usize) -> (Vec<Point>, Point) {
    let mut points = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut coords = vec![rat(0); n];
        coords[i] = rat(1);
        points.push(Point::new(coords));
    }
    for i in 0..n {
        let mut coords = vec![rat(0); n];
        coords[i] = rat(-1);
        points.push(Point::new(coords));
    }
    (points, Point::new(vec![rat(0); n]))
}

/// Tucker-type antipodal verifier: sets indexed i and n+i are antipodal
/// pairs over V = {e_1..e_n, -e_1..-e_n} and p the origin. Disjoint
/// antipodal base pairs with non-zero class force a complementary pair in
/// the extension.
pub fn tucker_bacon_verify(
    base: &Cover,
    extension: &Cover,
    n: usize,
    ep: EpHypothesis,
) -> TheoremReport {
    let mut builder = ReportBuilder::new("tucker_bacon");
    builder.check(
        "set count",
        base.set_count() == 2 * n && extension.set_count() == 2 * n,
        format!(
            "base {} sets, extension {} sets, expected {}",
            base.set_count(),
            extension.set_count(),
            2 * n
        ),
    );
    if !builder.ok() {
        return builder.failed();
    }
    let (v_points, origin) = antipodal_configuration(n);
    // The minimal cov sets at the origin are exactly the antipodal pairs;
    // computed and verified rather than assumed.
    let cov = match PointConfig::new(v_points.clone(), origin.clone()).and_then(|c| cov_v(&c)) {
        Ok(cov) => cov,
        Err(e) => {
            builder.check("cov at origin computable", false, e.to_string());
            return builder.failed();
        }
    };
    let expected: Vec<Vec<usize>> = (0..n).map(|i| vec![i, n + i]).collect();
    builder.check(
        "cov at origin is the antipodal pairs",
        cov.minimal_sets == expected,
        format!("{:?}", cov.minimal_sets),
    );
    let mut antipodal_ok = true;
    let mut antipodal_evidence = String::from("all base antipodal pairs disjoint");
    for i in 0..n {
        if let Some(w) = base.intersection_witness(&[i, n + i]) {
            antipodal_ok = false;
            antipodal_evidence = format!("base sets {i} and {} share {w}", n + i);
            break;
        }
    }
    builder.check("antipodal base pairs disjoint", antipodal_ok, antipodal_evidence);
    match extension_check(base, extension) {
        Ok(report) => {
            builder.check(
                "extension",
                report.extends,
                if report.extends {
                    "restriction equals the base cover set-wise".to_string()
                } else {
                    format!("{} sets differ on the subspace", report.diffs.len())
                },
            );
        }
        Err(e) => {
            builder.check("extension", false, e.to_string());
        }
    }
    match (|| -> Result<i64> {
        let oriented = orient(base.ambient(), 1)?;
        cover_class_degree(base, &oriented, &v_points, &origin)
    })() {
        Ok(h) => {
            builder.check("h(base, V, O) non-zero", h != 0, format!("degree {h}"));
        }
        Err(e) => {
            builder.assert_item(
                "h(base, V, O) non-zero",
                format!("asserted, not computed ({e})"),
            );
        }
    }
    ep_item(&mut builder, base, extension, ep);
    if !builder.ok() {
        return builder.failed();
    }
    for i in 0..n {
        if let Some(simplex) = extension.intersection_witness(&[i, n + i]) {
            return builder.finish(Conclusion::Witness(Witness::ComplementaryPair {
                index: i,
                antipode: n + i,
                simplex,
            }));
        }
    }
    builder.finish(Conclusion::FalsificationAlarm {
        detail: "hypotheses hold but no complementary pair intersects".into(),
    })
}
