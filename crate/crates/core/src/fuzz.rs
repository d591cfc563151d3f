//! Seeded random instance generators for the fuzzing suites. All
//! generators take an explicit ChaCha stream so runs are reproducible
//! across platforms.

use crate::complex::{build_complex, SimplicialComplex};
use crate::cover::{Cover, CoverSemantics};
use crate::error::Result;
use crate::geometry::PointConfig;
use crate::labeling::{Labeling, SpernerContext};
use crate::rational::{ratio, Point};
use crate::simplex::AbstractSimplex;
use rand::prelude::IndexedRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random Sperner labeling: each vertex picks one corner of
/// its carrier face.
pub fn random_sperner_labeling(context: &SpernerContext, rng: &mut ChaCha8Rng) -> Labeling {
    let labels = context
        .carriers
        .iter()
        .map(|carrier| *carrier.vertices().choose(rng).expect("non-empty carrier"))
        .collect();
    Labeling {
        m: context.m,
        labels,
    }
}

/// Randomizes the labels of the given vertices, keeping the rest.
pub fn randomize_labels(
    base: &Labeling,
    vertices: &[usize],
    rng: &mut ChaCha8Rng,
) -> Labeling {
    let mut labels = base.labels.clone();
    for &v in vertices {
        labels[v] = rng.random_range(0..=base.m);
    }
    Labeling {
        m: base.m,
        labels,
    }
}

/// A random point with coordinates a/denom, |a| <= span * denom.
pub fn random_point(rng: &mut ChaCha8Rng, dim: usize, span: i64, denom: i64) -> Point {
    Point::new(
        (0..dim)
            .map(|_| ratio(rng.random_range(-span * denom..=span * denom), denom))
            .collect(),
    )
}

/// A random configuration of n points and a query point in d-space.
pub fn random_config(rng: &mut ChaCha8Rng, n: usize, d: usize) -> PointConfig {
    let denom = *[2i64, 3, 4, 5, 7].choose(rng).unwrap();
    let v: Vec<Point> = (0..n).map(|_| random_point(rng, d, 4, denom)).collect();
    let p = random_point(rng, d, 5, denom);
    PointConfig { v, p }
}

/// A random pure 2-complex: `tris` random triangles over a small vertex
/// pool, with vertex ids compacted to a contiguous range.
pub fn random_two_complex(rng: &mut ChaCha8Rng, max_vertices: usize, tris: usize) -> SimplicialComplex {
    loop {
        let nv = rng.random_range(4..=max_vertices.max(4));
        let mut triangles: BTreeSet<Vec<usize>> = BTreeSet::new();
        for _ in 0..tris {
            let mut verts = BTreeSet::new();
            while verts.len() < 3 {
                verts.insert(rng.random_range(0..nv));
            }
            triangles.insert(verts.into_iter().collect());
        }
        // Compact the used vertex ids.
        let used: Vec<usize> = triangles.iter().flatten().copied().collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let rename = |v: usize| used.binary_search(&v).unwrap();
        let compacted: Vec<Vec<usize>> = triangles
            .iter()
            .map(|t| t.iter().map(|&v| rename(v)).collect())
            .collect();
        if let Ok(k) = build_complex(&compacted) {
            return k;
        }
    }
}

/// A uniformly random labeling into {0..m}.
pub fn random_labeling(rng: &mut ChaCha8Rng, vertex_count: usize, m: usize) -> Labeling {
    Labeling {
        m,
        labels: (0..vertex_count).map(|_| rng.random_range(0..=m)).collect(),
    }
}

/// A random closed extension of a boundary cover over a triangulated
/// space: every top simplex off the boundary is assigned to a set whose
/// boundary trace stays inside the base set, then the sets are closed
/// under faces.
pub fn random_closed_extension(
    base: &Cover,
    space: &SimplicialComplex,
    rng: &mut ChaCha8Rng,
) -> Result<Cover> {
    let sub_simplices = base.ambient().all_simplices();
    let mut generators: Vec<Vec<AbstractSimplex>> = (0..base.set_count())
        .map(|i| base.set(i).iter().cloned().collect())
        .collect();
    for top in space.maximal_simplices() {
        if sub_simplices.contains(top) {
            continue;
        }
        let eligible: Vec<usize> = (0..base.set_count())
            .filter(|&i| {
                top.all_faces()
                    .iter()
                    .filter(|f| sub_simplices.contains(*f))
                    .all(|f| base.set(i).contains(f))
            })
            .collect();
        let &choice = eligible
            .choose(rng)
            .expect("every top simplex admits an eligible set");
        generators[choice].push(top.clone());
    }
    Cover::new(space.clone(), CoverSemantics::Closed, generators)
}

/// Outcome of a named fuzzing suite: per-instance failures are collected
/// with enough detail to reproduce them.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub count: usize,
    pub seed: u64,
    pub passed: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, count: usize, seed: u64) -> Self {
        Self {
            suite: suite.to_string(),
            count,
            seed,
            passed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const SUITES: [&str; 10] = [
    "sperner", "degbound", "polytope", "bloch", "tucker", "kkm", "gkkm", "gsperner", "cov",
    "prop31",
];

/// Runs the named fuzzing suite with the given instance count and seed.
pub fn run_suite(suite: &str, count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::error::Error;
    match suite {
        "sperner" => suite_sperner(count, seed),
        "degbound" => suite_degbound(count, seed),
        "polytope" => suite_polytope(count, seed),
        "bloch" => suite_bloch(count, seed),
        "tucker" => suite_tucker(count, seed),
        "kkm" => suite_kkm(count, seed),
        "gkkm" => suite_gkkm(count, seed),
        "gsperner" => suite_gsperner(count, seed),
        "cov" => suite_cov(count, seed),
        "prop31" => suite_prop31(count, seed),
        other => Err(Error::InvalidInput(format!(
            "unknown suite {other:?}; available: {}",
            SUITES.join(", ")
        ))),
    }
}

/// Random Sperner labelings of the depth-2 subdivision of the 2-simplex:
/// the fully-labeled triangle count is odd and the signed count is 1.
fn suite_sperner(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::degree::signed_fully_labeled_count;
    let mut report = SuiteReport::new("sperner", count, seed);
    let (sd, ctx) = crate::fixtures::sperner_fixture(2, 2, false)?;
    let mut r = rng(seed);
    for i in 0..count {
        let labeling = random_sperner_labeling(&ctx, &mut r);
        let counts = signed_fully_labeled_count(&sd, &labeling)?;
        if counts.unsigned % 2 == 1 && counts.unsigned >= 1 && counts.signed == 1 {
            report.passed += 1;
        } else {
            report.failures.push(format!(
                "instance {i}: unsigned {} signed {}",
                counts.unsigned, counts.signed
            ));
        }
    }
    Ok(report)
}

/// Fuzzed interior labelings of winding-k disks: the unsigned
/// fully-labeled count is at least |k| and the signed count is exactly k.
fn suite_degbound(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::theorems::{deg_lower_bound_verify, Conclusion, Witness};
    let mut report = SuiteReport::new("degbound", count, seed);
    let fixtures: Vec<_> = (-3i64..=3)
        .map(crate::fixtures::disk_winding_fixture)
        .collect::<Result<_>>()?;
    let mut r = rng(seed);
    for i in 0..count {
        let k = -3 + (i as i64 % 7);
        let (disk, base, interior) = &fixtures[(k + 3) as usize];
        let labeling = randomize_labels(base, interior, &mut r);
        let verdict = deg_lower_bound_verify(disk, &labeling);
        match verdict.conclusion {
            Conclusion::Witness(Witness::DegreeBound { degree, .. }) if degree == k => {
                report.passed += 1;
            }
            other => report
                .failures
                .push(format!("instance {i} (k={k}): {other:?}")),
        }
    }
    Ok(report)
}

/// Fuzzed interior labelings of a hexagon-bounded disk with a degree-one
/// boundary: at least (6-2)|deg| = 4 fully labeled triangles.
fn suite_polytope(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::orientation::orient;
    use crate::theorems::{polytope_sperner_verify, Conclusion, Witness};
    let mut report = SuiteReport::new("polytope", count, seed);
    let hexagon = crate::fixtures::hexagon_points();
    let disk = crate::fixtures::annulus_disk(6);
    let oriented = orient(&disk, 1)?;
    let mut labels: Vec<usize> = (0..6).collect();
    labels.extend(std::iter::repeat_n(0, disk.vertex_count() - 6));
    let base = Labeling::new(5, labels)?;
    let interior: Vec<usize> = (6..disk.vertex_count()).collect();
    let mut r = rng(seed);
    for i in 0..count {
        let labeling = randomize_labels(&base, &interior, &mut r);
        let verdict = polytope_sperner_verify(&oriented, &labeling, &hexagon);
        match verdict.conclusion {
            Conclusion::Witness(Witness::PolytopeBound {
                degree,
                bound,
                fully_labeled,
                ..
            }) if degree.unsigned_abs() == 1 && bound == 4 && fully_labeled >= 4 => {
                report.passed += 1;
            }
            other => report.failures.push(format!("instance {i}: {other:?}")),
        }
    }
    Ok(report)
}

/// Random small 2-complexes with a non-manifold edge, randomly labeled
/// into a triangle: whenever dg2 is odd there is a fully labeled triangle;
/// even parity makes no claim.
fn suite_bloch(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::theorems::{bloch_sperner_verify, Conclusion, Witness};
    let mut report = SuiteReport::new("bloch", count, seed);
    let triangle = crate::fixtures::triangle_points();
    let mut r = rng(seed);
    let mut odd = 0usize;
    for i in 0..count {
        // Insist on a non-manifold edge (incidence three or more).
        let complex = loop {
            let k = random_two_complex(&mut r, 8, 10);
            let non_manifold = k
                .facet_incidence()
                .map(|c| c.values().any(|&n| n >= 3))
                .unwrap_or(false);
            if non_manifold {
                break k;
            }
        };
        let labeling = random_labeling(&mut r, complex.vertex_count(), 2);
        let verdict = bloch_sperner_verify(&complex, &labeling, &triangle);
        match verdict.conclusion {
            Conclusion::Witness(Witness::BlochBound { dg2, fully_labeled, bound, .. })
                if dg2 == 1 && fully_labeled >= bound =>
            {
                odd += 1;
                report.passed += 1;
            }
            Conclusion::NoClaim { .. } => report.passed += 1,
            other => report.failures.push(format!("instance {i}: {other:?}")),
        }
    }
    report.notes.push(format!("odd dg2 instances: {odd}"));
    Ok(report)
}

/// Random disk extensions of the four-arc antipodal boundary cover: a
/// complementary pair always intersects.
fn suite_tucker(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::theorems::{tucker_bacon_verify, Conclusion, EpHypothesis, Witness};
    let mut report = SuiteReport::new("tucker", count, seed);
    let (_, base) = crate::fixtures::antipodal_arc_cover(2)?;
    let disk = crate::fixtures::annulus_disk(8);
    let mut r = rng(seed);
    for i in 0..count {
        let ext = random_closed_extension(&base, &disk, &mut r)?;
        let verdict = tucker_bacon_verify(&base, &ext, 2, EpHypothesis::DetectManifold);
        match verdict.conclusion {
            Conclusion::Witness(Witness::ComplementaryPair { .. }) => report.passed += 1,
            other => report.failures.push(format!("instance {i}: {other:?}")),
        }
    }
    Ok(report)
}

/// Random disk extensions of a degree-one three-arc circle cover: all
/// extension sets share a simplex.
fn suite_kkm(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::theorems::{kkm_verify, Conclusion, EpHypothesis, Witness};
    let mut report = SuiteReport::new("kkm", count, seed);
    let (_, base) = crate::fixtures::cyclic_arc_cover(&[0, 1, 2], 3, 2)?;
    let disk = crate::fixtures::annulus_disk(6);
    let mut r = rng(seed);
    for i in 0..count {
        let ext = random_closed_extension(&base, &disk, &mut r)?;
        let verdict = kkm_verify(&base, &ext, EpHypothesis::DetectManifold);
        match verdict.conclusion {
            Conclusion::Witness(Witness::CommonSimplex { .. }) => report.passed += 1,
            other => report.failures.push(format!("instance {i}: {other:?}")),
        }
    }
    Ok(report)
}

/// Random disk extensions of the heptagon arc cover over the square, with
/// p in the non-zero chamber: some minimal cov set is realized.
fn suite_gkkm(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::theorems::{generalized_kkm_verify, Conclusion, EpHypothesis, Witness};
    let mut report = SuiteReport::new("gkkm", count, seed);
    let (_, base) = crate::fixtures::heptagon_arc_cover(1)?;
    let disk = crate::fixtures::annulus_disk(7);
    let square = crate::fixtures::unit_square();
    let p = Point::parse(&["1/4", "2/5"]).expect("rational point");
    let mut r = rng(seed);
    for i in 0..count {
        let ext = random_closed_extension(&base, &disk, &mut r)?;
        let verdict =
            generalized_kkm_verify(&base, &ext, &square, &p, EpHypothesis::DetectManifold);
        match verdict.conclusion {
            Conclusion::Witness(Witness::IndexedIntersection { .. }) => report.passed += 1,
            other => report.failures.push(format!("instance {i}: {other:?}")),
        }
    }
    Ok(report)
}

/// Fuzzed interior labelings of the heptagon-bounded disk: a simplex
/// labeled by a cov set always exists.
fn suite_gsperner(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::complex::manifold_boundary;
    use crate::theorems::{generalized_sperner_verify, Conclusion, EpHypothesis, Witness};
    let mut report = SuiteReport::new("gsperner", count, seed);
    let disk = crate::fixtures::annulus_disk(7);
    let boundary = manifold_boundary(&disk)?
        .as_complex()
        .expect("disk has a boundary");
    let mut labels = vec![0, 1, 2, 3, 2, 1, 3];
    labels.extend(std::iter::repeat_n(0, disk.vertex_count() - 7));
    let base = Labeling::new(3, labels)?;
    let interior: Vec<usize> = (7..disk.vertex_count()).collect();
    let square = crate::fixtures::unit_square();
    let p = Point::parse(&["1/4", "2/5"]).expect("rational point");
    let mut r = rng(seed);
    for i in 0..count {
        let labeling = randomize_labels(&base, &interior, &mut r);
        let verdict = generalized_sperner_verify(
            &disk,
            &boundary,
            &labeling,
            &square,
            &p,
            EpHypothesis::DetectManifold,
        );
        match verdict.conclusion {
            Conclusion::Witness(Witness::LabeledSimplex { .. }) => report.passed += 1,
            other => report.failures.push(format!("instance {i}: {other:?}")),
        }
    }
    Ok(report)
}

/// The antichain of inclusion-minimal index sets whose hull contains p,
/// by full enumeration of every subset; the independent oracle for cov_v.
pub fn cov_brute_force(config: &PointConfig) -> Result<Vec<Vec<usize>>> {
    use crate::hull::point_in_hull;
    use itertools::Itertools;
    let n = config.v.len();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for size in 1..=n {
        for subset in (0..n).combinations(size) {
            let pts: Vec<Point> = subset.iter().map(|&i| config.v[i].clone()).collect();
            if point_in_hull(&pts, &config.p)? {
                members.push(subset);
            }
        }
    }
    Ok(members
        .iter()
        .filter(|j| {
            !members
                .iter()
                .any(|k| k.len() < j.len() && k.iter().all(|i| j.contains(i)))
        })
        .cloned()
        .collect())
}

/// Random configurations: cov_v matches brute force and up-set membership
/// matches exhaustive enumeration.
fn suite_cov(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::geometry::cov_v;
    use itertools::Itertools;
    let mut report = SuiteReport::new("cov", count, seed);
    let mut r = rng(seed);
    for i in 0..count {
        let d = r.random_range(1..=3);
        let n = r.random_range(3..=7);
        let config = random_config(&mut r, n, d);
        let cov = cov_v(&config)?;
        let brute = cov_brute_force(&config)?;
        if cov.minimal_sets != brute {
            report.failures.push(format!(
                "instance {i}: minimal {:?} vs brute {:?}",
                cov.minimal_sets, brute
            ));
            continue;
        }
        let mut member_mismatch = false;
        for size in 1..=n {
            for subset in (0..n).combinations(size) {
                let expected = brute
                    .iter()
                    .any(|m| m.iter().all(|x| subset.contains(x)));
                if cov.contains(&subset) != expected {
                    report
                        .failures
                        .push(format!("instance {i}: membership mismatch at {subset:?}"));
                    member_mismatch = true;
                    break;
                }
            }
            if member_mismatch {
                break;
            }
        }
        if !member_mismatch {
            report.passed += 1;
        }
    }
    Ok(report)
}

/// Random labeled complexes and configurations: the combinatorial
/// complement test agrees with the exact geometric test against the image
/// polyhedron.
fn suite_prop31(count: usize, seed: u64) -> Result<SuiteReport> {
    use crate::cover::{cover_from_labeling, p_in_complement, point_in_image};
    let mut report = SuiteReport::new("prop31", count, seed);
    let mut r = rng(seed);
    for i in 0..count {
        let complex = random_two_complex(&mut r, 7, 6);
        let m = r.random_range(2..=3);
        let labeling = random_labeling(&mut r, complex.vertex_count(), m);
        let cover = cover_from_labeling(&complex, &labeling)?;
        let denom = *[2i64, 3, 5].choose(&mut r).unwrap();
        let v: Vec<Point> = (0..=m).map(|_| random_point(&mut r, 2, 3, denom)).collect();
        let p = random_point(&mut r, 2, 4, denom);
        let combinatorial = p_in_complement(&cover, &v, &p)?.in_complement;
        let geometric = !point_in_image(&cover, &v, &p)?;
        if combinatorial == geometric {
            report.passed += 1;
        } else {
            report.failures.push(format!(
                "instance {i}: combinatorial {combinatorial} vs geometric {geometric}"
            ));
        }
    }
    Ok(report)
}
