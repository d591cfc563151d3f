//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Tolerances are zero throughout;
//! every quantity is exact.

use kkm_core::cover::{cover_degree, cover_from_labeling, p_in_complement, point_in_image};
use kkm_core::degree::degree_labeling;
use kkm_core::fixtures;
use kkm_core::fuzz::{run_suite, SuiteReport};
use kkm_core::labeling::construct_winding_labeling;
use kkm_core::orientation::orient;
use kkm_core::pebble::pebble_set;
use kkm_core::rational::{ratio, Point};
use kkm_core::theorems::labeling_class_degree;
use kkm_core::winding::winding_number;
use kkm_core::Error;
use std::time::Instant;

fn assert_suite(report: &SuiteReport) {
    assert!(
        report.ok(),
        "suite {} failed on {} of {} instances: {:?}",
        report.suite,
        report.failures.len(),
        report.count,
        report.failures
    );
    assert_eq!(report.passed, report.count);
}

/// Criterion 1: canonical Sperner labelings of subdivided boundary
/// spheres have degree exactly 1 at every depth, across all target faces,
/// within five seconds.
#[test]
fn criterion_1_sperner_degree() {
    let start = Instant::now();
    for m in [2usize, 3] {
        for depth in 1..=3 {
            let (sd, ctx) = fixtures::sperner_fixture(m, depth, true).unwrap();
            let labeling = ctx.canonical_labeling();
            let report = degree_labeling(&sd, &labeling).unwrap();
            assert_eq!(report.value, 1, "m = {m}, depth = {depth}");
            assert!(
                report.cross_checked.iter().all(|(_, v)| *v == 1),
                "target cross-check disagrees at m = {m}, depth = {depth}"
            );
            // n + 2 target faces for the n-sphere, n = m - 1.
            assert_eq!(report.cross_checked.len(), m + 1);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!("ACCEPTANCE 1 sperner-degree: PASS (boundary spheres m=2,3 depths 1-3, {elapsed:?})");
}

/// Criterion 2: 100 seeded random Sperner labelings of the depth-2
/// subdivision of the 2-simplex have an odd fully-labeled count and
/// signed count exactly 1.
#[test]
fn criterion_2_sperner_lemma() {
    let report = run_suite("sperner", 100, 20240).unwrap();
    assert_suite(&report);
    println!("ACCEPTANCE 2 sperner-lemma: PASS (100 random Sperner labelings, odd count, signed 1)");
}

/// Criterion 3: the heptagon over the unit square, reproduced exactly:
/// winding 1 on 20 points of the v0v1v3 chamber, 0 on 20 points of every
/// other chamber, and on-image errors on the loop.
#[test]
fn criterion_3_heptagon_example() {
    let loop_pts = fixtures::heptagon_image_loop();
    let (heptagon, labeling) = fixtures::heptagon();
    let square = fixtures::unit_square();

    // Chamber of triangle v0 v1 v3: x > 0, y > 0, x + y < 1.
    let mut chamber_one = Vec::new();
    'outer: for i in 1i64..=7 {
        for j in 1i64..=(8 - i) {
            chamber_one.push(Point::new(vec![ratio(i, 9), ratio(j, 9)]));
            if chamber_one.len() == 20 {
                break 'outer;
            }
        }
    }
    assert_eq!(chamber_one.len(), 20);
    for p in &chamber_one {
        assert_eq!(winding_number(&loop_pts, p).unwrap(), 1, "p = {p}");
        assert_eq!(
            labeling_class_degree(&heptagon, &labeling, &square, p).unwrap(),
            1
        );
    }

    // Chamber of triangle v1 v2 v3: x + y > 1, x < 1, y < 1.
    let mut chamber_zero = Vec::new();
    'outer2: for i in 2i64..=8 {
        for j in (10 - i)..=8 {
            chamber_zero.push(Point::new(vec![ratio(i, 9), ratio(j, 9)]));
            if chamber_zero.len() == 20 {
                break 'outer2;
            }
        }
    }
    assert_eq!(chamber_zero.len(), 20);
    // The unbounded chamber outside the square.
    let mut outside = Vec::new();
    for i in 1i64..=10 {
        outside.push(Point::new(vec![ratio(3 * i + 1, 3), ratio(-i, 5)]));
        outside.push(Point::new(vec![ratio(-i, 7), ratio(2 * i + 1, 2)]));
    }
    assert_eq!(outside.len(), 20);
    for p in chamber_zero.iter().chain(&outside) {
        assert_eq!(winding_number(&loop_pts, p).unwrap(), 0, "p = {p}");
        assert_eq!(
            labeling_class_degree(&heptagon, &labeling, &square, p).unwrap(),
            0
        );
    }

    // Points on the image raise the on-image error, one per segment.
    let on_image = [
        Point::parse(&["1/2", "0"]).unwrap(),   // v0 v1
        Point::parse(&["1", "1/2"]).unwrap(),   // v1 v2
        Point::parse(&["1/2", "1"]).unwrap(),   // v2 v3
        Point::parse(&["1/2", "1/2"]).unwrap(), // v1 v3 diagonal
        Point::parse(&["0", "1/2"]).unwrap(),   // v3 v0
        Point::from_ints(&[1, 0]),              // a vertex
    ];
    for p in &on_image {
        assert!(
            matches!(winding_number(&loop_pts, p), Err(Error::PointOnImage)),
            "p = {p}"
        );
    }
    println!("ACCEPTANCE 3 heptagon-example: PASS (20+40 chamber points exact, on-image errors)");
}

/// Criterion 4: 500 fuzzed labelings of winding-k disks, k in -3..=3:
/// unsigned fully-labeled count >= |k| and signed count exactly k.
#[test]
fn criterion_4_degree_lower_bound() {
    let report = run_suite("degbound", 500, 77).unwrap();
    assert_suite(&report);
    println!("ACCEPTANCE 4 degree-lower-bound: PASS (500 fuzzed disk labelings, k in -3..=3)");
}

/// Criterion 5: the hexagon polytope admits a certified pebble set of
/// size >= 4, and 100 fuzzed degree-one disks have >= 4 fully labeled
/// triangles.
#[test]
fn criterion_5_polytope_bound() {
    let hexagon = fixtures::hexagon_points();
    let pebbles = pebble_set(&hexagon, 2).unwrap();
    assert!(pebbles.pebbles.len() >= 4);
    assert_eq!(pebbles.required, 4);
    let report = run_suite("polytope", 100, 4242).unwrap();
    assert_suite(&report);
    println!(
        "ACCEPTANCE 5 polytope-bound: PASS (pebble set of size {}, 100 fuzzed labelings >= 4)",
        pebbles.pebbles.len()
    );
}

/// Criterion 6: 50 random 2-complexes with non-manifold edges: odd dg2
/// forces the fully-labeled bound, even dg2 makes no claim.
#[test]
fn criterion_6_bloch_variant() {
    let report = run_suite("bloch", 50, 99).unwrap();
    assert_suite(&report);
    let odd: usize = report.notes[0]
        .strip_prefix("odd dg2 instances: ")
        .unwrap()
        .parse()
        .unwrap();
    assert!(odd >= 1, "corpus exercised no odd instance");
    assert!(odd < 50, "corpus exercised no even instance");
    println!("ACCEPTANCE 6 bloch-variant: PASS (50 non-manifold complexes, {odd} odd dg2)");
}

/// Criterion 7: 200 random configurations: cov_v matches brute force over
/// all subsets, and up-set membership matches exhaustive enumeration.
#[test]
fn criterion_7_cov_oracle() {
    let report = run_suite("cov", 200, 31415).unwrap();
    assert_suite(&report);
    println!("ACCEPTANCE 7 cov-oracle: PASS (200 random configs, zero tolerance)");
}

/// Criterion 8: cover degree equals labeling degree on the 1-dimensional
/// fixtures, including the winding family for |k| <= 5.
#[test]
fn criterion_8_cover_labeling_coherence() {
    for k in -5i64..=5 {
        let (circle, labeling) = construct_winding_labeling(k);
        let oriented = orient(&circle, 1).unwrap();
        let cover = cover_from_labeling(&circle, &labeling).unwrap();
        let via_cover = cover_degree(&cover, &oriented).unwrap().value;
        let direct = degree_labeling(&oriented, &labeling).unwrap().value;
        assert_eq!(via_cover, direct, "k = {k}");
        assert_eq!(via_cover, k, "k = {k}");
    }
    // Sperner-labeled subdivisions of the boundary circle.
    for depth in 0..=2 {
        let (sd, ctx) = fixtures::sperner_fixture(2, depth, true).unwrap();
        let labeling = ctx.canonical_labeling();
        let cover = cover_from_labeling(sd.complex(), &labeling).unwrap();
        let via_cover = cover_degree(&cover, &sd).unwrap().value;
        let direct = degree_labeling(&sd, &labeling).unwrap().value;
        assert_eq!(via_cover, direct);
        assert_eq!(via_cover, 1);
    }
    println!("ACCEPTANCE 8 cover-labeling-coherence: PASS (winding family |k| <= 5 and Sperner circles)");
}

/// Criterion 9: 100 fuzzed disk extensions of the antipodal four-arc
/// cover: a complementary pair always intersects.
#[test]
fn criterion_9_tucker_bacon() {
    let report = run_suite("tucker", 100, 1234).unwrap();
    assert_suite(&report);
    println!("ACCEPTANCE 9 tucker-bacon: PASS (100 fuzzed extensions, complementary pair found)");
}

/// Criterion 10: the combinatorial complement test agrees with the exact
/// geometric image test on the heptagon fixture and 100 random configs.
#[test]
fn criterion_10_complement_equivalence() {
    let (heptagon, labeling) = fixtures::heptagon();
    let cover = cover_from_labeling(&heptagon, &labeling).unwrap();
    let square = fixtures::unit_square();
    let mut fixture_points = vec![
        Point::parse(&["3/10", "3/10"]).unwrap(),
        Point::parse(&["7/10", "7/10"]).unwrap(),
        Point::parse(&["1/2", "0"]).unwrap(),
        Point::parse(&["1/2", "1/2"]).unwrap(),
        Point::from_ints(&[2, 2]),
    ];
    for i in 1i64..=6 {
        fixture_points.push(Point::new(vec![ratio(i, 7), ratio(i % 3 + 1, 5)]));
    }
    for p in &fixture_points {
        let combinatorial = p_in_complement(&cover, &square, p).unwrap().in_complement;
        let geometric = !point_in_image(&cover, &square, p).unwrap();
        assert_eq!(combinatorial, geometric, "p = {p}");
    }
    let report = run_suite("prop31", 100, 2718).unwrap();
    assert_suite(&report);
    println!("ACCEPTANCE 10 complement-equivalence: PASS (heptagon fixture and 100 random configs)");
}
