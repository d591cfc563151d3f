//! Independent oracles and cross-route checks: an exact phase-1 simplex
//! oracle for hull membership, winding invariances, geometric degree
//! oracles, partition-of-unity independence, nerve brute force, pebble
//! certificates, and minimal-set completeness.

use kkm_core::cover::{
    cover_degree, cover_from_labeling, image_polyhedron, nerve, p_in_complement, point_in_image,
    rho_eval, BaryPoint, PartitionWeights,
};
use kkm_core::degree::degree_labeling;
use kkm_core::fixtures;
use kkm_core::fuzz;
use kkm_core::geometry::{cov_v, PointConfig};
use kkm_core::hull::point_in_hull;
use kkm_core::labeling::{construct_winding_labeling, Labeling};
use kkm_core::orientation::orient;
use kkm_core::pebble::pebble_set;
use kkm_core::polytope::dg2;
use kkm_core::rational::{rat, ratio, Point, Rat};
use kkm_core::sphere::sphere_degree_from_point;
use kkm_core::subdivision::barycentric_subdivision_oriented;
use kkm_core::winding::{winding_number, winding_number_with_ray, RayDirection};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::prelude::IndexedRandom;
use rand::Rng;

/// Exact LP feasibility by phase-1 simplex with Bland's rule: is there a
/// non-negative solution of A x = b? An algorithmically independent route
/// to hull membership.
fn lp_feasible(a: &[Vec<Rat>], b: &[Rat]) -> bool {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    // Normalize to b >= 0 and append artificial identity columns.
    let mut table: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Rat> = a[i]
            .iter()
            .map(|x| if flip { -x } else { x.clone() })
            .collect();
        for j in 0..m {
            row.push(if j == i { Rat::one() } else { Rat::zero() });
        }
        table.push(row);
        rhs.push(if flip { -&b[i] } else { b[i].clone() });
    }
    let total = n + m;
    let mut basis: Vec<usize> = (n..total).collect();
    loop {
        // Reduced costs for the phase-1 objective (sum of artificials).
        let mut entering = None;
        for j in 0..total {
            if basis.contains(&j) {
                continue;
            }
            let mut reduced = if j >= n { Rat::one() } else { Rat::zero() };
            for i in 0..m {
                if basis[i] >= n {
                    reduced -= &table[i][j];
                }
            }
            if reduced.is_negative() {
                entering = Some(j);
                break; // Bland: smallest entering index
            }
        }
        let Some(j) = entering else {
            // Optimal: feasible iff no artificial variable is positive.
            let objective: Rat = (0..m)
                .filter(|&i| basis[i] >= n)
                .map(|i| rhs[i].clone())
                .sum();
            return objective.is_zero();
        };
        // Ratio test with Bland's tie-break on the leaving basis index.
        let mut leaving: Option<(usize, Rat)> = None;
        for i in 0..m {
            if table[i][j].is_positive() {
                let ratio = &rhs[i] / &table[i][j];
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leaving else {
            return false; // unbounded phase-1 cannot happen; treat as infeasible
        };
        let pivot = table[pivot_row][j].clone();
        for c in 0..total {
            table[pivot_row][c] = &table[pivot_row][c] / &pivot;
        }
        rhs[pivot_row] = &rhs[pivot_row] / &pivot;
        for i in 0..m {
            if i == pivot_row || table[i][j].is_zero() {
                continue;
            }
            let factor = table[i][j].clone();
            for c in 0..total {
                let delta = &factor * &table[pivot_row][c];
                table[i][c] -= delta;
            }
            let delta = &factor * &rhs[pivot_row];
            rhs[i] -= delta;
        }
        basis[pivot_row] = j;
    }
}

/// Hull membership through the LP route.
fn hull_by_lp(points: &[Point], p: &Point) -> bool {
    let d = p.dim();
    let n = points.len();
    let mut a = vec![vec![Rat::zero(); n]; d + 1];
    let mut b = vec![Rat::zero(); d + 1];
    for (j, q) in points.iter().enumerate() {
        for i in 0..d {
            a[i][j] = q.coord(i).clone();
        }
        a[d][j] = Rat::one();
    }
    for i in 0..d {
        b[i] = p.coord(i).clone();
    }
    b[d] = Rat::one();
    lp_feasible(&a, &b)
}

#[test]
fn caratheodory_agrees_with_lp_oracle() {
    let mut rng = fuzz::rng(2024);
    for _ in 0..300 {
        let d = rng.random_range(1..=3);
        let n = rng.random_range(1..=7);
        let config = fuzz::random_config(&mut rng, n, d);
        let direct = point_in_hull(&config.v, &config.p).unwrap();
        let via_lp = hull_by_lp(&config.v, &config.p);
        assert_eq!(direct, via_lp, "V = {:?}, p = {:?}", config.v, config.p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Winding numbers are invariant under cyclic rotation and ray choice,
    /// and negate under loop reversal.
    #[test]
    fn winding_well_definedness(
        raw in proptest::collection::vec((-4i64..=4, -4i64..=4), 3..8),
        px in -9i64..=9,
        py in -9i64..=9,
        rotation in 0usize..8,
    ) {
        let loop_pts: Vec<Point> = raw.iter().map(|&(x, y)| Point::from_ints(&[x, y])).collect();
        let p = Point::new(vec![ratio(px, 2), ratio(py, 2)]);
        let Ok(w) = winding_number(&loop_pts, &p) else {
            return Ok(()); // p on the image: nothing to check
        };
        for ray in RayDirection::ALL {
            prop_assert_eq!(winding_number_with_ray(&loop_pts, &p, ray).unwrap(), w);
        }
        let k = rotation % loop_pts.len();
        let rotated: Vec<Point> = loop_pts[k..].iter().chain(&loop_pts[..k]).cloned().collect();
        prop_assert_eq!(winding_number(&rotated, &p).unwrap(), w);
        let reversed: Vec<Point> = loop_pts.iter().rev().cloned().collect();
        prop_assert_eq!(winding_number(&reversed, &p).unwrap(), -w);
    }

    /// Hull membership agrees with the LP oracle on arbitrary rational
    /// inputs in the plane.
    #[test]
    fn hull_membership_against_lp(
        raw in proptest::collection::vec((-3i64..=3, -3i64..=3), 1..6),
        px in -4i64..=4,
        py in -4i64..=4,
    ) {
        let points: Vec<Point> = raw.iter().map(|&(x, y)| Point::from_ints(&[x, y])).collect();
        let p = Point::new(vec![ratio(px, 3), ratio(py, 3)]);
        prop_assert_eq!(point_in_hull(&points, &p).unwrap(), hull_by_lp(&points, &p));
    }
}

/// The combinatorial degree of the winding family equals the geometric
/// winding number of its realization over a triangle.
#[test]
fn degree_matches_winding_oracle_on_circles() {
    let triangle = fixtures::triangle_points();
    let barycenter = Point::new(vec![ratio(1, 3), ratio(1, 3)]);
    for k in -5..=5 {
        let (circle, labeling) = construct_winding_labeling(k);
        let oriented = orient(&circle, 1).unwrap();
        let report = degree_labeling(&oriented, &labeling).unwrap();
        let realization: Vec<Point> = labeling
            .labels
            .iter()
            .map(|&l| triangle[l].clone())
            .collect();
        let winding =
            kkm_core::winding::winding_of_oriented_edges(&oriented, &realization, &barycenter)
                .unwrap();
        assert_eq!(report.value, winding, "k = {k}");
        assert_eq!(report.value, k);
    }
}

/// Random circle labelings: combinatorial degree equals the winding of
/// the realization whenever the barycenter avoids the image.
#[test]
fn degree_matches_winding_oracle_on_random_circles() {
    let triangle = fixtures::triangle_points();
    let barycenter = Point::new(vec![ratio(1, 3), ratio(1, 3)]);
    let mut rng = fuzz::rng(99);
    let mut checked = 0;
    while checked < 40 {
        let n = rng.random_range(3..=12);
        let mut edges: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        edges.push(vec![0, n - 1]);
        let circle = kkm_core::build_complex(&edges).unwrap();
        let labeling = fuzz::random_labeling(&mut rng, n, 2);
        let oriented = orient(&circle, 1).unwrap();
        let realization: Vec<Point> = labeling
            .labels
            .iter()
            .map(|&l| triangle[l].clone())
            .collect();
        let Ok(winding) =
            kkm_core::winding::winding_of_oriented_edges(&oriented, &realization, &barycenter)
        else {
            continue; // degenerate realization through the barycenter
        };
        let report = degree_labeling(&oriented, &labeling).unwrap();
        assert_eq!(report.value, winding);
        checked += 1;
    }
}

/// Sphere degree is constant within a chamber (sampled pairs) and changes
/// only across the image.
#[test]
fn sphere_degree_chamber_locality() {
    let solid = kkm_core::build_complex(&[vec![0, 1, 2, 3]]).unwrap();
    let sphere =
        kkm_core::induced_boundary_orientation(&orient(&solid, 1).unwrap()).unwrap();
    let points = vec![
        Point::from_ints(&[0, 0, 0]),
        Point::from_ints(&[8, 0, 0]),
        Point::from_ints(&[0, 8, 0]),
        Point::from_ints(&[0, 0, 8]),
    ];
    let inside = [
        Point::from_ints(&[1, 1, 1]),
        Point::from_ints(&[2, 2, 2]),
        Point::new(vec![ratio(1, 2), ratio(1, 3), ratio(1, 5)]),
        Point::from_ints(&[5, 1, 1]),
    ];
    for p in &inside {
        assert_eq!(sphere_degree_from_point(&sphere, &points, p).unwrap(), 1);
    }
    let outside = [
        Point::from_ints(&[9, 9, 9]),
        Point::from_ints(&[-1, 0, 0]),
        Point::from_ints(&[-3, 5, 5]),
        Point::from_ints(&[3, 3, 3]),
    ];
    for p in &outside {
        assert_eq!(sphere_degree_from_point(&sphere, &points, p).unwrap(), 0);
    }
}

/// dg2 with P the standard triangle has the parity of the boundary degree
/// on orientable complexes.
#[test]
fn dg2_matches_boundary_degree_parity() {
    let triangle = fixtures::triangle_points();
    for k in -3i64..=3 {
        let (disk, labeling, _) = fixtures::disk_winding_fixture(k).unwrap();
        let parity = dg2(disk.complex(), &labeling, &triangle).unwrap();
        assert_eq!(u64::from(parity), k.unsigned_abs() % 2, "k = {k}");
    }
}

/// The image polyhedron is independent of the partition of unity:
/// evaluations under distinct subordinate weightings stay inside it.
#[test]
fn image_is_weight_independent() {
    let (heptagon, labeling) = fixtures::heptagon();
    let cover = cover_from_labeling(&heptagon, &labeling).unwrap();
    let square = fixtures::unit_square();
    let canonical = PartitionWeights::canonical_from_labeling(&labeling);
    let uniform = PartitionWeights::canonical(&cover).unwrap();
    canonical.validate(&cover).unwrap();
    uniform.validate(&cover).unwrap();
    let pieces = image_polyhedron(&cover, &square).unwrap();
    let in_image = |p: &Point| {
        pieces
            .iter()
            .any(|(_, piece)| point_in_hull(piece, p).unwrap())
    };
    // Dense rational samples on every edge of the heptagon.
    for s in heptagon.all_simplices() {
        if s.dimension() != 1 {
            continue;
        }
        for num in 0..=6i64 {
            let t = ratio(num, 6);
            let x = BaryPoint {
                carrier: s.clone(),
                coords: vec![Rat::one() - &t, t.clone()],
            };
            let a = rho_eval(&cover, &canonical, &square, &x).unwrap();
            let b = rho_eval(&cover, &uniform, &square, &x).unwrap();
            assert!(in_image(&a), "canonical image left the polyhedron at {a}");
            assert!(in_image(&b), "uniform image left the polyhedron at {b}");
        }
    }
}

/// The cover degree does not depend on the collapse choice: the min-index
/// and max-index nerve maps give the same degree (two subordinate
/// partitions of unity).
#[test]
fn cover_degree_is_weight_independent() {
    for k in [-3i64, -1, 1, 2, 4] {
        let (circle, labeling) = construct_winding_labeling(k);
        let oriented = orient(&circle, 1).unwrap();
        let cover = cover_from_labeling(&circle, &labeling).unwrap();
        let min_rule = cover_degree(&cover, &oriented).unwrap().value;
        // Alternate collapse: label each barycenter by the largest
        // eligible index instead of the smallest.
        let (sd, carriers) = barycentric_subdivision_oriented(&oriented, 1).unwrap();
        let labels: Vec<usize> = carriers
            .iter()
            .map(|c| {
                (0..cover.set_count())
                    .filter(|&i| cover.set(i).contains(c))
                    .next_back()
                    .unwrap()
            })
            .collect();
        let max_rule =
            degree_labeling(&sd, &Labeling::new(cover.set_count() - 1, labels).unwrap())
                .unwrap()
                .value;
        assert_eq!(min_rule, max_rule, "k = {k}");
        assert_eq!(min_rule, k);
    }
}

/// The combinatorial cover degree (collapsed simplicial map) agrees with
/// the geometric route (winding of the collapsed realization over a
/// standard simplex around its barycenter), for labeling covers and for
/// closed arc covers.
#[test]
fn cover_degree_routes_agree() {
    let triangle = fixtures::triangle_points();
    let barycenter = Point::new(vec![ratio(1, 3), ratio(1, 3)]);
    for k in [-2i64, 0, 1, 3] {
        let (circle, labeling) = construct_winding_labeling(k);
        let oriented = orient(&circle, 1).unwrap();
        let cover = cover_from_labeling(&circle, &labeling).unwrap();
        let combinatorial = cover_degree(&cover, &oriented).unwrap().value;
        let geometric =
            kkm_core::cover::cover_class_degree(&cover, &oriented, &triangle, &barycenter)
                .unwrap();
        assert_eq!(combinatorial, geometric, "labeling cover k = {k}");
    }
    for t in [1usize, 2, 3] {
        let (circle, cover) = fixtures::cyclic_arc_cover(&[0, 1, 2], 3, t).unwrap();
        let oriented = orient(&circle, 1).unwrap();
        let combinatorial = cover_degree(&cover, &oriented).unwrap().value;
        let geometric =
            kkm_core::cover::cover_class_degree(&cover, &oriented, &triangle, &barycenter)
                .unwrap();
        assert_eq!(combinatorial, geometric, "arc cover t = {t}");
        assert_eq!(combinatorial.unsigned_abs(), 1);
    }
}

/// Nerve of a labeling cover equals the complex of label sets realized by
/// simplices, by brute force.
#[test]
fn nerve_matches_label_sets_brute_force() {
    let mut rng = fuzz::rng(31);
    for _ in 0..25 {
        let complex = fuzz::random_two_complex(&mut rng, 7, 6);
        let m = rng.random_range(2..=4);
        let labeling = fuzz::random_labeling(&mut rng, complex.vertex_count(), m);
        let cover = cover_from_labeling(&complex, &labeling).unwrap();
        let n = nerve(&cover);
        let realized: Vec<Vec<usize>> = complex
            .all_simplices()
            .iter()
            .map(|s| labeling.label_set(s))
            .collect();
        // Check membership of every index subset both ways.
        let indices: Vec<usize> = (0..=m).collect();
        for mask in 1u64..(1 << (m + 1)) {
            let subset: Vec<usize> = indices
                .iter()
                .filter(|&&i| mask & (1 << i) != 0)
                .copied()
                .collect();
            let brute = realized
                .iter()
                .any(|ls| subset.iter().all(|i| ls.contains(i)));
            assert_eq!(n.contains(&subset), brute, "subset {subset:?}");
        }
    }
}

/// Proposition-style equivalence on the heptagon fixture: the
/// combinatorial complement test agrees with the geometric image test.
#[test]
fn complement_matches_geometry_on_heptagon() {
    let (heptagon, labeling) = fixtures::heptagon();
    let cover = cover_from_labeling(&heptagon, &labeling).unwrap();
    let square = fixtures::unit_square();
    let samples = [
        Point::parse(&["3/10", "3/10"]).unwrap(),
        Point::parse(&["1/2", "1/4"]).unwrap(),
        Point::parse(&["7/10", "7/10"]).unwrap(),
        Point::parse(&["1/2", "0"]).unwrap(),
        Point::parse(&["1/2", "1/2"]).unwrap(),
        Point::from_ints(&[5, 5]),
        Point::from_ints(&[0, 0]),
    ];
    for p in &samples {
        let combinatorial = p_in_complement(&cover, &square, p).unwrap().in_complement;
        let geometric = !point_in_image(&cover, &square, p).unwrap();
        assert_eq!(combinatorial, geometric, "p = {p}");
    }
}

/// Pebble certificates re-verified by brute force: no index set of at
/// most d+1 points contains two pebbles.
#[test]
fn pebble_certificates_brute_force() {
    use itertools::Itertools;
    for (points, d) in [
        (fixtures::unit_square(), 2usize),
        (fixtures::hexagon_points(), 2),
    ] {
        let set = pebble_set(&points, d).unwrap();
        assert!(set.pebbles.len() >= set.required);
        for pair in set.pebbles.iter().combinations(2) {
            for size in 1..=d + 1 {
                for subset in (0..points.len()).combinations(size) {
                    let hull: Vec<Point> = subset.iter().map(|&i| points[i].clone()).collect();
                    let both = point_in_hull(&hull, &pair[0].point).unwrap()
                        && point_in_hull(&hull, &pair[1].point).unwrap();
                    assert!(
                        !both,
                        "pebbles {} and {} share simplex {subset:?}",
                        pair[0].point, pair[1].point
                    );
                }
            }
        }
    }
}

/// Minimal-set completeness: a witness over the minimal cov sets exists
/// iff one exists over the whole up-closure.
#[test]
fn minimal_set_completeness() {
    let mut rng = fuzz::rng(57);
    for _ in 0..40 {
        let complex = fuzz::random_two_complex(&mut rng, 7, 6);
        let m = rng.random_range(2..=3);
        let labeling = fuzz::random_labeling(&mut rng, complex.vertex_count(), m);
        let cover = cover_from_labeling(&complex, &labeling).unwrap();
        let denom = *[2i64, 3, 5].choose(&mut rng).unwrap();
        let v: Vec<Point> = (0..=m)
            .map(|_| fuzz::random_point(&mut rng, 2, 3, denom))
            .collect();
        let p = fuzz::random_point(&mut rng, 2, 4, denom);
        let cov = cov_v(&PointConfig::new(v.clone(), p.clone()).unwrap()).unwrap();
        let minimal_hit = cov
            .minimal_sets
            .iter()
            .any(|j| cover.intersection_witness(j).is_some());
        let up_hit = cov
            .up_closure()
            .iter()
            .any(|j| cover.intersection_witness(j).is_some());
        assert_eq!(minimal_hit, up_hit);
    }
}

/// The subdivision top-count invariant on random pure 2-complexes.
#[test]
fn subdivision_count_on_random_complexes() {
    let mut rng = fuzz::rng(8);
    for _ in 0..10 {
        let complex = fuzz::random_two_complex(&mut rng, 7, 5);
        let t = complex.maximal_simplices().count();
        let sd = kkm_core::barycentric_subdivision(&complex, 1);
        assert_eq!(sd.complex.maximal_simplices().count(), t * 6);
    }
}

/// Face closure on random complexes: every subset of a stored simplex is
/// recognized as a simplex.
#[test]
fn face_closure_on_random_complexes() {
    let mut rng = fuzz::rng(12);
    for _ in 0..10 {
        let complex = fuzz::random_two_complex(&mut rng, 8, 6);
        for s in complex.all_simplices() {
            for f in s.all_faces() {
                assert!(complex.contains(&f));
            }
        }
    }
}

/// Degenerate image simplices contribute nothing: a constant labeling of
/// the winding circle yields degree 0 however it is realized.
#[test]
fn degenerate_images_contribute_zero() {
    let (circle, _) = construct_winding_labeling(2);
    let oriented = orient(&circle, 1).unwrap();
    let constant = Labeling::new(2, vec![1; 6]).unwrap();
    assert_eq!(degree_labeling(&oriented, &constant).unwrap().value, 0);
    let square = fixtures::unit_square();
    // All vertices realized at the same point: p off that point sees
    // winding zero.
    let realization: Vec<Point> = vec![square[1].clone(); 6];
    let w = kkm_core::winding::winding_of_oriented_edges(
        &oriented,
        &realization,
        &Point::from_ints(&[7, 7]),
    )
    .unwrap();
    assert_eq!(w, 0);
}

/// rat helper sanity for the oracle file.
#[test]
fn rational_helpers() {
    assert_eq!(rat(3) + rat(4), rat(7));
    assert!(ratio(1, 2) < rat(1));
}
