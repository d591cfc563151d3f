//! Deterministic fixture builders: standard simplices and their boundary
//! spheres, Sperner subdivisions, the heptagon example, winding circles,
//! triangulated disks with a prescribed boundary cycle, polytope vertex
//! sets, and the antipodal arc cover.

use crate::complex::{build_complex, SimplicialComplex};
use crate::cover::{Cover, CoverSemantics};
use crate::degree::boundary_degree;
use crate::error::Result;
use crate::labeling::{Labeling, SpernerContext};
use crate::orientation::{induced_boundary_orientation, orient, OrientedComplex};
use crate::rational::Point;
use crate::simplex::AbstractSimplex;
use crate::subdivision::barycentric_subdivision_oriented;

/// The solid m-simplex on vertices 0..=m.
pub fn standard_simplex(m: usize) -> SimplicialComplex {
    build_complex(&[(0..=m).collect()]).expect("valid simplex")
}

/// The solid m-simplex with positive orientation.
pub fn oriented_solid_simplex(m: usize) -> OrientedComplex {
    orient(&standard_simplex(m), 1).expect("simplex is orientable")
}

/// The boundary sphere of the m-simplex with the induced orientation.
pub fn boundary_sphere(m: usize) -> OrientedComplex {
    induced_boundary_orientation(&oriented_solid_simplex(m)).expect("boundary non-empty")
}

/// An oriented barycentric subdivision of the m-simplex (or of its
/// boundary sphere) together with the Sperner carrier context.
pub fn sperner_fixture(
    m: usize,
    depth: usize,
    of_boundary: bool,
) -> Result<(OrientedComplex, SpernerContext)> {
    let base = if of_boundary {
        boundary_sphere(m)
    } else {
        oriented_solid_simplex(m)
    };
    let (sd, carriers) = barycentric_subdivision_oriented(&base, depth)?;
    Ok((
        sd,
        SpernerContext { m, carriers },
    ))
}

/// The heptagon cycle with the reference labeling 0,1,2,3,2,1,3.
pub fn heptagon() -> (SimplicialComplex, Labeling) {
    let edges: Vec<Vec<usize>> = (0..7).map(|i| vec![i, (i + 1) % 7]).collect();
    (
        build_complex(&edges).expect("cycle"),
        Labeling::new(3, vec![0, 1, 2, 3, 2, 1, 3]).expect("labels in range"),
    )
}

/// The unit square vertices in counterclockwise order.
pub fn unit_square() -> Vec<Point> {
    vec![
        Point::from_ints(&[0, 0]),
        Point::from_ints(&[1, 0]),
        Point::from_ints(&[1, 1]),
        Point::from_ints(&[0, 1]),
    ]
}

/// The image loop of the heptagon labeling over the unit square.
pub fn heptagon_image_loop() -> Vec<Point> {
    let square = unit_square();
    let (_, labeling) = heptagon();
    labeling
        .labels
        .iter()
        .map(|&l| square[l].clone())
        .collect()
}

/// A rational convex hexagon (a rational stand-in for the regular one).
pub fn hexagon_points() -> Vec<Point> {
    vec![
        Point::from_ints(&[2, 0]),
        Point::from_ints(&[1, 2]),
        Point::from_ints(&[-1, 2]),
        Point::from_ints(&[-2, 0]),
        Point::from_ints(&[-1, -2]),
        Point::from_ints(&[1, -2]),
    ]
}

/// The standard triangle in the plane.
pub fn triangle_points() -> Vec<Point> {
    vec![
        Point::from_ints(&[0, 0]),
        Point::from_ints(&[1, 0]),
        Point::from_ints(&[0, 1]),
    ]
}

/// A triangulated disk whose boundary is the cycle 0..b-1: an outer ring,
/// an inner ring on vertices b..2b-1, and a center vertex 2b.
pub fn annulus_disk(b: usize) -> SimplicialComplex {
    assert!(b >= 3, "ring needs at least 3 boundary vertices");
    let center = 2 * b;
    let mut triangles = Vec::with_capacity(3 * b);
    for i in 0..b {
        let j = (i + 1) % b;
        triangles.push(vec![i, j, b + i]);
        triangles.push(vec![j, b + i, b + j]);
        triangles.push(vec![b + i, b + j, center]);
    }
    build_complex(&triangles).expect("disk triangulation")
}

/// The boundary label pattern of the winding-k circle on b = 3 max(|k|,1)
/// vertices.
pub fn winding_boundary_labels(k: i64, b: usize) -> Vec<usize> {
    (0..b)
        .map(|i| {
            if k > 0 {
                i % 3
            } else if k < 0 {
                (3 - i % 3) % 3
            } else {
                [0, 1, 1][i % 3]
            }
        })
        .collect()
}

/// A triangulated disk with its boundary labeled to wind k times, oriented
/// so that the boundary degree of the reference labeling is exactly k.
/// Returns the oriented disk, the reference labeling (interior label 0),
/// and the interior vertex ids.
pub fn disk_winding_fixture(k: i64) -> Result<(OrientedComplex, Labeling, Vec<usize>)> {
    let b = 3 * k.unsigned_abs().max(1) as usize;
    let disk = annulus_disk(b);
    let interior: Vec<usize> = (b..disk.vertex_count()).collect();
    let mut labels = winding_boundary_labels(k, b);
    labels.extend(std::iter::repeat_n(0, interior.len()));
    let labeling = Labeling::new(2, labels)?;
    let oriented = orient(&disk, 1)?;
    let value = boundary_degree(&oriented, &labeling)?.value;
    let oriented = if value == k {
        oriented
    } else {
        debug_assert_eq!(value, -k);
        orient(&disk, -1)?
    };
    Ok((oriented, labeling, interior))
}

/// A circle of `arc_assignment.len() * t` vertices covered by consecutive
/// closed arcs of t edges each, where arc r goes to the set
/// `arc_assignment[r]`. Returns the circle and the closed cover.
pub fn cyclic_arc_cover(
    arc_assignment: &[usize],
    set_count: usize,
    t: usize,
) -> Result<(SimplicialComplex, Cover)> {
    assert!(t >= 1 && arc_assignment.len() * t >= 3);
    let n = arc_assignment.len() * t;
    let mut edges: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
    edges.push(vec![0, n - 1]);
    let circle = build_complex(&edges)?;
    let mut generators: Vec<Vec<AbstractSimplex>> = vec![Vec::new(); set_count];
    for (r, &set) in arc_assignment.iter().enumerate() {
        for s in 0..t {
            let a = r * t + s;
            let b = (a + 1) % n;
            generators[set].push(AbstractSimplex::new(vec![a, b])?);
        }
    }
    let cover = Cover::new(circle.clone(), CoverSemantics::Closed, generators)?;
    Ok((circle, cover))
}

/// A circle of 4t vertices covered by four closed arcs in cyclic order,
/// indexed e_1, e_2, -e_1, -e_2 so that antipodal pairs are (0,2) and
/// (1,3). Returns the circle and the closed cover.
pub fn antipodal_arc_cover(t: usize) -> Result<(SimplicialComplex, Cover)> {
    cyclic_arc_cover(&[0, 1, 2, 3], 4, t)
}

/// The heptagon pattern as a closed arc cover of a circle of 7t vertices:
/// arcs assigned to sets 0,1,2,3,2,1,3 in cyclic order.
pub fn heptagon_arc_cover(t: usize) -> Result<(SimplicialComplex, Cover)> {
    cyclic_arc_cover(&[0, 1, 2, 3, 2, 1, 3], 4, t)
}
