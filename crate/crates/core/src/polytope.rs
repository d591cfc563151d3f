//! Polytope-side machinery for the labeling map into a convex polytope P:
//! checking that boundary images land in a proper face of P, finding a
//! generic point on a facet, and the mod-2 boundary degree dg2.

use crate::complex::{bloch_boundary, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hull::{affine_rank, dot, hull_location, point_in_hull, spanned_hyperplane, HullLocation};
use crate::labeling::{f_lp_image, Labeling};
use crate::rational::{rat, ratio, sign, Point, Rat};
use crate::simplex::AbstractSimplex;
use itertools::Itertools;
use num_traits::Zero;

/// Checks that a polytope vertex list spans all of R^d.
pub fn require_full_dimensional(p_vertices: &[Point]) -> Result<usize> {
    if p_vertices.is_empty() {
        return Err(Error::DegeneratePolytope(0));
    }
    let d = p_vertices[0].dim();
    for q in p_vertices {
        if q.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: q.dim(),
            });
        }
    }
    if affine_rank(p_vertices) != d + 1 {
        return Err(Error::DegeneratePolytope(d));
    }
    Ok(d)
}

/// True iff the given polytope vertices lie in a common proper face of
/// conv(P): their centroid is not interior. For a convex polytope the
/// relative interior of any vertex subset's hull meets the interior as
/// soon as the subset is not confined to a face.
pub fn vertices_in_common_proper_face(p_vertices: &[Point], subset: &[Point]) -> Result<bool> {
    let centroid = Point::centroid(subset);
    Ok(hull_location(p_vertices, &centroid)? != HullLocation::Interior)
}

/// Checks f_{L,P}(|B|) within the boundary of P: every listed simplex's
/// label points must lie in a common proper face.
pub fn boundary_maps_into_polytope_boundary(
    faces: &[AbstractSimplex],
    labeling: &Labeling,
    p_vertices: &[Point],
) -> Result<()> {
    for f in faces {
        let image = f_lp_image(f, labeling, p_vertices)?;
        if !vertices_in_common_proper_face(p_vertices, &image)? {
            return Err(Error::BoundaryImageNotInPolytopeBoundary(f.clone()));
        }
    }
    Ok(())
}

/// A facet of conv(P): its supporting hyperplane and the vertices on it.
pub struct Facet {
    pub normal: Vec<Rat>,
    pub offset: Rat,
    pub vertex_indices: Vec<usize>,
    /// Coordinate axis dropped when projecting the facet hyperplane.
    pub drop_axis: usize,
}

impl Facet {
    /// Affine-injective projection of a point of the facet hyperplane to
    /// R^{d-1} by dropping the axis with non-zero normal component.
    pub fn project(&self, p: &Point) -> Point {
        Point::new(
            p.coords()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != self.drop_axis)
                .map(|(_, c)| c.clone())
                .collect(),
        )
    }

    pub fn contains(&self, p: &Point) -> bool {
        (dot(&self.normal, p.coords()) - &self.offset).is_zero()
    }
}

/// The first facet of conv(P) in the deterministic subset order: a
/// hyperplane spanned by d vertices supporting the whole vertex set.
pub fn first_facet(p_vertices: &[Point]) -> Result<Facet> {
    let d = require_full_dimensional(p_vertices)?;
    for subset in (0..p_vertices.len()).combinations(d) {
        let pts: Vec<&Point> = subset.iter().map(|&i| &p_vertices[i]).collect();
        let Some((normal, offset)) = spanned_hyperplane(&pts) else {
            continue;
        };
        let mut pos = false;
        let mut neg = false;
        for q in p_vertices {
            match sign(&(dot(&normal, q.coords()) - &offset)) {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        if pos && neg {
            continue;
        }
        let vertex_indices: Vec<usize> = (0..p_vertices.len())
            .filter(|&i| (dot(&normal, p_vertices[i].coords()) - &offset).is_zero())
            .collect();
        let drop_axis = normal
            .iter()
            .position(|c| !c.is_zero())
            .expect("non-zero normal");
        return Ok(Facet {
            normal,
            offset,
            vertex_indices,
            drop_axis,
        });
    }
    Err(Error::DegeneratePolytope(d))
}

/// Deterministic search for a point in the relative interior of the facet
/// polygon (given projected to R^{d-1}) passing the genericity predicate.
fn generic_point_in(
    polygon: &[Point],
    mut is_generic: impl FnMut(&Point) -> Result<bool>,
) -> Result<Point> {
    let centroid = Point::centroid(polygon);
    let mut candidates: Vec<Point> = vec![centroid.clone()];
    // Walk from the centroid toward each vertex and pairwise midpoints.
    for q in polygon {
        for k in 1..8u32 {
            let t = ratio(1, 1 << k);
            let step = q.sub(&centroid);
            candidates.push(centroid.add(&Point::new(step).scale(&t)));
        }
    }
    for pair in polygon.iter().combinations(2) {
        let mid = Point::centroid(&[pair[0].clone(), pair[1].clone()]);
        for k in 2..6u32 {
            let t = ratio(1, 1 << k);
            let step = mid.sub(&centroid);
            candidates.push(centroid.add(&Point::new(step).scale(&t)));
        }
    }
    // Deterministic rational mixtures as a last resort.
    let mut a = 17i64;
    for _ in 0..64 {
        let mut weights: Vec<Rat> = Vec::with_capacity(polygon.len());
        let mut total = Rat::zero();
        for _ in 0..polygon.len() {
            a = (a * 131 + 7) % 1009;
            let w = rat(a + 1);
            total += &w;
            weights.push(w);
        }
        let weights: Vec<Rat> = weights.into_iter().map(|w| w / &total).collect();
        candidates.push(Point::combine(polygon, &weights));
    }
    let mut tried = 0usize;
    for c in candidates {
        tried += 1;
        if hull_location(polygon, &c)? == HullLocation::Interior && is_generic(&c)? {
            return Ok(c);
        }
    }
    Err(Error::GenericPointSearchFailed(tried))
}

/// The mod-2 degree dg2(L, Bd K): the parity of the number of Bloch
/// boundary (d-1)-simplices whose image contains a generic point of a
/// facet of the polytope boundary.
///
/// Preconditions checked exactly: every Bloch boundary simplex maps into a
/// common proper face of P. An empty Bloch boundary has parity 0.
pub fn dg2(complex: &SimplicialComplex, labeling: &Labeling, p_vertices: &[Point]) -> Result<u8> {
    let d = require_full_dimensional(p_vertices)?;
    if complex.dimension() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: complex.dimension(),
        });
    }
    labeling.check_covers(complex)?;
    let boundary = bloch_boundary(complex)?;
    let faces: Vec<AbstractSimplex> = boundary.faces.iter().cloned().collect();
    boundary_maps_into_polytope_boundary(&faces, labeling, p_vertices)?;
    if faces.is_empty() {
        return Ok(0);
    }
    let facet = first_facet(p_vertices)?;
    // Only images lying in this facet's hyperplane can meet the relative
    // interior of the facet; project the whole problem to R^{d-1}.
    let polygon: Vec<Point> = facet
        .vertex_indices
        .iter()
        .map(|&i| facet.project(&p_vertices[i]))
        .collect();
    let mut in_plane_images: Vec<Vec<Point>> = Vec::new();
    for f in &faces {
        let image = f_lp_image(f, labeling, p_vertices)?;
        if image.iter().all(|q| facet.contains(q)) {
            in_plane_images.push(image.iter().map(|q| facet.project(q)).collect());
        }
    }
    let full_rank = d; // affine rank of a non-degenerate (d-1)-simplex image
    let y = generic_point_in(&polygon, |y| {
        for image in &in_plane_images {
            let loc = hull_location(image, y)?;
            if loc == HullLocation::OnBoundary {
                return Ok(false);
            }
            if loc == HullLocation::Interior && affine_rank(image) != full_rank {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    let mut count = 0usize;
    for image in &in_plane_images {
        if point_in_hull(image, &y)? {
            count += 1;
        }
    }
    Ok((count % 2) as u8)
}
