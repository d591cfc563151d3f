//! Pebble sets: interior points of a polytope that pairwise share no
//! vertex-spanned simplex. Built from the arrangement of all hyperplanes
//! spanned by d-subsets of the vertex set: one rational representative per
//! full-dimensional cell inside the hull, a cov family per representative,
//! then a maximum pairwise-disjoint subfamily (greedy with an exact
//! fallback). Every returned set is certified; a set below the m-d bound
//! is reported as a failure.
//!
//! For d = 2 the cell enumeration is complete (every bounded cell has an
//! arrangement vertex, and all sectors around every vertex are sampled).
//! For d = 3 the candidate generation is heuristic but the certification
//! is exact.

use crate::error::{Error, Result};
use crate::geometry::{cov_v, CovFamily, PointConfig};
use crate::hull::{dot, hull_location, solve_unique, spanned_hyperplane, HullLocation};
use crate::rational::{rat, sign, Point, Rat};
use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pebble {
    pub point: Point,
    pub cov: CovFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PebbleSet {
    pub pebbles: Vec<Pebble>,
    pub required: usize,
}

/// A hyperplane in canonical form: coefficients scaled so the first
/// non-zero normal entry is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Hyperplane {
    normal: Vec<Rat>,
    offset: Rat,
}

impl Hyperplane {
    fn canonical(normal: Vec<Rat>, offset: Rat) -> Self {
        let lead = normal
            .iter()
            .find(|c| !c.is_zero())
            .expect("non-zero normal")
            .clone();
        Self {
            normal: normal.iter().map(|c| c / &lead).collect(),
            offset: offset / &lead,
        }
    }

    fn eval(&self, p: &Point) -> Rat {
        dot(&self.normal, p.coords()) - &self.offset
    }

    fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }
}

/// All distinct hyperplanes spanned by d-subsets of the vertex set.
fn spanned_arrangement(points: &[Point], d: usize) -> Vec<Hyperplane> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for subset in points.iter().combinations(d) {
        if let Some((normal, offset)) = spanned_hyperplane(&subset) {
            let h = Hyperplane::canonical(normal, offset);
            if seen.insert((h.normal.clone(), h.offset.clone())) {
                out.push(h);
            }
        }
    }
    out
}

/// Intersection points of hyperplane d-tuples (the arrangement vertices).
fn arrangement_vertices(planes: &[Hyperplane], d: usize) -> Vec<Point> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for subset in (0..planes.len()).combinations(d) {
        let a: Vec<Vec<Rat>> = subset.iter().map(|&i| planes[i].normal.clone()).collect();
        let b: Vec<Rat> = subset.iter().map(|&i| planes[i].offset.clone()).collect();
        if let Some(x) = solve_unique(&a, &b) {
            let p = Point::new(x);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    out
}

/// Exact angular order on non-zero 2-vectors.
fn angle_cmp(a: &[Rat; 2], b: &[Rat; 2]) -> std::cmp::Ordering {
    let half = |v: &[Rat; 2]| -> u8 {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a[0] * &b[1] - &a[1] * &b[0];
        match sign(&cross) {
            1 => std::cmp::Ordering::Less,
            -1 => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        }
    })
}

fn canonical_direction(v: [Rat; 2]) -> [Rat; 2] {
    let lead = if !v[0].is_zero() { v[0].abs() } else { v[1].abs() };
    [&v[0] / &lead, &v[1] / &lead]
}

/// Steps from an arrangement vertex into each incident open sector; the
/// step length is half the distance to the nearest hyperplane ahead.
fn sector_candidates_2d(x: &Point, planes: &[Hyperplane]) -> Vec<Point> {
    let through: Vec<&Hyperplane> = planes.iter().filter(|h| h.contains(x)).collect();
    let mut dirs: Vec<[Rat; 2]> = Vec::new();
    for h in &through {
        let d = [h.normal[1].clone(), -h.normal[0].clone()];
        dirs.push(canonical_direction(d.clone()));
        dirs.push(canonical_direction([-d[0].clone(), -d[1].clone()]));
        // Normal directions handle the single-line case and add coverage.
        dirs.push(canonical_direction([h.normal[0].clone(), h.normal[1].clone()]));
        dirs.push(canonical_direction([-h.normal[0].clone(), -h.normal[1].clone()]));
    }
    dirs.sort_by(angle_cmp);
    dirs.dedup();
    let n = dirs.len();
    let mut candidates = Vec::new();
    for i in 0..n {
        let a = &dirs[i];
        let b = &dirs[(i + 1) % n];
        // A positive combination lies strictly inside the sector whenever
        // the sector angle is below pi; with normals included it always is.
        let u = [&a[0] + &b[0], &a[1] + &b[1]];
        if u[0].is_zero() && u[1].is_zero() {
            continue;
        }
        let mut step: Option<Rat> = None;
        let mut blocked = false;
        for h in planes {
            let denom = dot(&h.normal, &u);
            let val = h.eval(x);
            if denom.is_zero() {
                if val.is_zero() {
                    // The direction runs inside a hyperplane through x.
                    blocked = true;
                    break;
                }
                continue;
            }
            let t = -val / denom;
            if t.is_positive() {
                step = Some(match step {
                    Some(s) => s.min(t),
                    None => t,
                });
            }
        }
        if blocked {
            continue;
        }
        let delta = step.map_or_else(|| rat(1), |s| s / rat(2));
        candidates.push(Point::new(vec![
            x.coord(0) + &u[0] * &delta,
            x.coord(1) + &u[1] * &delta,
        ]));
    }
    candidates
}

/// Heuristic cell representatives around a 3d arrangement vertex: steps
/// along signed combinations of the normals of the planes through it.
fn sector_candidates_3d(x: &Point, planes: &[Hyperplane]) -> Vec<Point> {
    let through: Vec<&Hyperplane> = planes.iter().filter(|h| h.contains(x)).collect();
    let mut dirs: Vec<Vec<Rat>> = Vec::new();
    for h in &through {
        dirs.push(h.normal.clone());
        dirs.push(h.normal.iter().map(|c| -c).collect());
    }
    let singles = dirs.clone();
    for pair in singles.iter().combinations(2) {
        dirs.push((0..3).map(|i| &pair[0][i] + &pair[1][i]).collect());
    }
    let mut candidates = Vec::new();
    for u in dirs {
        if u.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut step: Option<Rat> = None;
        let mut blocked = false;
        for h in planes {
            let denom = dot(&h.normal, &u);
            let val = h.eval(x);
            if denom.is_zero() {
                if val.is_zero() {
                    // The direction runs inside a hyperplane through x.
                    blocked = true;
                    break;
                }
                continue;
            }
            let t = -val / denom;
            if t.is_positive() {
                step = Some(match step {
                    Some(s) => s.min(t),
                    None => t,
                });
            }
        }
        if blocked {
            continue;
        }
        let delta = step.map_or_else(|| rat(1), |s| s / rat(2));
        candidates.push(Point::new(
            (0..3).map(|i| x.coord(i) + &u[i] * &delta).collect(),
        ));
    }
    candidates
}

/// Constructs a certified pebble set for the polytope spanned by `points`
/// in dimension d of {2, 3}: at least |points| - d interior points whose
/// cov families are pairwise simplex-disjoint. Fails with
/// `PebbleSearchIncomplete` when the search cannot certify the bound.
pub fn pebble_set(points: &[Point], d: usize) -> Result<PebbleSet> {
    if !(d == 2 || d == 3) {
        return Err(Error::UnsupportedDimension(d));
    }
    crate::polytope::require_full_dimensional(points)?;
    if points[0].dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: points[0].dim(),
        });
    }
    let required = points.len().saturating_sub(d);
    let planes = spanned_arrangement(points, d);
    let vertices = arrangement_vertices(&planes, d);
    let mut candidates: Vec<Point> = Vec::new();
    for x in &vertices {
        if d == 2 {
            candidates.extend(sector_candidates_2d(x, &planes));
        } else {
            candidates.extend(sector_candidates_3d(x, &planes));
        }
    }
    if d == 3 {
        // Barycenters of spanning 4-subsets and midpoints of vertex pairs.
        for subset in points.iter().combinations(4) {
            let pts: Vec<Point> = subset.into_iter().cloned().collect();
            candidates.push(Point::centroid(&pts));
        }
        for pair in vertices.iter().combinations(2) {
            candidates.push(Point::centroid(&[pair[0].clone(), pair[1].clone()]));
        }
    }
    // Keep one representative per full-dimensional cell inside the hull.
    let mut cells: BTreeMap<Vec<i8>, Point> = BTreeMap::new();
    for c in candidates {
        let signature: Vec<i8> = planes.iter().map(|h| sign(&h.eval(&c))).collect();
        if signature.contains(&0) {
            continue; // on a hyperplane: not a cell interior
        }
        if hull_location(points, &c)? != HullLocation::Interior {
            continue;
        }
        cells.entry(signature).or_insert(c);
    }
    // One representative per distinct cov family.
    let mut families: Vec<Pebble> = Vec::new();
    for (_, point) in cells {
        let cov = cov_v(&PointConfig::new(points.to_vec(), point.clone())?)?;
        if families.iter().any(|p| p.cov == cov) {
            continue;
        }
        families.push(Pebble { point, cov });
    }
    // Greedy selection in deterministic order.
    let mut selected: Vec<usize> = Vec::new();
    for (i, pebble) in families.iter().enumerate() {
        if selected
            .iter()
            .all(|&j| pebble.cov.simplex_disjoint(&families[j].cov))
        {
            selected.push(i);
        }
    }
    if selected.len() < required {
        selected = exact_independent_set(&families, required)
            .ok_or(Error::PebbleSearchIncomplete {
                found: selected.len(),
                required,
            })?;
    }
    let pebbles: Vec<Pebble> = selected.into_iter().map(|i| families[i].clone()).collect();
    // Certification: pairwise disjointness is re-verified on the result.
    for pair in pebbles.iter().combinations(2) {
        assert!(pair[0].cov.simplex_disjoint(&pair[1].cov));
    }
    if pebbles.len() < required {
        return Err(Error::PebbleSearchIncomplete {
            found: pebbles.len(),
            required,
        });
    }
    Ok(PebbleSet { pebbles, required })
}

/// Depth-first search for an independent set of the target size in the
/// cov-disjointness graph.
fn exact_independent_set(families: &[Pebble], target: usize) -> Option<Vec<usize>> {
    fn dfs(
        families: &[Pebble],
        target: usize,
        start: usize,
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if chosen.len() == target {
            return Some(chosen.clone());
        }
        if chosen.len() + (families.len() - start) < target {
            return None;
        }
        for i in start..families.len() {
            if chosen
                .iter()
                .all(|&j| families[i].cov.simplex_disjoint(&families[j].cov))
            {
                chosen.push(i);
                if let Some(found) = dfs(families, target, i + 1, chosen) {
                    return Some(found);
                }
                chosen.pop();
            }
        }
        None
    }
    dfs(families, target, 0, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_needs_one_pebble() {
        let tri = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[4, 0]),
            Point::from_ints(&[0, 4]),
        ];
        let set = pebble_set(&tri, 2).unwrap();
        assert_eq!(set.required, 1);
        assert!(set.pebbles.len() >= 1);
        assert_eq!(
            hull_location(&tri, &set.pebbles[0].point).unwrap(),
            HullLocation::Interior
        );
    }

    #[test]
    fn square_needs_two_pebbles() {
        let square = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[2, 2]),
            Point::from_ints(&[0, 2]),
        ];
        let set = pebble_set(&square, 2).unwrap();
        assert_eq!(set.required, 2);
        assert!(set.pebbles.len() >= 2);
        // Pebbles live in distinct diagonal-cut chambers: their minimal cov
        // triangles share nothing.
        for pair in set.pebbles.iter().combinations(2) {
            assert!(pair[0].cov.simplex_disjoint(&pair[1].cov));
        }
    }

    #[test]
    fn hexagon_needs_four_pebbles() {
        let hexagon = vec![
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[1, 2]),
            Point::from_ints(&[-1, 2]),
            Point::from_ints(&[-2, 0]),
            Point::from_ints(&[-1, -2]),
            Point::from_ints(&[1, -2]),
        ];
        let set = pebble_set(&hexagon, 2).unwrap();
        assert_eq!(set.required, 4);
        assert!(set.pebbles.len() >= 4);
    }

    #[test]
    fn tetrahedron_needs_one_pebble() {
        let tetra = vec![
            Point::from_ints(&[0, 0, 0]),
            Point::from_ints(&[4, 0, 0]),
            Point::from_ints(&[0, 4, 0]),
            Point::from_ints(&[0, 0, 4]),
        ];
        let set = pebble_set(&tetra, 3).unwrap();
        assert_eq!(set.required, 1);
        assert!(!set.pebbles.is_empty());
    }

    #[test]
    fn five_points_in_3d() {
        // A triangular bipyramid: 5 vertices, bound 2.
        let points = vec![
            Point::from_ints(&[2, 0, 0]),
            Point::from_ints(&[-1, 2, 0]),
            Point::from_ints(&[-1, -2, 0]),
            Point::from_ints(&[0, 0, 3]),
            Point::from_ints(&[0, 0, -3]),
        ];
        let set = pebble_set(&points, 3).unwrap();
        assert_eq!(set.required, 2);
        assert!(set.pebbles.len() >= 2);
    }

    #[test]
    fn unsupported_dimension_rejected() {
        let pts = vec![Point::from_ints(&[0]), Point::from_ints(&[1])];
        assert!(matches!(pebble_set(&pts, 1), Err(Error::UnsupportedDimension(1))));
    }
}
