//! The cov_V(p) combinatorics: for a point configuration V and a query
//! point p, the up-closed family of index sets J whose spanned hull
//! contains p, represented by its inclusion-minimal generators.

use crate::error::{Error, Result};
use crate::hull::point_in_hull;
use crate::rational::Point;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// An ordered point set V in d-space together with a query point p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    pub v: Vec<Point>,
    pub p: Point,
}

impl PointConfig {
    pub fn new(v: Vec<Point>, p: Point) -> Result<Self> {
        let d = p.dim();
        for q in &v {
            if q.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: q.dim(),
                });
            }
        }
        Ok(Self { v, p })
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }
}

/// The antichain of inclusion-minimal index sets J with p in conv{v_j}.
/// The full family is its upward closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovFamily {
    /// Number of indices (|V|); members are subsets of 0..index_count.
    pub index_count: usize,
    /// Ambient dimension d; every minimal set has at most d+1 elements.
    pub dim: usize,
    pub minimal_sets: Vec<Vec<usize>>,
}

impl CovFamily {
    pub fn is_empty(&self) -> bool {
        self.minimal_sets.is_empty()
    }

    /// Membership in the upward closure: J is in cov iff it contains a
    /// minimal generator.
    pub fn contains(&self, set: &[usize]) -> bool {
        self.minimal_sets
            .iter()
            .any(|m| m.iter().all(|i| set.contains(i)))
    }

    /// Every member of the upward closure, enumerated explicitly.
    pub fn up_closure(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for size in 1..=self.index_count {
            for subset in (0..self.index_count).combinations(size) {
                if self.contains(&subset) {
                    out.push(subset);
                }
            }
        }
        out
    }

    /// Pebble-set disjointness: no index set of at most d+1 points lies in
    /// both families. Equivalently, the union of any two minimal
    /// generators needs more than d+1 indices.
    pub fn simplex_disjoint(&self, other: &CovFamily) -> bool {
        let cap = self.dim + 1;
        for a in &self.minimal_sets {
            for b in &other.minimal_sets {
                let union = a.iter().chain(b.iter()).unique().count();
                if union <= cap {
                    return false;
                }
            }
        }
        true
    }
}

/// Computes cov_V(p) as its minimal generators. By Caratheodory every
/// minimal generator has at most d+1 indices, so the enumeration stops
/// there. Empty when p lies outside conv(V).
pub fn cov_v(config: &PointConfig) -> Result<CovFamily> {
    let d = config.dim();
    let n = config.v.len();
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for size in 1..=(d + 1).min(n) {
        for subset in (0..n).combinations(size) {
            if minimal
                .iter()
                .any(|m| m.iter().all(|i| subset.contains(i)))
            {
                continue;
            }
            let pts: Vec<Point> = subset.iter().map(|&i| config.v[i].clone()).collect();
            if point_in_hull(&pts, &config.p)? {
                minimal.push(subset);
            }
        }
    }
    Ok(CovFamily {
        index_count: n,
        dim: d,
        minimal_sets: minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ratio, Point};

    fn square_config(p: Point) -> PointConfig {
        PointConfig::new(
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[1, 1]),
                Point::from_ints(&[0, 1]),
            ],
            p,
        )
        .unwrap()
    }

    #[test]
    fn square_center_has_both_diagonals() {
        let cfg = square_config(Point::new(vec![ratio(1, 2), ratio(1, 2)]));
        let cov = cov_v(&cfg).unwrap();
        assert_eq!(cov.minimal_sets, vec![vec![0, 2], vec![1, 3]]);
        // Up-closure: {0,2},{1,3} and all 5 supersets of either.
        assert_eq!(cov.up_closure().len(), 7);
        assert!(cov.contains(&[0, 1, 2]));
        assert!(!cov.contains(&[0, 1]));
    }

    #[test]
    fn point_outside_square_has_empty_family() {
        let cfg = square_config(Point::from_ints(&[5, 5]));
        let cov = cov_v(&cfg).unwrap();
        assert!(cov.is_empty());
        assert!(!cov.contains(&[0, 1, 2, 3]));
    }

    /// Brute force over every non-empty index subset, keeping the
    /// inclusion-minimal ones; the independent oracle for `cov_v`.
    fn cov_brute_force(cfg: &PointConfig) -> Vec<Vec<usize>> {
        let n = cfg.v.len();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for size in 1..=n {
            for subset in (0..n).combinations(size) {
                let pts: Vec<Point> = subset.iter().map(|&i| cfg.v[i].clone()).collect();
                if point_in_hull(&pts, &cfg.p).unwrap() {
                    members.push(subset);
                }
            }
        }
        members
            .iter()
            .filter(|j| {
                !members
                    .iter()
                    .any(|k| k.len() < j.len() && k.iter().all(|i| j.contains(i)))
            })
            .cloned()
            .collect()
    }

    #[test]
    fn chamber_point_matches_brute_force() {
        // Interior of triangle v0 v1 v3, off both diagonals. Such a point
        // also lies in exactly one of the two diagonal-cut triangles, so
        // brute force yields two minimal sets, {0,1,3} among them.
        let cfg = square_config(Point::new(vec![ratio(1, 5), ratio(1, 7)]));
        let cov = cov_v(&cfg).unwrap();
        assert_eq!(cov.minimal_sets, cov_brute_force(&cfg));
        assert_eq!(cov.minimal_sets, vec![vec![0, 1, 2], vec![0, 1, 3]]);
        let cfg2 = square_config(Point::new(vec![ratio(1, 7), ratio(1, 5)]));
        let cov2 = cov_v(&cfg2).unwrap();
        assert_eq!(cov2.minimal_sets, cov_brute_force(&cfg2));
        assert_eq!(cov2.minimal_sets, vec![vec![0, 1, 3], vec![0, 2, 3]]);
    }

    #[test]
    fn vertex_point_is_a_singleton() {
        let cfg = square_config(Point::from_ints(&[1, 0]));
        let cov = cov_v(&cfg).unwrap();
        assert_eq!(cov.minimal_sets, vec![vec![1]]);
    }
}
