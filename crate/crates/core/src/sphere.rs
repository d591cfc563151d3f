//! Degree of a realized oriented surface around a base point in R^3, by
//! exact ray casting with lexicographic symbolic perturbation: the ray
//! direction is (1, eps, eps^2) and every sign test is the lexicographic
//! sign of a quadratic polynomial in eps.

use crate::error::{Error, Result};
use crate::hull::point_in_hull;
use crate::orientation::OrientedComplex;
use crate::rational::{sign, Point, Rat};
use num_traits::Zero;

/// A polynomial c0 + c1*eps + c2*eps^2 with rational coefficients.
#[derive(Clone, Debug)]
struct EpsPoly([Rat; 3]);

impl EpsPoly {
    fn sign_lex(&self) -> i8 {
        for c in &self.0 {
            let s = sign(c);
            if s != 0 {
                return s;
            }
        }
        0
    }

    fn neg(&self) -> EpsPoly {
        EpsPoly([-&self.0[0], -&self.0[1], -&self.0[2]])
    }

    fn sub(&self, other: &EpsPoly) -> EpsPoly {
        EpsPoly([
            &self.0[0] - &other.0[0],
            &self.0[1] - &other.0[1],
            &self.0[2] - &other.0[2],
        ])
    }
}

fn sub3(a: &Point, b: &Point) -> [Rat; 3] {
    [
        a.coord(0) - b.coord(0),
        a.coord(1) - b.coord(1),
        a.coord(2) - b.coord(2),
    ]
}

fn cross3(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot3(a: &[Rat; 3], b: &[Rat; 3]) -> Rat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// d_eps . v for d_eps = (1, eps, eps^2).
fn ray_dot(v: &[Rat; 3]) -> EpsPoly {
    EpsPoly([v[0].clone(), v[1].clone(), v[2].clone()])
}

/// Degree of the radial projection from `p` of the realized oriented
/// surface: the signed count of triangle crossings of the symbolically
/// perturbed ray from `p`.
///
/// Degenerate image triangles contribute nothing. Errors when `p` lies on
/// the image of any (possibly degenerate) triangle.
pub fn sphere_degree_from_point(
    oriented: &OrientedComplex,
    realization: &[Point],
    p: &Point,
) -> Result<i64> {
    if oriented.dimension() != 2 {
        return Err(Error::UnsupportedDimension(oriented.dimension()));
    }
    if p.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: p.dim(),
        });
    }
    for v in oriented.complex().vertex_set() {
        if v >= realization.len() {
            return Err(Error::VertexOutOfRange {
                id: v,
                count: realization.len(),
            });
        }
        if realization[v].dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                got: realization[v].dim(),
            });
        }
    }
    let mut degree = 0i64;
    for (s, g) in oriented.signs() {
        let vs = s.vertices();
        let (a, b, c) = (
            &realization[vs[0]],
            &realization[vs[1]],
            &realization[vs[2]],
        );
        let image = [a.clone(), b.clone(), c.clone()];
        if point_in_hull(&image, p)? {
            return Err(Error::PointOnImage);
        }
        let ab = sub3(b, a);
        let ac = sub3(c, a);
        let normal = cross3(&ab, &ac);
        if normal.iter().all(|x| x.is_zero()) {
            continue; // degenerate image
        }
        let pa = sub3(p, a);
        let height = dot3(&normal, &pa);
        if height.is_zero() {
            // p lies in the triangle's plane but not on the triangle: the
            // perturbed ray leaves the plane immediately, no crossing.
            continue;
        }
        // Solve [b-a | c-a | -d_eps] (beta, gamma, t)^T = p - a by Cramer.
        let det = ray_dot(&normal).neg();
        let det_beta = ray_dot(&cross3(&pa, &ac)).neg();
        let det_gamma = ray_dot(&cross3(&ab, &pa)).neg();
        let det_sum = det.sub(&det_beta).sub(&det_gamma);
        let sd = det.sign_lex();
        debug_assert_ne!(sd, 0);
        let crossing = sign(&height) * sd > 0          // t > 0
            && det_beta.sign_lex() * sd > 0            // beta > 0
            && det_gamma.sign_lex() * sd > 0           // gamma > 0
            && det_sum.sign_lex() * sd > 0; // beta + gamma < 1
        if crossing {
            degree += i64::from(g) * i64::from(ray_dot(&normal).sign_lex());
        }
    }
    Ok(degree)
}
