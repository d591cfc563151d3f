//! Exact convex-position predicates: convex-combination solving, hull
//! membership via Caratheodory reduction, and interior/boundary location.

// Pivoting kernels read one row while mutating another; index loops are
// the clear form here.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::rational::{sign, Point, Rat};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};

/// Solves `A x = b` exactly by Gaussian elimination. Returns the unique
/// solution, or `None` when the columns are dependent or the system is
/// inconsistent.
pub fn solve_unique(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if cols == 0 {
        return if b.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut rhs: Vec<Rat> = b.to_vec();
    let mut pivot_rows: Vec<usize> = Vec::with_capacity(cols);
    let mut next_row = 0usize;
    for col in 0..cols {
        let Some(p) = (next_row..rows).find(|&r| !m[r][col].is_zero()) else {
            return None; // dependent column
        };
        m.swap(next_row, p);
        rhs.swap(next_row, p);
        let pivot = m[next_row][col].clone();
        for r in next_row + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..cols {
                let delta = &factor * &m[next_row][c];
                m[r][c] -= delta;
            }
            let delta = &factor * &rhs[next_row];
            rhs[r] -= delta;
        }
        pivot_rows.push(next_row);
        next_row += 1;
    }
    // Remaining rows must have been reduced to 0 = 0.
    for r in next_row..rows {
        if !rhs[r].is_zero() {
            return None;
        }
    }
    // Back substitution.
    let mut x = vec![Rat::zero(); cols];
    for col in (0..cols).rev() {
        let r = pivot_rows[col];
        let mut acc = rhs[r].clone();
        for c in col + 1..cols {
            acc -= &m[r][c] * &x[c];
        }
        x[col] = acc / &m[r][col];
    }
    Some(x)
}

/// The rank of a rational matrix.
pub fn matrix_rank(a: &[Vec<Rat>]) -> usize {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..cols {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Number of affinely independent points (affine rank). A set spanning all
/// of R^d has affine rank d+1.
pub fn affine_rank(points: &[Point]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rat>> = points[1..].iter().map(|q| q.sub(&points[0])).collect();
    matrix_rank(&rows) + 1
}

fn check_dims(points: &[Point], p: &Point) -> Result<usize> {
    let d = p.dim();
    for q in points {
        if q.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: q.dim(),
            });
        }
    }
    Ok(d)
}

/// Barycentric-style solve: weights `w >= 0` with sum 1 expressing `p` over
/// the given points, when those points are affinely independent.
pub fn convex_combination(points: &[&Point], p: &Point) -> Option<Vec<Rat>> {
    let d = p.dim();
    let k = points.len();
    // Rows: d coordinate equations plus the affine constraint sum = 1.
    let mut a = vec![vec![Rat::zero(); k]; d + 1];
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
    let x = solve_unique(&a, &b)?;
    if x.iter().all(|w| !w.is_negative()) {
        Some(x)
    } else {
        None
    }
}

/// Exact hull membership: `p` is in `conv(points)` iff some affinely
/// independent subset of at most d+1 points carries a non-negative affine
/// combination equal to `p` (Caratheodory reduction).
pub fn point_in_hull(points: &[Point], p: &Point) -> Result<bool> {
    let d = check_dims(points, p)?;
    let max_size = (d + 1).min(points.len());
    for size in 1..=max_size {
        for subset in points.iter().combinations(size) {
            if convex_combination(&subset, p).is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// A hyperplane `{ x : normal . x = offset }` through `d` points of R^d,
/// when they affinely span one.
pub fn spanned_hyperplane(points: &[&Point]) -> Option<(Vec<Rat>, Rat)> {
    let d = points[0].dim();
    debug_assert_eq!(points.len(), d);
    let rows: Vec<Vec<Rat>> = points[1..].iter().map(|q| q.sub(points[0])).collect();
    // Generalized cross product: cofactors of the difference matrix.
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let det = determinant(&minor);
        normal.push(if j % 2 == 0 { det } else { -det });
    }
    if normal.iter().all(|c| c.is_zero()) {
        return None;
    }
    let offset = dot(&normal, points[0].coords());
    Some((normal, offset))
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    let mut a = m.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Location of a point relative to a convex hull in R^d.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullLocation {
    Outside,
    OnBoundary,
    Interior,
}

/// Exact location of `p` relative to `conv(points)`. When the hull is not
/// full-dimensional every contained point is reported as `OnBoundary`.
pub fn hull_location(points: &[Point], p: &Point) -> Result<HullLocation> {
    let d = check_dims(points, p)?;
    if !point_in_hull(points, p)? {
        return Ok(HullLocation::Outside);
    }
    if affine_rank(points) < d + 1 {
        return Ok(HullLocation::OnBoundary);
    }
    // Full-dimensional hull: p is on the boundary iff it lies on a
    // supporting hyperplane spanned by d of the points.
    for subset in points.iter().combinations(d) {
        let Some((normal, offset)) = spanned_hyperplane(&subset) else {
            continue;
        };
        let mut pos = false;
        let mut neg = false;
        for q in points {
            match sign(&(dot(&normal, q.coords()) - &offset)) {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        if pos && neg {
            continue; // not supporting
        }
        if (dot(&normal, p.coords()) - &offset).is_zero() {
            return Ok(HullLocation::OnBoundary);
        }
    }
    Ok(HullLocation::Interior)
}
