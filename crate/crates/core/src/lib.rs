//! Combinatorial homotopy invariants of labelings and covers of finite
//! simplicial complexes: simplicial degrees, winding numbers and sphere
//! degrees over exact rational arithmetic, the cov_V(p) family, nerves,
//! pebble sets, and verifiers for KKM- and Sperner-type theorems.

pub mod complex;
pub mod cover;
pub mod degree;
pub mod error;
pub mod fixtures;
pub mod fuzz;
pub mod geometry;
pub mod hull;
pub mod io;
pub mod labeling;
pub mod orientation;
pub mod pebble;
pub mod polytope;
pub mod rational;
pub mod simplex;
pub mod sphere;
pub mod subdivision;
pub mod theorems;
pub mod winding;

pub use complex::{bloch_boundary, build_complex, manifold_boundary, BoundaryComplex, SimplicialComplex};
pub use error::{Error, Result};
pub use serde;
pub use orientation::{induced_boundary_orientation, orient, OrientedComplex};
pub use rational::{Point, Rat};
pub use simplex::AbstractSimplex;
pub use subdivision::{barycentric_subdivision, barycentric_subdivision_oriented, Subdivision};

pub(crate) mod util {
    /// Parity sign of the permutation sorting `values` ascending; also the
    /// permutation sign of an image sequence of 0..n. Values must be
    /// distinct.
    pub fn sign_by_inversions<T: Ord>(values: &[T]) -> i8 {
        let mut inversions = 0usize;
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                if values[i] > values[j] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}
