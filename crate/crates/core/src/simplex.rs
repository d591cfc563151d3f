use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An abstract simplex: a non-empty, strictly increasing sequence of vertex
/// identifiers. Dimension is `len() - 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbstractSimplex(Vec<usize>);

impl AbstractSimplex {
    /// Builds a simplex from an arbitrary vertex list, sorting it and
    /// rejecting duplicates and the empty list.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        let raw = vertices.clone();
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(raw));
        }
        Ok(Self(vertices))
    }

    /// Builds a simplex from a list already known to be strictly increasing.
    pub fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self(vertices)
    }

    pub fn vertex(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// True when `self` is a face of `other` (subset of its vertices).
    pub fn is_face_of(&self, other: &AbstractSimplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// The codimension-1 face omitting the vertex at `position`.
    pub fn facet_omitting(&self, position: usize) -> AbstractSimplex {
        let mut v = self.0.clone();
        v.remove(position);
        AbstractSimplex(v)
    }

    /// All codimension-1 faces, paired with the position of the omitted
    /// vertex. Empty for a single vertex.
    pub fn facets(&self) -> Vec<(usize, AbstractSimplex)> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| (i, self.facet_omitting(i)))
            .collect()
    }

    /// Every non-empty subset of the vertices, i.e. all faces including the
    /// simplex itself.
    pub fn all_faces(&self) -> Vec<AbstractSimplex> {
        let n = self.0.len();
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u64..(1u64 << n) {
            let verts: Vec<usize> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.0[i])
                .collect();
            out.push(AbstractSimplex(verts));
        }
        out
    }

    /// Union of the vertex sets of two simplices.
    pub fn union(&self, other: &AbstractSimplex) -> AbstractSimplex {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        AbstractSimplex(v)
    }
}

impl fmt::Debug for AbstractSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for AbstractSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_rejects_duplicates() {
        let s = AbstractSimplex::new(vec![2, 0, 1]).unwrap();
        assert_eq!(s.vertices(), &[0, 1, 2]);
        assert_eq!(s.dimension(), 2);
        assert!(matches!(
            AbstractSimplex::new(vec![1, 1]),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(AbstractSimplex::new(vec![]), Err(Error::EmptySimplex)));
    }

    #[test]
    fn faces_and_facets() {
        let s = AbstractSimplex::new(vec![0, 1, 2]).unwrap();
        let facets: Vec<_> = s.facets().into_iter().map(|(_, f)| f).collect();
        assert_eq!(facets.len(), 3);
        assert!(facets.contains(&AbstractSimplex::from_sorted(vec![1, 2])));
        assert_eq!(s.all_faces().len(), 7);
        assert!(AbstractSimplex::from_sorted(vec![0, 2]).is_face_of(&s));
        assert!(!AbstractSimplex::from_sorted(vec![0, 3]).is_face_of(&s));
    }
}
