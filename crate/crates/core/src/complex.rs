use crate::error::{Error, Result};
use crate::simplex::AbstractSimplex;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A finite abstract simplicial complex stored by its maximal simplices.
///
/// Invariants maintained by construction: no maximal simplex is a face of
/// another, and every vertex id below `vertex_count` occurs in some simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    maximal: BTreeSet<AbstractSimplex>,
    dimension: usize,
    vertex_count: usize,
}

/// The (d-1)-faces singled out by a boundary operation, together with the
/// number of top simplices each one lies in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryComplex {
    pub faces: BTreeSet<AbstractSimplex>,
    pub parity: BTreeMap<AbstractSimplex, usize>,
}

impl BoundaryComplex {
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// The boundary faces with their face closure, as a complex.
    pub fn as_complex(&self) -> Option<SimplicialComplex> {
        if self.faces.is_empty() {
            return None;
        }
        Some(SimplicialComplex::from_maximal_unchecked(
            self.faces.iter().cloned().collect(),
        ))
    }
}

/// Builds a canonical complex from a set of generating vertex lists.
///
/// Lists are sorted, duplicate vertices rejected, and generators that are
/// faces of other generators dropped. Vertex ids must form a contiguous
/// range starting at 0.
pub fn build_complex(maximal: &[Vec<usize>]) -> Result<SimplicialComplex> {
    let mut simplices = Vec::with_capacity(maximal.len());
    for list in maximal {
        simplices.push(AbstractSimplex::new(list.clone())?);
    }
    SimplicialComplex::from_generators(simplices)
}

impl SimplicialComplex {
    pub fn from_generators(generators: Vec<AbstractSimplex>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput("complex has no simplices".into()));
        }
        let mut maximal: BTreeSet<AbstractSimplex> = BTreeSet::new();
        'outer: for s in generators {
            if maximal.iter().any(|t| s.is_face_of(t)) {
                continue 'outer;
            }
            maximal.retain(|t| !t.is_face_of(&s));
            maximal.insert(s);
        }
        let mut used: BTreeSet<usize> = BTreeSet::new();
        for s in &maximal {
            used.extend(s.vertices().iter().copied());
        }
        let vertex_count = used.iter().next_back().unwrap() + 1;
        for v in 0..vertex_count {
            if !used.contains(&v) {
                return Err(Error::UnusedVertex(v));
            }
        }
        let dimension = maximal.iter().map(|s| s.dimension()).max().unwrap();
        Ok(Self {
            maximal,
            dimension,
            vertex_count,
        })
    }

    /// Internal constructor for simplex sets already known to be valid
    /// (gaps in vertex ids allowed for derived complexes like boundaries).
    pub(crate) fn from_maximal_unchecked(generators: Vec<AbstractSimplex>) -> Self {
        let mut maximal: BTreeSet<AbstractSimplex> = BTreeSet::new();
        for s in generators {
            if maximal.iter().any(|t| s.is_face_of(t)) {
                continue;
            }
            maximal.retain(|t| !t.is_face_of(&s));
            maximal.insert(s);
        }
        let vertex_count = maximal
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .max()
            .map_or(0, |m| m + 1);
        let dimension = maximal.iter().map(|s| s.dimension()).max().unwrap_or(0);
        Self {
            maximal,
            dimension,
            vertex_count,
        }
    }

    pub fn maximal_simplices(&self) -> impl Iterator<Item = &AbstractSimplex> {
        self.maximal.iter()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Vertex ids that actually occur (contiguous for built complexes, may
    /// have gaps for derived subcomplexes).
    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.maximal
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .collect()
    }

    /// Face closure: every face of every maximal simplex.
    pub fn all_simplices(&self) -> BTreeSet<AbstractSimplex> {
        let mut out = BTreeSet::new();
        for s in &self.maximal {
            out.extend(s.all_faces());
        }
        out
    }

    /// Membership in the face closure.
    pub fn contains(&self, s: &AbstractSimplex) -> bool {
        self.maximal.iter().any(|t| s.is_face_of(t))
    }

    pub fn is_pure(&self) -> bool {
        self.maximal.iter().all(|s| s.dimension() == self.dimension)
    }

    fn require_pure(&self) -> Result<()> {
        for s in &self.maximal {
            if s.dimension() != self.dimension {
                return Err(Error::NotPure {
                    expected: self.dimension,
                    found: s.dimension(),
                    simplex: s.clone(),
                });
            }
        }
        Ok(())
    }

    /// Incidence counts of every (d-1)-face over the top simplices.
    pub fn facet_incidence(&self) -> Result<BTreeMap<AbstractSimplex, usize>> {
        self.require_pure()?;
        let mut counts: BTreeMap<AbstractSimplex, usize> = BTreeMap::new();
        if self.dimension == 0 {
            return Ok(counts);
        }
        for s in &self.maximal {
            for (_, f) in s.facets() {
                *counts.entry(f).or_insert(0) += 1;
            }
        }
        Ok(counts)
    }

    /// Top simplices grouped by the vertices they contain.
    pub fn tops_containing_vertex(&self) -> BTreeMap<usize, Vec<&AbstractSimplex>> {
        let mut map: BTreeMap<usize, Vec<&AbstractSimplex>> = BTreeMap::new();
        for s in &self.maximal {
            for &v in s.vertices() {
                map.entry(v).or_default().push(s);
            }
        }
        map
    }
}

/// The (d-1)-faces contained in exactly one d-simplex.
pub fn manifold_boundary(complex: &SimplicialComplex) -> Result<BoundaryComplex> {
    let counts = complex.facet_incidence()?;
    let faces: BTreeSet<AbstractSimplex> = counts
        .iter()
        .filter(|&(_, &c)| c == 1)
        .map(|(f, _)| f.clone())
        .collect();
    let parity = counts
        .into_iter()
        .filter(|(f, _)| faces.contains(f))
        .collect();
    Ok(BoundaryComplex { faces, parity })
}

/// Bloch's boundary: the (d-1)-faces contained in an odd number of
/// d-simplices.
pub fn bloch_boundary(complex: &SimplicialComplex) -> Result<BoundaryComplex> {
    let counts = complex.facet_incidence()?;
    let faces: BTreeSet<AbstractSimplex> = counts
        .iter()
        .filter(|&(_, &c)| c % 2 == 1)
        .map(|(f, _)| f.clone())
        .collect();
    let parity = counts
        .into_iter()
        .filter(|(f, _)| faces.contains(f))
        .collect();
    Ok(BoundaryComplex { faces, parity })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(v: &[usize]) -> AbstractSimplex {
        AbstractSimplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn closure_of_one_triangle() {
        let k = build_complex(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(k.dimension(), 2);
        assert_eq!(k.vertex_count(), 3);
        let all = k.all_simplices();
        assert_eq!(all.len(), 7); // 1 triangle + 3 edges + 3 vertices
        assert_eq!(all.iter().filter(|s| s.dimension() == 1).count(), 3);
    }

    #[test]
    fn hollow_triangle() {
        let k = build_complex(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(k.dimension(), 1);
        assert_eq!(k.maximal_simplices().count(), 3);
    }

    #[test]
    fn face_absorption() {
        let k = build_complex(&[vec![0, 1, 2], vec![0, 1]]).unwrap();
        assert_eq!(k.maximal_simplices().count(), 1);
        assert!(k.contains(&simplex(&[0, 1])));
    }

    #[test]
    fn duplicate_vertex_rejected() {
        assert!(matches!(
            build_complex(&[vec![0, 0, 1]]),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn gap_in_vertex_ids_rejected() {
        assert!(matches!(
            build_complex(&[vec![0, 2]]),
            Err(Error::UnusedVertex(1))
        ));
    }

    #[test]
    fn boundary_of_single_triangle() {
        let k = build_complex(&[vec![0, 1, 2]]).unwrap();
        let b = manifold_boundary(&k).unwrap();
        assert_eq!(b.faces.len(), 3);
    }

    #[test]
    fn boundary_of_tetrahedron_surface_is_empty() {
        let k = build_complex(&[
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ])
        .unwrap();
        let b = manifold_boundary(&k).unwrap();
        assert!(b.is_empty());
        assert!(bloch_boundary(&k).unwrap().is_empty());
    }

    #[test]
    fn boundary_of_two_glued_triangles() {
        let k = build_complex(&[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let b = manifold_boundary(&k).unwrap();
        assert_eq!(b.faces.len(), 4);
        assert!(!b.faces.contains(&simplex(&[1, 2])));
        // Bloch boundary coincides when every face has incidence <= 2.
        assert_eq!(bloch_boundary(&k).unwrap().faces, b.faces);
    }

    #[test]
    fn bloch_boundary_of_triple_book() {
        // Three triangles sharing the edge [0,1]: incidence 3 is odd, so the
        // shared edge is part of the Bloch boundary.
        let k = build_complex(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        let b = bloch_boundary(&k).unwrap();
        assert_eq!(b.faces.len(), 7);
        assert!(b.faces.contains(&simplex(&[0, 1])));
        assert_eq!(b.parity[&simplex(&[0, 1])], 3);
        let m = manifold_boundary(&k).unwrap();
        assert_eq!(m.faces.len(), 6);
    }

    #[test]
    fn non_pure_rejected_by_boundary() {
        let k = build_complex(&[vec![0, 1, 2], vec![2, 3]]).unwrap();
        assert!(matches!(manifold_boundary(&k), Err(Error::NotPure { .. })));
    }
}
