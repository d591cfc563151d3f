use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::orientation::OrientedComplex;
use crate::simplex::AbstractSimplex;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A complex obtained by iterated barycentric subdivision, with the carrier
/// of each vertex: the simplex of the original complex in whose relative
/// interior the vertex sits.
///
/// Vertices of the original complex keep their ids and carry themselves;
/// each subdivision round assigns fresh ids (in lexicographic order of the
/// subdivided simplices) to the new barycenters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub carriers: Vec<AbstractSimplex>,
}

/// One barycentric subdivision round. `carriers` maps current vertex ids to
/// original simplices; the returned map covers the new vertex set.
fn subdivide_once(
    complex: &SimplicialComplex,
    carriers: &[AbstractSimplex],
) -> (SimplicialComplex, Vec<AbstractSimplex>) {
    // New vertex ids: 0-simplices keep their id; every simplex of dimension
    // >= 1 becomes a fresh vertex, numbered from vertex_count in the order
    // of the simplex set.
    let all = complex.all_simplices();
    let mut ids: BTreeMap<AbstractSimplex, usize> = BTreeMap::new();
    let mut new_carriers: Vec<AbstractSimplex> = carriers.to_vec();
    let mut next = complex.vertex_count();
    for s in &all {
        if s.dimension() == 0 {
            ids.insert(s.clone(), s.vertices()[0]);
        } else {
            ids.insert(s.clone(), next);
            // Carrier of a barycenter: union of the carriers of its vertices.
            let carrier = s
                .vertices()
                .iter()
                .map(|&v| carriers[v].clone())
                .reduce(|a, b| a.union(&b))
                .unwrap();
            new_carriers.push(carrier);
            next += 1;
        }
    }
    // Top simplices: full flags of each maximal simplex, one per permutation
    // of its vertices.
    let mut tops = Vec::new();
    for t in complex.maximal_simplices() {
        let n = t.vertices().len();
        for perm in t.vertices().iter().copied().permutations(n) {
            let mut chain = Vec::with_capacity(n);
            let mut prefix: Vec<usize> = Vec::with_capacity(n);
            for v in perm {
                prefix.push(v);
                let mut sorted = prefix.clone();
                sorted.sort_unstable();
                chain.push(ids[&AbstractSimplex::from_sorted(sorted)]);
            }
            chain.sort_unstable();
            tops.push(AbstractSimplex::from_sorted(chain));
        }
    }
    (
        SimplicialComplex::from_maximal_unchecked(tops),
        new_carriers,
    )
}

/// Iterated barycentric subdivision with vertex provenance. Depth 0 returns
/// the complex unchanged with each vertex carrying itself.
pub fn barycentric_subdivision(complex: &SimplicialComplex, depth: usize) -> Subdivision {
    let mut current = complex.clone();
    let mut carriers: Vec<AbstractSimplex> =
        (0..complex.vertex_count()).map(AbstractSimplex::vertex).collect();
    for _ in 0..depth {
        let (next, next_carriers) = subdivide_once(&current, &carriers);
        current = next;
        carriers = next_carriers;
    }
    Subdivision {
        complex: current,
        carriers,
    }
}

/// Barycentric subdivision of an oriented complex; every flag simplex
/// inherits the orientation of the top simplex it subdivides.
pub fn barycentric_subdivision_oriented(
    oriented: &OrientedComplex,
    depth: usize,
) -> Result<(OrientedComplex, Vec<AbstractSimplex>)> {
    let mut current = oriented.clone();
    let mut carriers: Vec<AbstractSimplex> = (0..oriented.complex().vertex_count())
        .map(AbstractSimplex::vertex)
        .collect();
    for _ in 0..depth {
        let (next, next_carriers) = subdivide_once_oriented(&current, &carriers);
        current = next;
        carriers = next_carriers;
    }
    Ok((current, carriers))
}

fn subdivide_once_oriented(
    oriented: &OrientedComplex,
    carriers: &[AbstractSimplex],
) -> (OrientedComplex, Vec<AbstractSimplex>) {
    let complex = oriented.complex();
    let all = complex.all_simplices();
    let mut ids: BTreeMap<AbstractSimplex, usize> = BTreeMap::new();
    let mut new_carriers: Vec<AbstractSimplex> = carriers.to_vec();
    let mut next = complex.vertex_count();
    for s in &all {
        if s.dimension() == 0 {
            ids.insert(s.clone(), s.vertices()[0]);
        } else {
            ids.insert(s.clone(), next);
            let carrier = s
                .vertices()
                .iter()
                .map(|&v| carriers[v].clone())
                .reduce(|a, b| a.union(&b))
                .unwrap();
            new_carriers.push(carrier);
            next += 1;
        }
    }
    let mut tops = Vec::new();
    let mut signs: BTreeMap<AbstractSimplex, i8> = BTreeMap::new();
    for t in complex.maximal_simplices() {
        let n = t.vertices().len();
        let parent_sign = oriented.sign(t);
        for perm in (0..n).permutations(n) {
            // The flag simplex in chain order is oriented like the parent
            // times the sign of the permutation assembling the chain.
            let perm_sign = permutation_sign(&perm);
            let mut chain = Vec::with_capacity(n);
            let mut prefix: Vec<usize> = Vec::with_capacity(n);
            for &i in &perm {
                prefix.push(t.vertices()[i]);
                let mut sorted = prefix.clone();
                sorted.sort_unstable();
                chain.push(ids[&AbstractSimplex::from_sorted(sorted)]);
            }
            // Convert from chain order to sorted-id reference order.
            let sort_sign = sort_permutation_sign(&chain);
            let mut sorted_chain = chain.clone();
            sorted_chain.sort_unstable();
            let flag = AbstractSimplex::from_sorted(sorted_chain);
            signs.insert(flag.clone(), parent_sign * perm_sign * sort_sign);
            tops.push(flag);
        }
    }
    (
        OrientedComplex::new_unchecked(SimplicialComplex::from_maximal_unchecked(tops), signs),
        new_carriers,
    )
}

/// Parity of a permutation given as the image sequence of 0..n.
fn permutation_sign(perm: &[usize]) -> i8 {
    crate::util::sign_by_inversions(perm)
}

/// Sign of the permutation that sorts `values` ascending (values distinct).
fn sort_permutation_sign(values: &[usize]) -> i8 {
    crate::util::sign_by_inversions(values)
}
