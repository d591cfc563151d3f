//! Simplicial degrees of labelings: the degree of the induced map into the
//! boundary of the (n+1)-simplex, computed as a signed count of preimages
//! of a regular value in a target face and cross-checked over every target.

use crate::error::{Error, Result};
use crate::labeling::{max_label_check, Labeling};
use crate::orientation::{induced_boundary_orientation, OrientedComplex};
use crate::util::sign_by_inversions;
use serde::{Deserialize, Serialize};

/// A degree value together with the target face used and the values
/// obtained from every alternative target, which must all agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub value: i64,
    pub target_used: Vec<usize>,
    pub cross_checked: Vec<(Vec<usize>, i64)>,
}

/// Degree of the induced simplicial map from a closed oriented n-complex
/// into the boundary of the (n+1)-simplex, for a labeling into {0..n+1}
/// with no fully-labeled simplex.
///
/// For the target face omitting label t, the value is
/// `(-1)^t * sum sign(s) * sign(label permutation)` over the n-simplices
/// whose label set is exactly the target's; the leading factor is the
/// orientation of the target face inside the boundary sphere. Degenerate
/// simplices (repeated labels) never hit a regular value and contribute
/// nothing.
pub fn degree_labeling(oriented: &OrientedComplex, labeling: &Labeling) -> Result<DegreeReport> {
    let n = oriented.dimension();
    if labeling.m != n + 1 {
        return Err(Error::LabelRangeMismatch {
            m: labeling.m,
            required: n + 1,
        });
    }
    let complex = oriented.complex();
    labeling.check_covers(complex)?;
    let verdict = max_label_check(complex, labeling)?;
    if let Some(offender) = verdict.offenders.first() {
        return Err(Error::FullLabelSimplex(offender.clone()));
    }
    let boundary = crate::complex::manifold_boundary(complex)?;
    if let Some(face) = boundary.faces.iter().next() {
        return Err(Error::NotClosed(face.clone()));
    }
    let m = labeling.m;
    let mut cross_checked = Vec::with_capacity(m + 1);
    for omitted in (0..=m).rev() {
        let target: Vec<usize> = (0..=m).filter(|&l| l != omitted).collect();
        let face_sign: i64 = if omitted % 2 == 0 { 1 } else { -1 };
        let mut value = 0i64;
        for (s, g) in oriented.signs() {
            let seq = labeling.label_sequence(s);
            let mut set = seq.clone();
            set.sort_unstable();
            set.dedup();
            if set != target {
                continue;
            }
            value += face_sign * i64::from(g) * i64::from(sign_by_inversions(&seq));
        }
        cross_checked.push((target, value));
    }
    let value = cross_checked[0].1;
    if cross_checked.iter().any(|(_, v)| *v != value) {
        return Err(Error::DegreeCrossCheck(format!("{cross_checked:?}")));
    }
    Ok(DegreeReport {
        value,
        target_used: cross_checked[0].0.clone(),
        cross_checked,
    })
}

/// Degree of the labeling restricted to the boundary of an oriented
/// complex, with the induced boundary orientation.
pub fn boundary_degree(oriented: &OrientedComplex, labeling: &Labeling) -> Result<DegreeReport> {
    if labeling.m != oriented.dimension() {
        return Err(Error::LabelRangeMismatch {
            m: labeling.m,
            required: oriented.dimension(),
        });
    }
    let boundary = induced_boundary_orientation(oriented)?;
    degree_labeling(&boundary, labeling)
}

/// Counts of fully-labeled top simplices of an oriented n-complex under a
/// labeling into {0..n}: the unsigned count and the signed count of
/// preimages of an interior regular value of the n-simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullyLabeledCount {
    pub unsigned: u64,
    pub signed: i64,
}

pub fn signed_fully_labeled_count(
    oriented: &OrientedComplex,
    labeling: &Labeling,
) -> Result<FullyLabeledCount> {
    let n = oriented.dimension();
    if labeling.m != n {
        return Err(Error::LabelRangeMismatch {
            m: labeling.m,
            required: n,
        });
    }
    labeling.check_covers(oriented.complex())?;
    let full: Vec<usize> = (0..=n).collect();
    let mut unsigned = 0u64;
    let mut signed = 0i64;
    for (s, g) in oriented.signs() {
        let seq = labeling.label_sequence(s);
        let mut set = seq.clone();
        set.sort_unstable();
        set.dedup();
        if set != full {
            continue;
        }
        unsigned += 1;
        signed += i64::from(g) * i64::from(sign_by_inversions(&seq));
    }
    Ok(FullyLabeledCount { unsigned, signed })
}
