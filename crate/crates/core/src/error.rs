use crate::simplex::AbstractSimplex;
use thiserror::Error;

/// Errors raised by complex construction, geometric predicates and degree
/// computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("simplex has a duplicate vertex: {0:?}")]
    DuplicateVertex(Vec<usize>),

    #[error("empty vertex list is not a simplex")]
    EmptySimplex,

    #[error("vertex id {0} below the declared vertex count occurs in no simplex")]
    UnusedVertex(usize),

    #[error("vertex id {id} exceeds the declared vertex count {count}")]
    VertexOutOfRange { id: usize, count: usize },

    #[error("complex is not pure of dimension {expected}: {simplex} has dimension {found}")]
    NotPure {
        expected: usize,
        found: usize,
        simplex: AbstractSimplex,
    },

    #[error("face {face} is shared by {count} top simplices; at most 2 allowed")]
    NotPseudomanifold { face: AbstractSimplex, count: usize },

    #[error("complex is non-orientable: orientation propagation conflicts at face {0}")]
    NonOrientable(AbstractSimplex),

    #[error("complex has an empty boundary")]
    EmptyBoundary,

    #[error("complex has a non-empty boundary (face {0} lies in exactly one top simplex)")]
    NotClosed(AbstractSimplex),

    #[error("labeling covers {got} vertices but the complex has {expected}")]
    LabelCountMismatch { expected: usize, got: usize },

    #[error("label {label} out of range 0..={m}")]
    LabelOutOfRange { label: usize, m: usize },

    #[error("simplex {0} carries a full set of distinct labels")]
    FullLabelSimplex(AbstractSimplex),

    #[error("unsupported class representation: domain of dimension {0} has no computable degree here")]
    UnsupportedDimension(usize),

    #[error("labeling range m={m} does not match the required value {required}")]
    LabelRangeMismatch { m: usize, required: usize },

    #[error("point dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("query point lies on the image")]
    PointOnImage,

    #[error("internal degree cross-check failed: targets disagree ({0})")]
    DegreeCrossCheck(String),

    #[error("cover set {index} is not a valid simplex family: {reason}")]
    InvalidCoverSet { index: usize, reason: String },

    #[error("cover does not cover the ambient complex: {0} lies in no set")]
    NotCovering(AbstractSimplex),

    #[error("cover index counts differ: {left} vs {right}")]
    IndexCountMismatch { left: usize, right: usize },

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("the total intersection of the cover is non-empty (witness {0})")]
    TotalIntersectionNonempty(AbstractSimplex),

    #[error("partition weights invalid at vertex {vertex}: {reason}")]
    InvalidWeights { vertex: usize, reason: String },

    #[error("point carrier {0} is not a simplex of the ambient complex")]
    CarrierNotInAmbient(AbstractSimplex),

    #[error("boundary simplex {0} maps outside the polytope boundary")]
    BoundaryImageNotInPolytopeBoundary(AbstractSimplex),

    #[error("pebble search certified only {found} of the required {required} points")]
    PebbleSearchIncomplete { found: usize, required: usize },

    #[error("no generic facet point found after {0} candidates")]
    GenericPointSearchFailed(usize),

    #[error("polytope is not full-dimensional in R^{0}")]
    DegeneratePolytope(usize),

    #[error("{0}")]
    Unsupported(String),

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
