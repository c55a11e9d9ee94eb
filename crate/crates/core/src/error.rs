use thiserror::Error;

/// Errors raised by the geometric and combinatorial constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero vector has no primitive representative")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix entry count {got} does not match {rows}x{cols}")]
    MatrixShape { rows: usize, cols: usize, got: usize },

    #[error("cone has {got} generators, expected a top-dimensional cone with {expected}")]
    NotTopDimensional { expected: usize, got: usize },

    #[error("cone generators are not a lattice basis (determinant {det})")]
    NotUnimodular { det: String },

    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,

    #[error("polytope is not full-dimensional (affine rank {rank} in ambient dimension {dim})")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("polytope is empty")]
    EmptyPolytope,

    #[error("divisor not globally generated at desk scale: section polytope is unbounded")]
    UnboundedSectionPolytope,

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("fan is not pure: maximal cone {cone} has {got} rays, expected {expected}")]
    NonPureFan { cone: usize, expected: usize, got: usize },

    #[error("fan is not smooth")]
    NotSmooth,

    #[error("polytope of ray generators is not reflexive")]
    NotReflexive,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("degree sum {got} does not match n + k + 1 = {expected}")]
    DegreeSum { expected: usize, got: usize },

    #[error("degeneration empty; no monodromy statement")]
    EmptyDegeneration,

    #[error("no maximal cone contains the rays {0:?}")]
    NoContainingCone(Vec<usize>),

    #[error("intersection oracle is inconsistent: {nonempty:?} is nonempty but its face {empty_face:?} is empty")]
    InconsistentOracle { nonempty: Vec<usize>, empty_face: Vec<usize> },

    #[error("coordinate ordering mismatch at variable positions {positions:?}: last variables must cut out the component")]
    CoordinateOrdering { positions: Vec<usize> },

    #[error("boundary of boundary is nonzero in degree {0}")]
    BoundarySquare(usize),

    #[error("hypersurface case required, partition has {0} blocks")]
    NotHypersurface(usize),

    #[error("variable count mismatch: {0} vs {1}")]
    VariableCount(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
