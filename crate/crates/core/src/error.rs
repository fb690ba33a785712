use thiserror::Error;

use crate::point::LatticePoint3;

/// Errors raised by the geometry kernels.
///
/// Arithmetic never wraps: anything that would leave the 64-bit working
/// range surfaces as [`Error::Overflow`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("point configuration is empty")]
    EmptyConfiguration,
    #[error("duplicate point {0}")]
    DuplicatePoint(LatticePoint3),
    #[error("expected affine dimension {expected}, found {found}")]
    Dimension { expected: &'static str, found: usize },
    #[error("expected {expected} points, found {found}")]
    Size { expected: &'static str, found: usize },
    #[error("functional is constant on the configuration")]
    ConstantFunctional,
    #[error("the four points are coplanar")]
    Coplanar,
    #[error("the tetrahedron is not empty")]
    NotEmpty,
    #[error("{0} is not a vertex of the polytope")]
    NotAVertex(LatticePoint3),
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("vector {0} is not primitive")]
    NotPrimitive(LatticePoint3),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("bounding box too large to scan ({0} lattice points)")]
    TooLarge(u128),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
