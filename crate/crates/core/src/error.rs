use alloc::vec::Vec;

use crate::weyl::SignedPermutation;

pub type Result<T, E = WeylError> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("invalid rank {rank} for a factor of type {ty}")]
    InvalidRank { ty: &'static str, rank: usize },
    #[error("group descriptor has no factors")]
    EmptyDescriptor,
    #[error("window of length {found} does not fit a group acting on {expected} letters")]
    DescriptorMismatch { expected: usize, found: usize },
    #[error("invalid group element {window:?}: {reason}")]
    InvalidElement {
        window: Vec<i32>,
        reason: &'static str,
    },
    #[error("letter {0} is not valid for this rank")]
    InvalidIndex(i32),
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("vector lies on a chamber wall")]
    BoundaryPoint,
    #[error("vector is not in the ambient space (type A coordinates must sum to zero)")]
    NotInAmbient,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset is not a product of per-factor subsets")]
    NotAProduct,
    #[error("no unique minimal element at u = {u}: minimal set has {} elements", minimal.len())]
    NotAMatroidAt {
        u: SignedPermutation,
        minimal: Vec<SignedPermutation>,
    },
    #[error("{v} and {w} are not comparable in Bruhat order")]
    NotComparable {
        v: SignedPermutation,
        w: SignedPermutation,
    },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square")]
    NotSquare,
    #[error("two admissible Plücker tuples of size {size} have equal weight")]
    TieDetected { size: usize },
    #[error("limit tuples are not nested at size {size}")]
    NotNested { size: usize },
    #[error("gave up after {attempts} attempts")]
    GiveUp { attempts: usize },
    #[error("cone normal is the zero vector")]
    ZeroNormal,
    #[error("base point is fixed by a reflection")]
    DegenerateBase,
    #[error("operation needs {expected}, got {found}")]
    WrongShape {
        expected: &'static str,
        found: &'static str,
    },
    #[error("retraction table does not cover the group")]
    IncompleteTable,
    #[error("maximal cones have different lineality spaces")]
    InconsistentLineality,
    #[error("vector lies on a wall between cones with different images")]
    AmbiguousBoundary,
}
