use thiserror::Error;

/// Errors surfaced by the library. `Consistency` is reserved for internal
/// identities that are supposed to hold for every valid input; seeing it
/// means an implementation bug or a divergence between two computations that
/// certify each other.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system: kind {kind} with n = {n}")]
    UnsupportedSystem { kind: String, n: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a root of the system: {0}")]
    NotARoot(String),

    #[error("inconsistent affine system: the variety is empty")]
    EmptyVariety,

    #[error("functional {index} is constant on the subspace")]
    ConstantFunctional { index: usize },

    #[error("element does not stabilize the subsystem")]
    NotAStabilizer,

    #[error("element does not permute the base of the subsystem")]
    DoesNotFixBase,

    #[error("Weyl group enumeration would exceed the cap of {cap} elements")]
    GroupCapExceeded { cap: usize },

    #[error("weight is not dominant integral")]
    NotDominantIntegral,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
