use thiserror::Error;

/// Errors produced by construction and computation routines.
///
/// Every fallible operation in this crate returns one of these instead of
/// panicking, so the CLI can map failures onto its exit-code contract.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} is outside the ground set [1, {1}]")]
    InvalidVertex(usize, usize),

    #[error("ground set size {0} exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),

    #[error("{0} is not a simplex of the complex")]
    NotASimplex(String),

    #[error("invalid connected sum: {0}")]
    InvalidConnectedSum(String),

    #[error("complex is not a simplicial 2-sphere: {0}")]
    NotASphere(String),

    #[error("linear system has no solution")]
    NoSolution,

    #[error("operation requires torsion-free homology but torsion was found: {0}")]
    TorsionUnsupported(String),

    #[error("complex has no fundamental class over the requested coefficients: {0}")]
    NoFundamentalClass(String),

    #[error("graded algebra is not a Poincare duality candidate: {0}")]
    NotPoincareCandidate(String),

    #[error("graded algebra has no top degree")]
    NoTopDegree,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("{0}")]
    NotFound(String),

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operation only defined for simplicial input: {0}")]
    NotSimplicial(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
