use thiserror::Error;

use crate::algebra::Generator;
use crate::module::BasisVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no table in the search space passes both the Jacobi and module checks")]
    NoConsistentRepair,

    #[error("basis vector {vector} exceeds the truncation order K = {kmax}")]
    TruncationViolation { vector: BasisVector, kmax: u32 },

    #[error("subspace is not contained in the ambient subspace")]
    NotContained,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exact solve failed: {0}")]
    SolveFailed(String),

    #[error("incompatible coefficient modules: {0}")]
    TypeMismatch(String),

    #[error("no cocycle with the requested slot support: {0}")]
    NoCocycle(String),

    #[error("cochain is not a cocycle")]
    NotACocycle,

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("no single constant makes the values proportional for k = {0}")]
    NotProportional(u32),

    #[error("cochain value on {monomial} has the wrong parity or weight")]
    InhomogeneousValue { monomial: String },

    #[error("generator {0:?} is not an sl(2) generator")]
    NotSl2(Generator),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
