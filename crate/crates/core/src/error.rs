use crate::grassmann::Parity;
use thiserror::Error;

/// Every failure the algebra layer can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator count mismatch: {left} vs {right}")]
    GeneratorMismatch { left: usize, right: usize },
    #[error("at most {max} generators are supported, got {n}")]
    TooManyGenerators { n: usize, max: usize },
    #[error("generator index {index} is outside 1..={n}")]
    BladeOutOfRange { index: usize, n: usize },
    #[error("blade indices must be strictly increasing")]
    BladeNotIncreasing,
    #[error("invalid rational coefficient {0:?}")]
    BadCoefficient(String),
    #[error("element has zero body and is not invertible")]
    NotInvertible,
    #[error("Berezinian undefined: body of b is zero")]
    BerUndefined,
    #[error("inverse Berezinian undefined: body of a is zero")]
    BerInvUndefined,
    #[error("entry {entry} must be {expected:?}, found {found:?}")]
    ParityViolation {
        entry: &'static str,
        expected: Parity,
        found: Parity,
    },
    #[error("matrix is not a member of {0}")]
    NotMember(&'static str),
    #[error("band elements differ in kind or odd generator")]
    BandMismatch,
    #[error("odd generator of a band element must be nonzero")]
    ZeroBandGenerator,
    #[error("matrix is neither even-reduced nor odd-reduced")]
    NotReduced,
    #[error("sandwich element has the wrong shape: expected {0}")]
    BadSandwich(&'static str),
    #[error("no eigenvector for the requested branch")]
    NoEigenvector,
}

impl AlgebraError {
    /// Stable identifier used in machine-readable error objects.
    pub fn code(&self) -> &'static str {
        match self {
            AlgebraError::GeneratorMismatch { .. } => "GeneratorMismatch",
            AlgebraError::TooManyGenerators { .. } => "TooManyGenerators",
            AlgebraError::BladeOutOfRange { .. } => "BladeOutOfRange",
            AlgebraError::BladeNotIncreasing => "BladeNotIncreasing",
            AlgebraError::BadCoefficient(_) => "BadCoefficient",
            AlgebraError::NotInvertible => "NotInvertible",
            AlgebraError::BerUndefined => "BerUndefined",
            AlgebraError::BerInvUndefined => "BerInvUndefined",
            AlgebraError::ParityViolation { .. } => "ParityViolation",
            AlgebraError::NotMember(_) => "NotMember",
            AlgebraError::BandMismatch => "BandMismatch",
            AlgebraError::ZeroBandGenerator => "ZeroBandGenerator",
            AlgebraError::NotReduced => "NotReduced",
            AlgebraError::BadSandwich(_) => "BadSandwich",
            AlgebraError::NoEigenvector => "NoEigenvector",
        }
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
