use thiserror::Error;

use crate::rootsys::Family;

pub type Result<T> = std::result::Result<T, Error>;

/// Which solver budget was blown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BudgetBreach {
    SubsetSize { size: usize, max: usize },
    TableEntries { needed: usize, max: usize },
    WallClock,
}

impl std::fmt::Display for BudgetBreach {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BudgetBreach::SubsetSize { size, max } => {
                write!(f, "subset size {size} exceeds limit {max}")
            }
            BudgetBreach::TableEntries { needed, max } => {
                write!(f, "table would need {needed} entries, limit {max}")
            }
            BudgetBreach::WallClock => write!(f, "wall clock cap hit"),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("inadmissible rank {rank} for family {family}")]
    InadmissibleRank { family: Family, rank: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("root index {index} out of range (positive root count {count})")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("identical positive roots (index {index})")]
    IdenticalRoots { index: usize },

    #[error("label mismatch: expected {expected}, got {got}")]
    LabelMismatch { expected: String, got: String },

    #[error("solver budget exceeded: {0}")]
    BudgetExceeded(BudgetBreach),

    #[error("subset is already well-balanced")]
    AlreadyWellBalanced,

    #[error("signed combination is not a witness for the given subset: {reason}")]
    InvalidWitness { reason: String },

    #[error("argument does not apply to {family}: {reason}")]
    NotApplicable { family: Family, reason: String },

    #[error("certificate failed verification: {reason}")]
    CertificateInvalid { reason: String },

    #[error("subset spec parse error: {reason}")]
    SpecParse { reason: String },

    #[error("malformed serialized document: {reason}")]
    Deserialize { reason: String },

    #[error("internal consistency failure: {reason}")]
    Internal { reason: String },
}

impl Error {
    pub(crate) fn internal(reason: impl Into<String>) -> Self {
        Error::Internal {
            reason: reason.into(),
        }
    }

    pub(crate) fn invalid_witness(reason: impl Into<String>) -> Self {
        Error::InvalidWitness {
            reason: reason.into(),
        }
    }

    pub(crate) fn cert(reason: impl Into<String>) -> Self {
        Error::CertificateInvalid {
            reason: reason.into(),
        }
    }
}
