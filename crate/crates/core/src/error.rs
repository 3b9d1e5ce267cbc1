use thiserror::Error;

pub type Result<T> = std::result::Result<T, WztError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WztError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("braid is not pure")]
    NotPure,

    #[error("braid does not lie in the kernel of the strand-forgetting map")]
    NotInKernel,

    #[error("handle reduction exceeded its step budget of {0}")]
    StepBudgetExceeded(u64),

    #[error("Magnus truncation cap {0} exceeded for a nontrivial word")]
    TruncationCap(usize),

    #[error("instance `{0}` carries no ordering")]
    Unordered(String),

    #[error("instance `{0}` is not pure")]
    ImpureInstance(String),

    #[error("element is not positive")]
    NotPositive,

    #[error("diagram middle is not the identity")]
    NotFElement,

    #[error("target tree is not an expansion of the source tree")]
    NotAnExpansion,

    #[error("unknown instance `{0}`")]
    UnknownInstance(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("instance mismatch: {0}")]
    InstanceMismatch(String),
}

impl WztError {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        WztError::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub(crate) fn check_index(index: usize, max: usize) -> Result<()> {
    if index == 0 || index > max {
        Err(WztError::IndexOutOfRange { index, max })
    } else {
        Ok(())
    }
}
