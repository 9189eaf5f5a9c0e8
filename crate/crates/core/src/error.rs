use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid linear transform: {0}")]
    InvalidTransform(String),
    #[error("invalid hyperplane section: {0}")]
    InvalidSection(String),
    #[error("invalid term ordering: {0}")]
    InvalidOrdering(String),
    #[error("ideal is not stable")]
    NotStable,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("distraction matrix construction failed: {0}")]
    Construction(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("ambiguous gin: no majority among {trials} trials")]
    AmbiguousGin { trials: usize },
    #[error("homogeneity required: {0}")]
    NotHomogeneous(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
