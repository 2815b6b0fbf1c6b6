use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("color {color} out of range for t = {t}")]
    ColorOutOfRange { color: usize, t: usize },

    #[error("color {color} is not chordal: induced hole {hole:?}")]
    NotChordal { color: usize, hole: Vec<usize> },

    #[error("graph is not chordal: induced hole {hole:?}")]
    NotChordalGraph { hole: Vec<usize> },

    #[error("precondition violated: {reason}")]
    Precondition {
        reason: String,
        witness: Option<Vec<usize>>,
    },

    /// A step that a theorem guarantees to succeed has failed. `instance`
    /// carries the offending coloring as JSON so the run can be reproduced.
    #[error("theorem violation: {what}")]
    TheoremViolation { what: String, instance: String },

    #[error("instance size {size} exceeds the exact-search limit {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("generator gave up after {attempts} attempts")]
    RetriesExhausted { attempts: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn precondition(reason: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        Error::Precondition {
            reason: reason.into(),
            witness,
        }
    }
}
