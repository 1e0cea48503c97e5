use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input (bad ids, missing faces, bad files).
    #[error("input error: {0}")]
    Input(String),

    /// A catalog entry that could not be read or validated.
    #[error("catalog line {line}{}: {message}", fmt_id(.id))]
    Catalog {
        line: usize,
        id: Option<String>,
        message: String,
    },

    /// A size limit of one of the exhaustive algorithms was exceeded.
    #[error("capacity error: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A face family that is not the face lattice of a polytope.
    #[error("not a polytopal incidence: {reason}{}", fmt_face(.face))]
    NotPolytopal {
        reason: String,
        face: Option<Vec<usize>>,
    },

    /// Two vertices share a dot product with the functional.
    #[error("degenerate functional: vertices {0} and {1} have equal value")]
    Degenerate(usize, usize),

    /// The graph has too many non-simple vertices for the available algorithms.
    #[error("not supported: graph is {h}-nearly simple; counterexamples exist at h=3")]
    Unsupported { h: usize },

    /// A stage of a reconstruction pipeline produced an invalid intermediate.
    #[error("reconstruction failed at {stage}: {detail}")]
    ReconstructionFailed { stage: &'static str, detail: String },
}

fn fmt_face(face: &Option<Vec<usize>>) -> String {
    match face {
        Some(f) => format!(" (face {f:?})"),
        None => String::new(),
    }
}

fn fmt_id(id: &Option<String>) -> String {
    match id {
        Some(id) => format!(" (entry {id})"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn not_polytopal(reason: impl Into<String>, face: Option<Vec<usize>>) -> Self {
        Error::NotPolytopal {
            reason: reason.into(),
            face,
        }
    }

    pub(crate) fn failed(stage: &'static str, err: impl std::fmt::Display) -> Self {
        Error::ReconstructionFailed {
            stage,
            detail: err.to_string(),
        }
    }
}
