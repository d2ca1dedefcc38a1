use thiserror::Error;

use crate::model::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid ultragraph: {0}")]
    Validation(ValidationReport),

    #[error("unknown name `{name}`")]
    UnknownName { name: String },

    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("the given vertex set is not hereditary")]
    NotHereditary,

    #[error("invalid F: {0}")]
    InvalidF(String),

    #[error("the ultragraph has a cycle")]
    NotAcyclic,

    #[error("the cycle has an exit")]
    NotExitless,

    #[error("the index set of the cycle corner is not finite (enumeration exceeded {cap} paths)")]
    InfiniteLambda { cap: usize },

    #[error("expected exactly one cycle class, found {found}")]
    NotOneCycle { found: usize },

    #[error("path does not end at the base vertex of the cycle")]
    NotEndingAtBase,

    #[error("element is not in the corner ideal of the cycle: {0}")]
    NotInCorner(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Stable machine-readable code for JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse_error",
            Error::Validation(_) => "validation_error",
            Error::UnknownName { .. } => "unknown_name",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::NotHereditary => "not_hereditary",
            Error::InvalidF(_) => "invalid_f",
            Error::NotAcyclic => "not_acyclic",
            Error::NotExitless => "not_exitless",
            Error::InfiniteLambda { .. } => "infinite_lambda",
            Error::NotOneCycle { .. } => "not_one_cycle",
            Error::NotEndingAtBase => "not_ending_at_base",
            Error::NotInCorner(_) => "not_in_corner",
            Error::InternalInconsistency(_) => "internal_inconsistency",
        }
    }
}
