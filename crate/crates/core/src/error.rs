use thiserror::Error;

use crate::logic::SemClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown atom `{name}` at offset {offset}")]
    UnknownAtom { name: String, offset: usize },

    #[error("invalid atom environment: {0}")]
    InvalidEnv(String),

    #[error("{what}: limit is {limit}, got {actual}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("objects built over different atom environments")]
    EnvMismatch,

    #[error("invalid rational ordering: {0}")]
    InvalidOrdering(String),

    #[error("relation does not induce a total preorder; witness pair {left} / {right}")]
    NotTotalPreorder { left: SemClass, right: SemClass },

    #[error("ordering has a single level; only an all-inconsistent chain induces it")]
    TrivialOrdering,

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("every theory of the chain is inconsistent")]
    NoConsistentTheory,

    #[error("the assertion does not hold in the ranked relation")]
    NotAConsequence,

    #[error("invalid default base: {0}")]
    InvalidBase(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("missing atom `{0}`")]
    MissingAtom(String),

    #[error("ranked evaluation and direct extension disagree: {0}")]
    CrossCheck(String),
}

impl Error {
    /// True for errors caused by malformed textual input.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::UnknownAtom { .. } | Error::Format { .. }
        )
    }
}
