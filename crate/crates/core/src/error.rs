use std::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Caller supplied an argument outside the operation's domain.
    #[error("invalid input: {0}")]
    Input(String),
    /// Malformed graph or witness text.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    /// A checked precondition of a lemma does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A solver or exhaustive search ran past its configured work budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// A lemma produced an outcome that its verifier rejects.
    #[error("verification failed: {0}")]
    Counterexample(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl fmt::Display) -> Self {
        Error::Input(msg.to_string())
    }

    pub(crate) fn parse(offset: usize, msg: impl fmt::Display) -> Self {
        Error::Parse { offset, message: msg.to_string() }
    }

    pub(crate) fn precondition(msg: impl fmt::Display) -> Self {
        Error::Precondition(msg.to_string())
    }

    pub(crate) fn resource(msg: impl fmt::Display) -> Self {
        Error::Resource(msg.to_string())
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Counterexample(_) => 1,
            Error::Input(_) | Error::Parse { .. } | Error::Precondition(_) => 2,
            Error::Resource(_) => 3,
        }
    }
}
