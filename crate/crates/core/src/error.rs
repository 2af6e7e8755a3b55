use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matroid has a loop at element {0}; no Gallai or transitive coloring exists")]
    Loop(usize),

    #[error("oriented matroid is not acyclic (positive circuit on {0:?})")]
    NotAcyclic(Vec<usize>),

    #[error("{what} exceeds budget: {actual} > {limit}")]
    Budget {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    #[error("transitive mode requires an oriented matroid")]
    ModeMismatch,

    #[error("not a maximal {0} partition")]
    NotMaximal(&'static str),

    #[error("quasisymmetric function is not symmetric")]
    NotSymmetric,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("prime-field ranks disagree: {0}")]
    PrimeDisagreement(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn budget(what: &'static str, limit: u64, actual: u64) -> Self {
        Error::Budget {
            what,
            limit,
            actual,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
