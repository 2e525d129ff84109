use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index or parameter outside the declared range of an operation.
    #[error("{what} out of range: {detail}")]
    Range { what: &'static str, detail: String },

    /// Input outside the mathematical domain (zero weight, negative label, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no irreducible root system of type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },

    /// A quantity that must be an integer came out fractional.
    #[error("internal invariant violated: {0} is not an integer")]
    NotIntegral(String),

    /// The D-th and (D+1)-th finite differences of a coefficient stream did not vanish.
    #[error("pole order mismatch: D = {pole_order}, p_D = {p_d}, p_(D+1) = {p_d1}")]
    PoleOrderMismatch {
        pole_order: usize,
        p_d: String,
        p_d1: String,
    },

    /// A closed form disagreed with the computation it is supposed to reproduce.
    #[error("identity violated: {name}: {left} != {right}")]
    IdentityViolation {
        name: String,
        left: String,
        right: String,
    },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Range {
            what,
            detail: detail.into(),
        }
    }
}
