use thiserror::Error;

/// Errors raised by the arithmetic and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A value or an intermediate result does not fit the supported integer width.
    #[error("{what}: {value} exceeds the supported range (max {max})")]
    Range {
        what: &'static str,
        value: u128,
        max: u128,
    },
    /// An argument lies outside the domain of the operation (e.g. `n = 0` where `n >= 1` is required).
    #[error("{what}: {value} is outside the domain ({expected})")]
    Domain {
        what: &'static str,
        value: u128,
        expected: &'static str,
    },
    /// A representation violates the Zeckendorf index invariants.
    #[error("invalid representation: {0}")]
    InvalidRep(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn range(what: &'static str, value: impl Into<u128>, max: impl Into<u128>) -> Self {
        Error::Range {
            what,
            value: value.into(),
            max: max.into(),
        }
    }

    pub(crate) fn domain(
        what: &'static str,
        value: impl Into<u128>,
        expected: &'static str,
    ) -> Self {
        Error::Domain {
            what,
            value: value.into(),
            expected,
        }
    }
}
