use thiserror::Error;

/// Error taxonomy shared by the whole workspace. The CLI maps variants to
/// stable exit codes: input problems to 2, capacity limits to 3, everything
/// that signals a broken computation to 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("coefficient domain error: {0}")]
    CoefficientDomain(String),
    #[error("chain complex integrity violated: {0}")]
    ComplexIntegrity(String),
    #[error("element is not invariant: {0}")]
    NonInvariant(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    /// Process exit code contract: 0 success, 1 failed check or broken
    /// internal invariant, 2 bad input, 3 capacity.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Input(_) | Error::CoefficientDomain(_) => 2,
            Error::Capacity(_) => 3,
            Error::ComplexIntegrity(_) | Error::NonInvariant(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
