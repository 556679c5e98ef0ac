use thiserror::Error;

/// Errors surfaced by the beamforming toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// A function argument violates its precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configuration value is inconsistent or out of range.
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    /// A requested allocation would exceed the memory budget.
    #[error("capacity exceeded: required {required} bytes, available {available} bytes")]
    Capacity { required: u64, available: u64 },

    /// A metric region is empty or ill-formed.
    #[error("invalid region: {0}")]
    InvalidRegion(String),

    /// A profile never falls below half maximum inside the grid.
    #[error("width unbounded: profile never drops below half maximum along {axis}")]
    WidthUnbounded { axis: &'static str },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// A binary or text file does not match the expected format.
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn invalid_configuration(msg: impl Into<String>) -> Self {
        Error::InvalidConfiguration(msg.into())
    }
}
