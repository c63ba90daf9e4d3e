use thiserror::Error;

/// Library-wide error type. The three variants map onto the CLI exit codes
/// 1 (input), 2 (resource), 3 (internal).
#[derive(Debug, Error)]
pub enum Error {
    /// The caller handed us something malformed: bad file, unknown vertex,
    /// loop edge, invalid theta spec, and so on.
    #[error("input error: {0}")]
    Input(String),

    /// A configured cap was exceeded (enumeration size, path-tree size,
    /// factoring effort). The computation was abandoned, not wrong.
    #[error("resource limit: {0}")]
    Resource(String),

    /// An identity that must hold by theorem failed, or an internal
    /// consistency check tripped. Indicates a bug, never a caller error.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 1,
            Error::Resource(_) => 2,
            Error::Internal(_) => 3,
        }
    }
}
