use thiserror::Error;

/// Errors surfaced by schema construction, sketch configuration, and planning.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A key or part description does not fit the schema it was used with.
    #[error("schema violation: {0}")]
    Schema(String),

    /// A sketch could not be built from the given schema/config pair.
    #[error("construction error: {0}")]
    Construction(String),

    /// A range budget or partition parameter is unusable.
    #[error("configuration error: {0}")]
    Config(String),

    /// A sample-based estimate could not be computed.
    #[error("estimation error: {0}")]
    Estimation(String),

    /// A search-space cap or size limit was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// A serialized sketch or plan file is malformed.
    #[error("corrupt file: {0}")]
    CorruptFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
