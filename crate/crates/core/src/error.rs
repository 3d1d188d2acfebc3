use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what}: size {size} exceeds the exhaustive bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("not a parking function: {0:?}")]
    NotParkingFunction(Vec<u32>),

    #[error("{text} contains the pattern {pattern}")]
    ContainsPattern { text: String, pattern: String },

    #[error("not a Cayley word: {0}")]
    NotCayleyWord(String),

    #[error("malformed path family: {0}")]
    MalformedFamily(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn check_bound(what: &'static str, size: usize, bound: usize) -> Result<()> {
        if size > bound {
            Err(Error::BoundExceeded { what, size, bound })
        } else {
            Ok(())
        }
    }
}
