use std::path::PathBuf;

/// Errors of the IO layer; wraps the algorithmic core's errors.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] mhgr_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("group spec error at position {pos}: expected {expected}, found {found}")]
    Spec { pos: usize, expected: String, found: String },
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Core(mhgr_core::Error::Capacity { .. }))
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Error {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn read_to_string(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}
