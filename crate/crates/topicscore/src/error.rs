use std::path::Path;

use topicscore_core::Error as CoreError;

/// Error categories of a run. Each maps to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("output error: {0}")]
    Output(String),
}

impl Error {
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Input(_) => 2,
            Error::Config(_) => 3,
            Error::Output(_) => 4,
        }
    }

    pub(crate) fn read(path: &Path, err: std::io::Error) -> Self {
        Error::Input(format!("cannot read {}: {err}", path.display()))
    }

    pub(crate) fn write(path: &Path, err: impl std::fmt::Display) -> Self {
        Error::Output(format!("cannot write {}: {err}", path.display()))
    }

    pub(crate) fn config_file(path: &Path, err: impl std::fmt::Display) -> Self {
        Error::Config(format!("{}: {err}", path.display()))
    }
}

impl From<CoreError> for Error {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::EmptyVocabulary => Error::Input(err.to_string()),
            _ => Error::Config(err.to_string()),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
