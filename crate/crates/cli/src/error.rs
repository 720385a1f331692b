use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, bad config file, conflicting parameter sets.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] hawking_cv::Error),
    #[error("cannot write {}: {source}", path.display())]
    Output {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot read {}: {source}", path.display())]
    Input {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        Self::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Input { .. } => 2,
            Self::Domain(_) => 3,
            Self::Output { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
