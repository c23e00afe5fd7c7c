use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] lcd_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("unknown paper code `{0}`")]
    UnknownPaperCode(String),
    #[error("unknown table `{0}` (expected one of: {1})")]
    UnknownTable(String, String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
