use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("unknown output format {0:?} (expected json, csv or markdown)")]
    UnknownFormat(String),
    #[error("could not parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("bad matrix file: {0}")]
    BadMatrix(String),
    #[error(transparent)]
    Core(#[from] monomial_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
