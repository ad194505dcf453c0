use thiserror::Error;
use zgkh::tqft::TqftError;
use zgkh::zigzag::ZigzagError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource cap: {0}")]
    Cap(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::Cap(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl From<TqftError> for CliError {
    fn from(e: TqftError) -> Self {
        match e {
            TqftError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            TqftError::PawnCount(_) => CliError::Invariant(e.to_string()),
            TqftError::Parse(m) => CliError::Parse(m),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<ZigzagError> for CliError {
    fn from(e: ZigzagError) -> Self {
        match e {
            ZigzagError::NoHomotopy(_) => CliError::Invariant(e.to_string()),
            ZigzagError::Parse(m) => CliError::Parse(m),
            _ => CliError::Parse(e.to_string()),
        }
    }
}
