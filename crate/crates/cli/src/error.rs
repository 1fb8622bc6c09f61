use thiserror::Error;

/// Failures surfaced to the user, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or invalid input, including exceeded resource caps.
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

impl From<nashjet::Error> for CliError {
    fn from(e: nashjet::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
