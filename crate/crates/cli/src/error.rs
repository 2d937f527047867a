use monopole_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid {field} at byte {position}: {message}")]
    Parse {
        field: String,
        position: usize,
        message: String,
    },

    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Integrality(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn parse(field: &str, position: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            field: field.to_string(),
            position,
            message: message.into(),
        }
    }

    /// 2 for bad input, 3 for a charge off the coroot lattice, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Input(_) => 2,
            CliError::Integrality(_) => 3,
            CliError::Io(_) => 1,
            CliError::Core(e) => match e {
                CoreError::NotIntegral => 3,
                CoreError::RouteMismatch(_) => 1,
                _ => 2,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
