use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error("cache self-test failed: {0}")]
    CacheMismatch(String),

    #[error("output error: {0}")]
    Output(String),

    #[error(transparent)]
    Core(#[from] gstar::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Cache(_) => EXIT_CONFIG,
            CliError::Capacity(_) | CliError::Core(gstar::Error::Capacity { .. }) => EXIT_CAPACITY,
            CliError::CacheMismatch(_) => EXIT_VERIFICATION,
            CliError::Output(_) | CliError::Core(_) => EXIT_INTERNAL,
        }
    }
}
