use std::io;

/// Process exit statuses shared by every subcommand and output format.
pub mod exit {
    pub const OK: u8 = 0;
    pub const MISMATCH: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const RESOURCE: u8 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] blore_core::Error),

    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Resource(String),

    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),

    #[error("cannot encode JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("cannot encode CSV: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Core(blore_core::Error::LengthLimit { .. }) | Error::Resource(_) => {
                exit::RESOURCE
            }
            Error::Core(_) | Error::Input(_) | Error::Io(_) => exit::INPUT,
            Error::Json(_) | Error::Csv(_) => exit::INPUT,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
