//! Errors of the IO layer; core geometry errors are wrapped unchanged.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Malformed JSON or a document not matching the schema.
    Schema(String),
    /// A coordinate string that is not a reduced rational.
    BadRational(String),
    /// Anything the geometry core rejects.
    Core(winding_core::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Schema(msg) => write!(f, "schema error: {msg}"),
            CliError::BadRational(s) => write!(f, "bad rational: {s:?}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<winding_core::Error> for CliError {
    fn from(e: winding_core::Error) -> CliError {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}
