use std::fmt;
use std::process::ExitCode;

/// A failed run, classified by exit code.
#[derive(Debug)]
pub enum Failure {
    /// Unreadable, unparsable or unwritable files. Exit code 2.
    Input(anyhow::Error),
    /// Inputs that parse but are rejected. Exit code 3.
    Invalid(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Input(_) => ExitCode::from(2),
            Failure::Invalid(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(e) | Failure::Invalid(e) => write!(f, "{e:#}"),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

pub trait Classify<T> {
    fn input(self, context: impl fmt::Display) -> CliResult<T>;
    fn invalid(self, context: impl fmt::Display) -> CliResult<T>;
}

impl<T, E> Classify<T> for Result<T, E>
where
    E: Into<anyhow::Error>,
{
    fn input(self, context: impl fmt::Display) -> CliResult<T> {
        self.map_err(|e| Failure::Input(e.into().context(context.to_string())))
    }

    fn invalid(self, context: impl fmt::Display) -> CliResult<T> {
        self.map_err(|e| Failure::Invalid(e.into().context(context.to_string())))
    }
}

pub fn invalid<T>(message: impl fmt::Display) -> CliResult<T> {
    Err(Failure::Invalid(anyhow::anyhow!("{message}")))
}
