use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Domain(#[from] ktweb_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Malformed(_) => "MalformedInput",
            CliError::Io(_) => "Io",
            CliError::Domain(e) => match e {
                ktweb_core::Error::NonFinite { .. } => "NonFinite",
                ktweb_core::Error::DegenerateInput { .. } => "DegenerateInput",
                ktweb_core::Error::Incompatible => "Incompatible",
                ktweb_core::Error::DegreeOverflow { .. } => "DegreeOverflow",
                ktweb_core::Error::MetricMultiple => "MetricMultiple",
                ktweb_core::Error::InvalidArgument(_) => "InvalidArgument",
                ktweb_core::Error::ParseRational => "ParseRational",
            },
        }
    }

    /// 2 for domain errors, 1 for malformed input and I/O failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Malformed(_) | CliError::Io(_) => 1,
        }
    }
}
