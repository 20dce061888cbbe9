use degcon::census::{CensusError, OracleError};
use degcon::{FamilyError, SampleError, SequenceError};
use serde::Serialize;

/// Exit codes: 1 usage, 2 infeasible input, 3 sampler exhaustion,
/// 4 oracle size guard.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Infeasible(String),
    Exhausted(String),
    TooLarge(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Infeasible(_) => 2,
            CliError::Exhausted(_) => 3,
            CliError::TooLarge(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Infeasible(_) => "infeasible",
            CliError::Exhausted(_) => "sampler_exhausted",
            CliError::TooLarge(_) => "too_large",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m)
            | CliError::Infeasible(m)
            | CliError::Exhausted(m)
            | CliError::TooLarge(m) => m,
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Body<'a> {
            kind: &'a str,
            message: &'a str,
            exit_code: i32,
        }
        #[derive(Serialize)]
        struct Wrapper<'a> {
            error: Body<'a>,
        }
        serde_json::to_string(&Wrapper {
            error: Body {
                kind: self.kind(),
                message: self.message(),
                exit_code: self.exit_code(),
            },
        })
        .expect("error serializes")
    }
}

impl From<SequenceError> for CliError {
    fn from(e: SequenceError) -> Self {
        match e {
            SequenceError::Parse(_) => CliError::Usage(e.to_string()),
            _ => CliError::Infeasible(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Parse(_) => CliError::Usage(e.to_string()),
            _ => CliError::Infeasible(e.to_string()),
        }
    }
}

impl From<SampleError> for CliError {
    fn from(e: SampleError) -> Self {
        match e {
            SampleError::AttemptsExhausted { .. } => CliError::Exhausted(e.to_string()),
            _ => CliError::Infeasible(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::TooLarge(e.to_string())
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::Sample(s) => s.into(),
            CensusError::Family(f) => f.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
