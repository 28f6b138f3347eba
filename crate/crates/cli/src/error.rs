use superu_core::cohomology::CohomologyError;
use superu_core::enveloping::EnvelopingError;
use superu_core::linalg::LinalgError;
use superu_core::liesuper::LieError;
use superu_core::repcat::RepError;
use superu_core::varieties::VarietyError;
use thiserror::Error;

/// Exit code for malformed input, bad flags and requests the engine rejects.
pub const EXIT_INVALID_INPUT: i32 = 1;
/// Exit code when a size or cochain budget would be exceeded.
pub const EXIT_BUDGET: i32 = 2;
/// Exit code when a computed result violates an invariant the engine guarantees.
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invariant violated ({invariant}): {detail}")]
    Invariant { invariant: String, detail: String },
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> CliError {
        CliError::Input(msg.into())
    }

    pub fn invariant(invariant: impl Into<String>, detail: impl Into<String>) -> CliError {
        CliError::Invariant { invariant: invariant.into(), detail: detail.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INVALID_INPUT,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Invariant { .. } => EXIT_INVARIANT,
        }
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<EnvelopingError> for CliError {
    fn from(e: EnvelopingError) -> Self {
        match e {
            EnvelopingError::TooLarge { .. } => CliError::Budget(e.to_string()),
            EnvelopingError::AxiomsFailed(_) | EnvelopingError::BadGenerator(_) => CliError::Input(e.to_string()),
            EnvelopingError::NotNilpotent { .. } => CliError::invariant("augmentation nilpotency", e.to_string()),
            EnvelopingError::NoPbw | EnvelopingError::Internal(_) => CliError::invariant("enveloping algebra", e.to_string()),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::EnlargeField { degree } => CliError::Input(format!(
                "{e}; rerun with --field-ext {degree} (or a multiple of {degree})"
            )),
            RepError::Unsupported(_) | RepError::NeedsHopf => CliError::Input(e.to_string()),
            _ => CliError::invariant("module category", e.to_string()),
        }
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        match e {
            CohomologyError::Rep(r) => r.into(),
            CohomologyError::Budget { .. } => CliError::Budget(e.to_string()),
            CohomologyError::Invariant(_) => CliError::invariant("cohomology", e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<VarietyError> for CliError {
    fn from(e: VarietyError) -> Self {
        match e {
            VarietyError::Cohomology(c) => c.into(),
            VarietyError::Rep(r) => r.into(),
            VarietyError::ZeroClass | VarietyError::BadDegree(_) => CliError::Input(e.to_string()),
        }
    }
}
