//! Outcomes, exit codes and atomic output.

use std::io::Write;
use std::path::Path;

use homres::adjres::AdjError;
use homres::completion::CompletionError;
use homres::freeadj::FreeAdjError;
use homres::scomplex::ScomplexError;
use homres::soa::SoaError;
use serde_json::Value;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

/// What a command produced: a report in both formats and its exit code.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

/// A command that stopped before producing a report.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Self { code: EXIT_PARSE, message: message.into() }
    }

    pub fn check(message: impl Into<String>) -> Self {
        Self { code: EXIT_CHECK, message: message.into() }
    }

    pub fn budget(message: impl Into<String>) -> Self {
        Self { code: EXIT_BUDGET, message: message.into() }
    }
}

impl From<ScomplexError> for Failure {
    fn from(e: ScomplexError) -> Self {
        match e {
            ScomplexError::BudgetExceeded { .. } => Self::budget(e.to_string()),
            ScomplexError::NotComposable | ScomplexError::EndpointMismatch => Self::check(e.to_string()),
            _ => Self::parse(e.to_string()),
        }
    }
}

impl From<SoaError> for Failure {
    fn from(e: SoaError) -> Self {
        match e {
            SoaError::Scomplex(inner) => inner.into(),
            SoaError::NotConverged { .. } => Self::budget(e.to_string()),
            SoaError::MissingFiller(_) => Self::check(e.to_string()),
            _ => Self::parse(e.to_string()),
        }
    }
}

impl From<AdjError> for Failure {
    fn from(e: AdjError) -> Self {
        match e {
            AdjError::Soa(inner) => inner.into(),
            AdjError::Scomplex(inner) => inner.into(),
            AdjError::TooLarge(_) => Self::budget(e.to_string()),
            AdjError::NotComposable(_) => Self::check(e.to_string()),
            AdjError::Invalid(_) => Self::parse(e.to_string()),
        }
    }
}

impl From<CompletionError> for Failure {
    fn from(e: CompletionError) -> Self {
        match e {
            CompletionError::Adj(inner) => inner.into(),
            CompletionError::TooLarge(_) => Self::budget(e.to_string()),
            CompletionError::NotAComplex(_) | CompletionError::Identity(_) => Self::check(e.to_string()),
            _ => Self::parse(e.to_string()),
        }
    }
}

impl From<FreeAdjError> for Failure {
    fn from(e: FreeAdjError) -> Self {
        Self::parse(e.to_string())
    }
}

pub fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

/// Write through a sibling temporary file and rename it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.tmp{}", std::process::id()));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}
